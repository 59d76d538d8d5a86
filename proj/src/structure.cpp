#include "chromsh/structure.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <string>

#include "chromsh/error.hpp"
#include "chromsh/les.hpp"

namespace chromsh {

namespace {

void fill_betti(HomologyTable& t) {
    t.betti.clear();
    if (t.modules.empty()) return;
    const auto table = character_table(t.num_points, kHardMaxPoints);
    for (const auto& [bideg, mults] : t.modules) {
        std::size_t dim = 0;
        for (const auto& [lambda, mult] : mults) dim += static_cast<std::size_t>(mult) * table->dimension(lambda);
        t.betti[bideg] = dim;
    }
}

std::string describe(const HomologyTable& t) {
    std::string out;
    for (const auto& [bideg, mults] : t.modules) {
        out += "H(" + std::to_string(bideg.first) + "," + std::to_string(bideg.second) + ")=";
        for (const auto& [lambda, mult] : mults) out += lambda.to_string() + "x" + std::to_string(mult);
        out += " ";
    }
    return out.empty() ? "0" : out;
}

TheoremCheck compare(const std::string& name, const HomologyTable& direct, const HomologyTable& predicted) {
    const bool same = same_modules(direct, predicted);
    return {name, same, same ? "" : "direct " + describe(direct) + "vs predicted " + describe(predicted)};
}

std::optional<std::pair<EdgeIndex, EdgeIndex>> parallel_pair(const VertexWeightedGraph& g) {
    for (EdgeIndex a = 0; a < g.num_edges(); ++a) {
        const Edge& x = g.edge(a);
        if (x.is_loop()) continue;
        for (EdgeIndex b = a + 1; b < g.num_edges(); ++b) {
            const Edge& y = g.edge(b);
            if ((x.u == y.u && x.v == y.v) || (x.u == y.v && x.v == y.u)) return std::make_pair(a, b);
        }
    }
    return std::nullopt;
}

bool is_simple(const VertexWeightedGraph& g) { return !g.has_loop() && !parallel_pair(g); }

}  // namespace

HomologyTable disjoint_union_table(const HomologyTable& a, const HomologyTable& b) {
    HomologyTable out;
    out.num_points = a.num_points + b.num_points;
    out.max_index = a.max_index + b.max_index;
    out.max_degree = out.num_points - 1;
    for (const auto& [da, ma] : a.modules) {
        for (const auto& [db, mb] : b.modules) {
            SymFunc product(Basis::Schur);
            for (const auto& [la, ca] : ma) {
                for (const auto& [lb, cb] : mb) {
                    product += multiply(SymFunc(Basis::Schur, la, ca), SymFunc(Basis::Schur, lb, cb), kHardMaxPoints);
                }
            }
            const Bidegree target{da.first + db.first, da.second + db.second};
            for (const auto& [nu, c] : product.terms()) {
                if (c.get_den() != 1 || c < 0) throw InvariantViolation("induction product is not a module");
                out.modules[target][nu] += static_cast<int>(c.get_num().get_si());
            }
        }
    }
    fill_betti(out);
    return out;
}

HomologyTable add_isolated_unit_vertex(const HomologyTable& t) {
    HomologyTable out;
    out.num_points = t.num_points + 1;
    out.max_index = t.max_index;
    out.max_degree = out.num_points - 1;
    for (const auto& [bideg, mults] : t.modules) {
        for (const auto& [lambda, mult] : mults) {
            for (const Partition& mu : add_one_box(lambda)) out.modules[bideg][mu] += mult;
        }
    }
    fill_betti(out);
    return out;
}

bool same_modules(const HomologyTable& a, const HomologyTable& b) { return a.modules == b.modules; }

VertexWeightedGraph induced_subgraph(const VertexWeightedGraph& g, const std::vector<VertexIndex>& vertices) {
    std::vector<int> position(static_cast<std::size_t>(g.num_vertices()), -1);
    std::vector<std::string> ids;
    std::vector<int> weights;
    for (std::size_t k = 0; k < vertices.size(); ++k) {
        position.at(static_cast<std::size_t>(vertices[k])) = static_cast<int>(k);
        ids.push_back(g.ids()[static_cast<std::size_t>(vertices[k])]);
        weights.push_back(g.weight(vertices[k]));
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        const int u = position[static_cast<std::size_t>(e.u)];
        const int v = position[static_cast<std::size_t>(e.v)];
        if (u >= 0 && v >= 0) edges.push_back({u, v});
    }
    return VertexWeightedGraph(std::move(ids), std::move(weights), std::move(edges));
}

std::vector<VertexWeightedGraph> connected_simple_graphs(int n) {
    if (n < 1 || n > 6) throw BoundError("graph enumeration supports 1 <= n <= 6");
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    }
    std::vector<std::vector<int>> slot_of(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (std::size_t s = 0; s < slots.size(); ++s) {
        slot_of[static_cast<std::size_t>(slots[s].first)][static_cast<std::size_t>(slots[s].second)] = static_cast<int>(s);
        slot_of[static_cast<std::size_t>(slots[s].second)][static_cast<std::size_t>(slots[s].first)] = static_cast<int>(s);
    }
    std::vector<std::vector<int>> perms;
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::set<std::pair<int, std::uint32_t>> classes;  // (edge count, canonical mask)
    const std::uint32_t total = std::uint32_t{1} << slots.size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        // connectivity by flood fill
        std::uint32_t seen = 1;
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::size_t s = 0; s < slots.size(); ++s) {
                if (!((mask >> s) & 1u)) continue;
                const auto [u, v] = slots[s];
                const bool hu = (seen >> u) & 1u;
                const bool hv = (seen >> v) & 1u;
                if (hu != hv) {
                    seen |= (std::uint32_t{1} << u) | (std::uint32_t{1} << v);
                    grew = true;
                }
            }
        }
        if (seen != (std::uint32_t{1} << n) - 1) continue;
        std::uint32_t best = mask;
        for (const auto& perm : perms) {
            std::uint32_t image = 0;
            for (std::size_t s = 0; s < slots.size(); ++s) {
                if (!((mask >> s) & 1u)) continue;
                const auto [u, v] = slots[s];
                image |= std::uint32_t{1}
                         << slot_of[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])]
                                   [static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])];
            }
            best = std::min(best, image);
        }
        classes.emplace(std::popcount(best), best);
    }

    std::vector<VertexWeightedGraph> out;
    for (const auto& [count, mask] : classes) {
        std::vector<std::string> ids;
        for (int v = 0; v < n; ++v) ids.push_back("v" + std::to_string(v));
        std::vector<Edge> edges;
        for (std::size_t s = 0; s < slots.size(); ++s) {
            if ((mask >> s) & 1u) edges.push_back({slots[s].first, slots[s].second});
        }
        out.emplace_back(std::move(ids), std::vector<int>(static_cast<std::size_t>(n), 1), std::move(edges));
    }
    return out;
}

bool GraphTheoremReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const TheoremCheck& c) { return c.passed; });
}

bool StructureReport::ok() const {
    return std::all_of(graphs.begin(), graphs.end(), [](const GraphTheoremReport& g) { return g.ok(); });
}

C6Observation observe_c6(const std::string& label, const VertexWeightedGraph& g, const HomologyTable& t) {
    C6Observation obs;
    obs.label = label;
    obs.n = g.num_vertices();
    obs.m = g.num_edges();
    obs.blocks = count_blocks(g);
    if (const auto span = span_indices(t, 0)) obs.span0 = span->span0;
    if (obs.span0) {
        obs.lower_bound_holds = obs.n - obs.blocks <= *obs.span0;
        // k_max^0 <= n - 2 needs an edge; otherwise only k_max^0 <= n - 1.
        obs.upper_bound_holds = *obs.span0 <= (obs.m >= 1 ? obs.n - 1 : obs.n);
    }
    return obs;
}

StructureReport verify_structure_theorems(const std::vector<std::pair<std::string, VertexWeightedGraph>>& corpus,
                                          const StructureOptions& options) {
    StructureReport report;
    for (const auto& [label, g] : corpus) {
        GraphTheoremReport r;
        r.label = label;
        r.graph = g;
        r.table = homology_table(g, options.homology);
        const HomologyTable& t = r.table;
        const int n = g.num_vertices();
        const int m = g.num_edges();

        if (g.has_loop()) {
            r.checks.push_back({"loop-vanishing", t.modules.empty(), t.modules.empty() ? "" : describe(t)});
            EdgeIndex loop = 0;
            while (!g.edge(loop).is_loop()) ++loop;
            LESOptions lopts;
            lopts.ses.complex = options.homology.complex;
            lopts.threads = options.homology.threads;
            const LESReport les = verify_les(g, loop, lopts);
            // With H(G) = 0 every connecting map is an isomorphism.
            bool iso = les.ok();
            for (const LESRow& row : les.rows) {
                for (std::size_t k = 0; k < row.nodes.size(); ++k) {
                    const LESNode& node = row.nodes[k];
                    if (node.complex != 'C') continue;
                    if (node.outgoing_rank != node.module) iso = false;
                    if (k + 1 < row.nodes.size() && row.nodes[k + 1].module != node.module) iso = false;
                }
            }
            r.checks.push_back({"loop-connecting-isomorphism", iso, iso ? "" : "connecting map is not bijective"});
        }

        if (const auto pair = parallel_pair(g)) {
            const auto reduced = homology_table(modify_edge(g, pair->second, EdgeMode::Delete), options.homology);
            r.checks.push_back(compare("parallel-edge-invariance", t, reduced));
        }

        const State components = state_profile(g, g.full_mask());
        if (components.num_blocks() > 1) {
            const std::vector<VertexIndex>& first = components.blocks.front();
            std::vector<VertexIndex> rest;
            for (VertexIndex v = 0; v < n; ++v) {
                if (std::find(first.begin(), first.end(), v) == first.end()) rest.push_back(v);
            }
            const auto ta = homology_table(induced_subgraph(g, first), options.homology);
            const auto tb = homology_table(induced_subgraph(g, rest), options.homology);
            r.checks.push_back(compare("disjoint-union", t, disjoint_union_table(ta, tb)));
        }

        if (g.total_weight() + 1 <= std::min(options.extension_max_points, options.homology.complex.max_points)) {
            const VertexWeightedGraph extended =
                disjoint_union(g, VertexWeightedGraph({"isolated"}, {1}, {}));
            r.checks.push_back(compare("isolated-vertex-boxes", homology_table(extended, options.homology),
                                       add_isolated_unit_vertex(t)));
        }

        bool bound_ok = true;
        bool contiguous = true;
        std::string detail;
        for (int j = 0; j <= t.max_degree; ++j) {
            const auto span = span_indices(t, j);
            if (!span) continue;
            if (span->k_max > n - 1) {
                bound_ok = false;
                detail += "k_max^" + std::to_string(j) + "=" + std::to_string(span->k_max) + " ";
            }
            if (j == 0 && m >= 1 && span->k_max > n - 2) {
                bound_ok = false;
                detail += "k_max^0=" + std::to_string(span->k_max) + " with m >= 1 ";
            }
            for (int i = span->k_min; i <= span->k_max; ++i) {
                if (!t.nonzero(i, j)) {
                    contiguous = false;
                    detail += "gap at (" + std::to_string(i) + "," + std::to_string(j) + ") ";
                }
            }
        }
        r.checks.push_back({"k-max-bounds", bound_ok, bound_ok ? "" : detail});
        r.checks.push_back({"contiguity", contiguous, contiguous ? "" : detail});
        if (is_simple(g)) {
            r.checks.push_back({"h00-nonzero", t.nonzero(0, 0), ""});
            report.c6.push_back(observe_c6(label, g, t));
        }
        report.graphs.push_back(std::move(r));
    }
    return report;
}

std::vector<C6Observation> scan_c6(int max_vertices, const HomologyOptions& options) {
    std::vector<C6Observation> out;
    for (int n = 1; n <= max_vertices; ++n) {
        int k = 0;
        for (const VertexWeightedGraph& g : connected_simple_graphs(n)) {
            const std::string label = "n" + std::to_string(n) + "-" + std::to_string(k++);
            out.push_back(observe_c6(label, g, homology_table(g, options)));
        }
    }
    return out;
}

}  // namespace chromsh
