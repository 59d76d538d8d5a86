#include "chromsh/les.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "chromsh/error.hpp"
#include "parallel.hpp"

namespace chromsh {

namespace {

// Edge masks of G \ e and G / e drop bit e of a mask of G.
EdgeMask compress(EdgeMask mask, EdgeIndex e) {
    const EdgeMask low = mask & ((EdgeMask{1} << e) - 1);
    return low | ((mask >> (e + 1)) << e);
}

EdgeMask expand(EdgeMask mask, EdgeIndex e) {
    const EdgeMask low = mask & ((EdgeMask{1} << e) - 1);
    return low | ((mask >> e) << (e + 1));
}

SparseMatrix zero_matrix(std::size_t rows, std::size_t cols) {
    SparseMatrix m;
    m.rows = rows;
    m.cols.resize(cols);
    return m;
}

std::string at_text(int i, int j) { return " at (i, j) = (" + std::to_string(i) + ", " + std::to_string(j) + ")"; }

void check_commutes(const ChainMap& f, const std::string& name) {
    const ChainComplex& src = *f.source;
    const ChainComplex& dst = *f.target;
    for (int i = 1; i <= src.max_index(); ++i) {
        for (int j = 0; j <= src.max_degree(); ++j) {
            const SparseMatrix& d_src = src.differential(i, j);
            const int ti = i + f.shift;
            for (Index k = 0; k < d_src.num_cols(); ++k) {
                const SparseVec fk = f.apply(i, j, SparseVec::unit(k));
                const SparseVec lhs = (ti >= 1 && ti <= dst.max_index()) ? dst.differential(ti, j).apply(fk) : SparseVec{};
                const SparseVec rhs = f.apply(i - 1, j, d_src.cols[k]);
                if (lhs != rhs) throw InvariantViolation(name + " does not commute with the differentials" + at_text(i, j));
            }
        }
    }
}

}  // namespace

SparseMatrix ChainMap::at(int i, int j) const {
    if (i >= 0 && static_cast<std::size_t>(i) < by_index.size() && j >= 0 &&
        static_cast<std::size_t>(j) < by_index[static_cast<std::size_t>(i)].size()) {
        return by_index[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return zero_matrix(target->dim(i + shift, j), source->dim(i, j));
}

SparseVec ChainMap::apply(int i, int j, const SparseVec& v) const {
    if (v.empty()) return {};
    if (i < 0 || static_cast<std::size_t>(i) >= by_index.size()) throw InputError("chain map index out of range");
    return by_index[static_cast<std::size_t>(i)].at(static_cast<std::size_t>(j)).apply(v);
}

VertexWeightedGraph move_edge_last(const VertexWeightedGraph& g, EdgeIndex e) {
    if (e < 0 || e >= g.num_edges()) throw InputError("edge index " + std::to_string(e) + " out of range");
    std::vector<Edge> edges = g.edges();
    const Edge moved = edges[static_cast<std::size_t>(e)];
    edges.erase(edges.begin() + e);
    edges.push_back(moved);
    return VertexWeightedGraph(g.ids(), g.weights(), std::move(edges));
}

SesMaps build_ses_maps(const VertexWeightedGraph& g, EdgeIndex e, const SesOptions& options) {
    if (e < 0 || e >= g.num_edges()) throw InputError("edge index " + std::to_string(e) + " out of range");
    SesMaps out;
    if (options.signs == EdgeSigns::MoveLast) {
        out.graph = move_edge_last(g, e);
        out.edge = g.num_edges() - 1;
    } else {
        out.graph = g;
        out.edge = e;
    }
    const EdgeIndex edge = out.edge;
    const EdgeMask bit = EdgeMask{1} << edge;
    out.whole = build_complex(out.graph, options.complex);
    out.deleted = build_complex(modify_edge(out.graph, edge, EdgeMode::Delete), options.complex);
    out.contracted = build_complex(modify_edge(out.graph, edge, EdgeMode::Contract), options.complex);
    const ChainComplex& a = *out.deleted;
    const ChainComplex& b = *out.whole;
    const ChainComplex& c = *out.contracted;
    const int degrees = b.max_degree() + 1;

    out.iota = ChainMap{out.deleted, out.whole, 0, {}};
    for (int i = 0; i <= a.max_index(); ++i) {
        std::vector<SparseMatrix> row;
        for (int j = 0; j < degrees; ++j) {
            SparseMatrix m = zero_matrix(b.dim(i, j), a.dim(i, j));
            for (const ChainSummand& sa : a.summands(i)) {
                const ChainSummand& sb = b.summand(expand(sa.state.mask, edge));
                if (sa.space != sb.space) throw InvariantViolation("deletion changed a chain space");
                const auto jj = static_cast<std::size_t>(j);
                for (Index k = 0; k < sa.space->dim(j); ++k) m.cols[sa.offset[jj] + k] = SparseVec::unit(sb.offset[jj] + k);
            }
            row.push_back(std::move(m));
        }
        out.iota.by_index.push_back(std::move(row));
    }

    out.pi = ChainMap{out.whole, out.contracted, -1, {}};
    for (int i = 0; i <= b.max_index(); ++i) {
        std::vector<SparseMatrix> row;
        for (int j = 0; j < degrees; ++j) {
            SparseMatrix m = zero_matrix(c.dim(i - 1, j), b.dim(i, j));
            for (const ChainSummand& sb : b.summands(i)) {
                if (!(sb.state.mask & bit)) continue;
                const ChainSummand& sc = c.summand(compress(sb.state.mask & ~bit, edge));
                if (sb.space != sc.space) throw InvariantViolation("contraction changed a chain space");
                const int later = std::popcount(sb.state.mask >> (edge + 1));
                const Rational sign = later % 2 == 0 ? 1 : -1;
                const auto jj = static_cast<std::size_t>(j);
                for (Index k = 0; k < sb.space->dim(j); ++k) {
                    m.cols[sb.offset[jj] + k] = SparseVec::unit(sc.offset[jj] + k, sign);
                }
            }
            row.push_back(std::move(m));
        }
        out.pi.by_index.push_back(std::move(row));
    }

    // Levelwise exactness: iota injective, pi surjective, pi iota = 0 and
    // dimensions adding up.
    for (int i = 0; i <= b.max_index(); ++i) {
        for (int j = 0; j < degrees; ++j) {
            if (b.dim(i, j) != a.dim(i, j) + c.dim(i - 1, j)) {
                throw InvariantViolation("levelwise dimensions do not add up" + at_text(i, j));
            }
            const SparseMatrix iota = out.iota.at(i, j);
            const SparseMatrix pi = out.pi.at(i, j);
            if (rank_of(iota.cols) != a.dim(i, j)) throw InvariantViolation("iota is not injective" + at_text(i, j));
            if (rank_of(pi.cols) != c.dim(i - 1, j)) throw InvariantViolation("pi is not surjective" + at_text(i, j));
            for (const SparseVec& col : iota.cols) {
                if (!pi.apply(col).empty()) throw InvariantViolation("pi iota != 0" + at_text(i, j));
            }
        }
    }
    check_commutes(out.iota, "iota");
    check_commutes(out.pi, "pi");
    return out;
}

namespace {

// The lambda-parts e C_i of one complex in one degree j, with bases of the
// cycles and boundaries they contain.
struct Piece {
    std::vector<std::vector<SparseVec>> basis;
    std::vector<std::vector<SparseVec>> cycles;
    std::vector<std::vector<SparseVec>> bounds;  // independent

    static const std::vector<SparseVec>& get(const std::vector<std::vector<SparseVec>>& v, int i) {
        static const std::vector<SparseVec> empty;
        return (i < 0 || static_cast<std::size_t>(i) >= v.size()) ? empty : v[static_cast<std::size_t>(i)];
    }
    int mult(int i) const { return static_cast<int>(get(cycles, i).size() - get(bounds, i).size()); }
};

Piece make_piece(const ChainComplex& x, int j, const Partition& lambda) {
    Piece p;
    const int m = x.max_index();
    for (int i = 0; i <= m; ++i) p.basis.push_back(isotypic_chain_basis(x, i, j, lambda));
    p.cycles.resize(static_cast<std::size_t>(m + 1));
    p.bounds.resize(static_cast<std::size_t>(m + 1));
    for (int i = 0; i <= m; ++i) {
        const auto& basis = p.basis[static_cast<std::size_t>(i)];
        if (i == 0) {
            p.cycles[0] = basis;
            continue;
        }
        std::vector<SparseVec> images;
        for (const SparseVec& v : basis) images.push_back(x.differential(i, j).apply(v));
        for (const SparseVec& rel : kernel_of(images)) p.cycles[static_cast<std::size_t>(i)].push_back(combine(basis, rel));
        p.bounds[static_cast<std::size_t>(i - 1)] = basis_of(images);
    }
    return p;
}

// Rank of the map induced on homology by vectors f(z) of cycles z.
int induced_rank(const std::vector<SparseVec>& images, const std::vector<SparseVec>& target_bounds) {
    std::vector<SparseVec> all = target_bounds;
    all.insert(all.end(), images.begin(), images.end());
    return static_cast<int>(rank_of(all) - target_bounds.size());
}

bool all_in_span(const std::vector<SparseVec>& vectors, const std::vector<SparseVec>& span) {
    Echelon ech;
    for (const SparseVec& v : span) ech.insert(v);
    for (const SparseVec& v : vectors) {
        if (!ech.in_span(v)) return false;
    }
    return true;
}

void support_masks(const ChainComplex& x, int i, int j, const SparseVec& v, std::vector<EdgeMask>& out) {
    out.clear();
    for (const auto& [k, c] : v.entries()) {
        const EdgeMask mask = x.locate(i, j, k).first->state.mask;
        if (out.empty() || out.back() != mask) out.push_back(mask);
    }
}

// Per (j, lambda): multiplicities at every node and ranks of the three
// induced maps, indexed by the source index i of iota_i, pi_i and gamma_i.
struct LambdaRow {
    std::vector<int> mult_a, mult_b, mult_c;
    std::vector<int> rank_iota, rank_pi, rank_gamma;
    bool compositions_ok = true;
    bool support_ok = true;
};

LambdaRow lambda_row(const SesMaps& ses, int j, const Partition& lambda) {
    const ChainComplex& a = *ses.deleted;
    const ChainComplex& b = *ses.whole;
    const ChainComplex& c = *ses.contracted;
    const Piece pa = make_piece(a, j, lambda);
    const Piece pb = make_piece(b, j, lambda);
    const Piece pc = make_piece(c, j, lambda);
    const int m = b.max_index();

    LambdaRow row;
    for (int i = 0; i <= m; ++i) {
        row.mult_a.push_back(pa.mult(i));
        row.mult_b.push_back(pb.mult(i));
        row.mult_c.push_back(pc.mult(i));

        // iota_i: H_i(A) -> H_i(B)
        std::vector<SparseVec> iota_images;
        for (const SparseVec& z : Piece::get(pa.cycles, i)) iota_images.push_back(ses.iota.apply(i, j, z));
        row.rank_iota.push_back(induced_rank(iota_images, Piece::get(pb.bounds, i)));

        // pi_i: H_i(B) -> H_{i-1}(C)
        std::vector<SparseVec> pi_images;
        for (const SparseVec& z : Piece::get(pb.cycles, i)) pi_images.push_back(ses.pi.apply(i, j, z));
        row.rank_pi.push_back(induced_rank(pi_images, Piece::get(pc.bounds, i - 1)));
        for (const SparseVec& y : iota_images) {
            if (!ses.pi.apply(i, j, y).empty()) row.compositions_ok = false;
        }

        // gamma_i: H_{i-1}(C) -> H_{i-1}(A) by lifting through pi, applying
        // d and pulling back through iota.
        if (i == 0) {
            row.rank_gamma.push_back(0);
            continue;
        }
        const auto& lift_basis = Piece::get(pb.basis, i);
        Echelon lift(true);
        for (const SparseVec& v : lift_basis) lift.insert(ses.pi.apply(i, j, v));
        const auto& pull_basis = Piece::get(pa.basis, i - 1);
        Echelon pull(true);
        for (const SparseVec& v : pull_basis) pull.insert(ses.iota.apply(i - 1, j, v));
        auto connect = [&](const SparseVec& z) {
            const auto coeffs = lift.solve(z);
            if (!coeffs) throw InvariantViolation("cycle of G / e has no lift" + at_text(i, j));
            const SparseVec db = b.differential(i, j).apply(combine(lift_basis, *coeffs));
            const auto back = pull.solve(db);
            if (!back) throw InvariantViolation("boundary of a lift is not in G \\ e" + at_text(i, j));
            return combine(pull_basis, *back);
        };
        std::vector<SparseVec> gamma_images;
        std::vector<EdgeMask> in_support;
        std::vector<EdgeMask> out_support;
        for (const SparseVec& z : Piece::get(pc.cycles, i - 1)) {
            SparseVec image = connect(z);
            support_masks(c, i - 1, j, z, in_support);
            support_masks(a, i - 1, j, image, out_support);
            for (EdgeMask mask : out_support) {
                if (std::find(in_support.begin(), in_support.end(), mask) == in_support.end()) row.support_ok = false;
            }
            gamma_images.push_back(std::move(image));
        }
        row.rank_gamma.push_back(induced_rank(gamma_images, Piece::get(pa.bounds, i - 1)));

        // gamma pi = 0 and iota gamma = 0 on homology.
        std::vector<SparseVec> after_pi;
        for (const SparseVec& y : pi_images) after_pi.push_back(connect(y));
        if (!all_in_span(after_pi, Piece::get(pa.bounds, i - 1))) row.compositions_ok = false;
        std::vector<SparseVec> after_gamma;
        for (const SparseVec& y : gamma_images) after_gamma.push_back(ses.iota.apply(i - 1, j, y));
        if (!all_in_span(after_gamma, Piece::get(pb.bounds, i - 1))) row.compositions_ok = false;
    }
    return row;
}

int at_or_zero(const std::vector<int>& v, int i) {
    return (i < 0 || static_cast<std::size_t>(i) >= v.size()) ? 0 : v[static_cast<std::size_t>(i)];
}

}  // namespace

bool LESRow::exact() const {
    return alternating_sum_ok &&
           std::all_of(nodes.begin(), nodes.end(), [](const LESNode& n) { return n.exact; });
}

bool LESReport::exact() const {
    return std::all_of(rows.begin(), rows.end(), [](const LESRow& r) { return r.exact(); });
}

LESReport verify_les(const VertexWeightedGraph& g, EdgeIndex e, const LESOptions& options) {
    const SesMaps ses = build_ses_maps(g, e, options.ses);
    LESReport report;
    report.graph = ses.graph;
    report.edge = ses.edge;
    HomologyOptions hopts;
    hopts.complex = options.ses.complex;
    hopts.threads = options.threads;
    report.deleted = homology_table(*ses.deleted, hopts);
    report.whole = homology_table(*ses.whole, hopts);
    report.contracted = homology_table(*ses.contracted, hopts);

    const int n = ses.whole->num_points();
    const int m = ses.whole->max_index();
    const std::vector<Partition> lambdas = partitions_of(n);
    const auto table = character_table(n, kHardMaxPoints);
    std::vector<LambdaRow> results(static_cast<std::size_t>(n) * lambdas.size());
    detail::parallel_for(results.size(), options.threads, [&](std::size_t k) {
        results[k] = lambda_row(ses, static_cast<int>(k / lambdas.size()), lambdas[k % lambdas.size()]);
    });

    report.derived_contracted.num_points = n;
    report.derived_contracted.max_index = ses.contracted->max_index();
    report.derived_contracted.max_degree = ses.contracted->max_degree();
    report.tables_agree = true;
    report.connecting_support_ok = true;
    for (int j = 0; j < n; ++j) {
        LESRow row;
        row.j = j;
        bool compositions_ok = true;
        for (int i = m; i >= 0; --i) {
            for (char x : {'A', 'B', 'C'}) {
                if (x == 'C' && i == 0) continue;
                LESNode node;
                node.complex = x;
                node.i = x == 'C' ? i - 1 : i;
                node.exact = true;
                row.nodes.push_back(std::move(node));
            }
        }
        for (std::size_t l = 0; l < lambdas.size(); ++l) {
            const LambdaRow& r = results[static_cast<std::size_t>(j) * lambdas.size() + l];
            compositions_ok = compositions_ok && r.compositions_ok;
            report.connecting_support_ok = report.connecting_support_ok && r.support_ok;
            int incoming = 0;
            for (LESNode& node : row.nodes) {
                int mult = 0;
                int outgoing = 0;
                const HomologyTable* direct = nullptr;
                if (node.complex == 'A') {
                    mult = at_or_zero(r.mult_a, node.i);
                    outgoing = at_or_zero(r.rank_iota, node.i);
                    direct = &report.deleted;
                } else if (node.complex == 'B') {
                    mult = at_or_zero(r.mult_b, node.i);
                    outgoing = at_or_zero(r.rank_pi, node.i);
                    direct = &report.whole;
                } else {
                    mult = at_or_zero(r.mult_c, node.i);
                    outgoing = at_or_zero(r.rank_gamma, node.i + 1);
                    direct = &report.contracted;
                }
                if (direct->multiplicity(node.i, j, lambdas[l]) != mult) report.tables_agree = false;
                if (mult > 0) {
                    node.module[lambdas[l]] = mult;
                    node.dim += static_cast<std::size_t>(mult) * table->dimension(l);
                }
                if (outgoing > 0) node.outgoing_rank[lambdas[l]] = outgoing;
                if (mult - outgoing != incoming) node.exact = false;
                incoming = outgoing;
            }
            // The sequence ends in 0, so the last map must vanish.
            if (incoming != 0) row.nodes.back().exact = false;

            for (int i = 1; i <= m; ++i) {
                const int derived = (at_or_zero(r.mult_b, i) - at_or_zero(r.rank_iota, i)) +
                                    (at_or_zero(r.mult_a, i - 1) - at_or_zero(r.rank_iota, i - 1));
                if (derived < 0) throw InvariantViolation("negative derived multiplicity");
                if (derived > 0) report.derived_contracted.modules[{i - 1, j}][lambdas[l]] = derived;
            }
        }
        if (!compositions_ok) {
            for (LESNode& node : row.nodes) node.exact = false;
        }
        long alternating = 0;
        for (std::size_t k = 0; k < row.nodes.size(); ++k) {
            const auto d = static_cast<long>(row.nodes[k].dim);
            alternating += k % 2 == 0 ? d : -d;
        }
        row.alternating_sum_ok = alternating == 0;
        report.rows.push_back(std::move(row));
    }
    for (const auto& [bideg, mults] : report.derived_contracted.modules) {
        std::size_t dim = 0;
        for (const auto& [lambda, mult] : mults) dim += static_cast<std::size_t>(mult) * table->dimension(lambda);
        report.derived_contracted.betti[bideg] = dim;
    }
    report.derived_matches = report.derived_contracted == report.contracted;
    return report;
}

}  // namespace chromsh
