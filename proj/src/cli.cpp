#include "chromsh/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include "chromsh/cache.hpp"
#include "chromsh/error.hpp"
#include "chromsh/homology.hpp"
#include "chromsh/io.hpp"
#include "chromsh/les.hpp"
#include "chromsh/structure.hpp"
#include "chromsh/symfunc.hpp"

namespace chromsh {

namespace {

struct Context {
    const RunConfig& config;
    std::optional<ResultCache> cache;
    HomologyOptions homology;
};

void check_bounds(const RunConfig& c) {
    if (c.max_points < 1 || c.max_edges < 1 || c.threads < 1) throw InputError("bounds and thread count must be positive");
    if (c.max_points > kHardMaxPoints) throw BoundError("the point bound cannot exceed " + std::to_string(kHardMaxPoints));
    if (c.max_edges > kMaxEdges) throw BoundError("the edge bound cannot exceed " + std::to_string(kMaxEdges));
    if ((c.max_points > kDefaultMaxPoints || c.max_edges > kDefaultMaxEdges) && !c.allow_large) {
        throw BoundError("raising the bounds above w(G) <= " + std::to_string(kDefaultMaxPoints) +
                         ", m <= " + std::to_string(kDefaultMaxEdges) + " requires --allow-large");
    }
}

void check_graph(const Context& ctx, const VertexWeightedGraph& g) {
    if (g.total_weight() > ctx.config.max_points) {
        throw BoundError("w(G) = " + std::to_string(g.total_weight()) + " exceeds the bound " +
                         std::to_string(ctx.config.max_points));
    }
    if (g.num_edges() > ctx.config.max_edges) {
        throw BoundError("m = " + std::to_string(g.num_edges()) + " exceeds the bound " +
                         std::to_string(ctx.config.max_edges));
    }
}

std::vector<std::pair<std::string, VertexWeightedGraph>> load_inputs(const Context& ctx) {
    if (ctx.config.inputs.empty()) throw InputError("no input graph given");
    std::vector<std::pair<std::string, VertexWeightedGraph>> out;
    for (const auto& path : ctx.config.inputs) {
        VertexWeightedGraph g = load_graph_file(path);
        check_graph(ctx, g);
        out.emplace_back(path.string(), std::move(g));
    }
    return out;
}

// Either one JSON document or plain text, collected per input.
struct Output {
    explicit Output(const RunConfig& c) : json(c.format == OutputFormat::Json) {}
    bool json;
    Json doc = Json::array();
    std::ostringstream text;
};

void emit(const Output& o, const char* command, std::ostream& out) {
    if (o.json) {
        Json wrapped;
        wrapped["command"] = command;
        wrapped["results"] = o.doc;
        out << wrapped.dump(2) << "\n";
    } else {
        out << o.text.str();
    }
}

std::string graph_summary(const VertexWeightedGraph& g) {
    return "n=" + std::to_string(g.num_vertices()) + " m=" + std::to_string(g.num_edges()) +
           " w(G)=" + std::to_string(g.total_weight());
}

int run_csf(Context& ctx, std::ostream& out) {
    Output o(ctx.config);
    bool ok = true;
    for (const auto& [label, g] : load_inputs(ctx)) {
        const SymFunc p = csf_state_sum(g);
        const SymFunc s = basis_convert(p, Basis::Schur, kHardMaxPoints);
        Json doc;
        doc["input"] = label;
        doc["power_sum"] = symfunc_to_json(p);
        doc["schur"] = symfunc_to_json(s);
        bool dc_ok = true;
        for (EdgeIndex e = 0; e < g.num_edges(); ++e) dc_ok = dc_ok && check_deletion_contraction_csf(g, e).holds;
        doc["deletion_contraction"] = dc_ok;
        ok = ok && dc_ok;
        o.text << "== " << label << " (" << graph_summary(g) << ")\n";
        o.text << "p: " << p.to_string() << "\n";
        o.text << "s: " << s.to_string() << "\n";
        o.text << "deletion-contraction: " << (dc_ok ? "holds" : "FAILS") << "\n";
        if (ctx.config.oracle_colors > 0) {
            Json oracle = Json::array();
            for (int k = 1; k <= ctx.config.oracle_colors; ++k) {
                const bool agree = specialize(p, k, kHardMaxPoints) == csf_colorings_oracle(g, k);
                ok = ok && agree;
                oracle.push_back({{"colors", k}, {"agrees", agree}});
                o.text << "coloring oracle, k=" << k << ": " << (agree ? "agrees" : "DISAGREES") << "\n";
            }
            doc["oracle"] = oracle;
        }
        o.doc.push_back(std::move(doc));
    }
    emit(o, "csf", out);
    return ok ? kExitOk : kExitCheckFailed;
}

// Cached document {"graph", "homology", "frobenius"}.
Json homology_document(Context& ctx, const VertexWeightedGraph& g) {
    const Json graph_doc = graph_to_json(g);
    const std::string key = ResultCache::key("homology", graph_doc.dump());
    if (ctx.cache) {
        if (auto hit = ctx.cache->get(key)) {
            try {
                return Json::parse(*hit);
            } catch (const Json::parse_error&) {
                // unreadable entry: recompute and overwrite
            }
        }
    }
    const HomologyTable t = homology_table(g, ctx.homology);
    Json doc;
    doc["graph"] = graph_doc;
    doc["homology"] = homology_to_json(t);
    doc["frobenius"] = frobenius_series(t).to_string();
    if (ctx.cache) ctx.cache->put(key, doc.dump());
    return doc;
}

int run_homology(Context& ctx, std::ostream& out) {
    Output o(ctx.config);
    for (const auto& [label, g] : load_inputs(ctx)) {
        Json doc = homology_document(ctx, g);
        const HomologyTable t = homology_from_json(doc["homology"]);
        o.text << "== " << label << " (" << graph_summary(g) << ")\n";
        o.text << homology_text(t);
        o.text << "Frob = " << doc["frobenius"].get<std::string>() << "\n";
        doc["input"] = label;
        o.doc.push_back(std::move(doc));
    }
    emit(o, "homology", out);
    return kExitOk;
}

int run_les(Context& ctx, std::ostream& out) {
    Output o(ctx.config);
    bool ok = true;
    LESOptions opts;
    opts.ses.complex = ctx.homology.complex;
    opts.threads = ctx.config.threads;
    for (const auto& [label, g] : load_inputs(ctx)) {
        const LESReport r = verify_les(g, ctx.config.edge, opts);
        ok = ok && r.ok();
        o.text << "== " << label << " (" << graph_summary(g) << ")\n" << les_text(r);
        Json doc = les_to_json(r);
        doc["input"] = label;
        o.doc.push_back(std::move(doc));
    }
    emit(o, "les", out);
    return ok ? kExitOk : kExitCheckFailed;
}

int run_verify(Context& ctx, std::ostream& out) {
    Output o(ctx.config);
    const auto inputs = load_inputs(ctx);
    StructureOptions sopts;
    sopts.homology = ctx.homology;
    const StructureReport structure = verify_structure_theorems(inputs, sopts);
    bool ok = structure.ok();
    LESOptions lopts;
    lopts.ses.complex = ctx.homology.complex;
    lopts.threads = ctx.config.threads;
    for (std::size_t k = 0; k < inputs.size(); ++k) {
        const auto& [label, g] = inputs[k];
        const GraphTheoremReport& gr = structure.graphs[k];
        const CategorificationCheck cat = categorification_check(g, gr.table);
        bool dc_ok = true;
        bool les_ok = true;
        for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
            dc_ok = dc_ok && check_deletion_contraction_csf(g, e).holds;
            les_ok = les_ok && verify_les(g, e, lopts).ok();
        }
        ok = ok && cat.holds && cat.euler_holds && dc_ok && les_ok;
        o.text << "== " << label << " (" << graph_summary(g) << ")\n";
        for (const TheoremCheck& c : gr.checks) {
            o.text << (c.passed ? "pass " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
        }
        o.text << (cat.holds ? "pass " : "FAIL ") << "categorification\n";
        o.text << (cat.euler_holds ? "pass " : "FAIL ") << "euler-characteristic\n";
        o.text << (dc_ok ? "pass " : "FAIL ") << "csf-deletion-contraction\n";
        o.text << (les_ok ? "pass " : "FAIL ") << "long-exact-sequences\n";
        Json doc;
        doc["input"] = label;
        doc["categorification"] = cat.holds;
        doc["euler_characteristic"] = cat.euler_holds;
        doc["csf_deletion_contraction"] = dc_ok;
        doc["long_exact_sequences"] = les_ok;
        o.doc.push_back(std::move(doc));
    }
    for (const C6Observation& c : structure.c6) {
        o.text << "c6 " << c.label << ": n-b=" << c.n - c.blocks << " span0="
               << (c.span0 ? std::to_string(*c.span0) : "none") << (c.lower_bound_holds ? "" : " (lower bound fails)")
               << "\n";
    }
    if (o.json) {
        Json combined;
        combined["graphs"] = o.doc;
        combined["structure"] = structure_to_json(structure);
        o.doc = std::move(combined);
    }
    emit(o, "verify", out);
    return ok ? kExitOk : kExitCheckFailed;
}

int run_scan(Context& ctx, std::ostream& out) {
    if (ctx.config.scan_max_vertices < 1 || ctx.config.scan_max_vertices > 6) {
        throw BoundError("scan-c6 supports 1 to 6 vertices");
    }
    if (ctx.config.scan_max_vertices > ctx.config.max_points) {
        throw BoundError("scan size exceeds the point bound");
    }
    const auto scan = scan_c6(ctx.config.scan_max_vertices, ctx.homology);
    Output o(ctx.config);
    int violations = 0;
    for (const C6Observation& c : scan) {
        if (!c.lower_bound_holds) ++violations;
        o.text << c.label << ": n=" << c.n << " m=" << c.m << " b=" << c.blocks << " span0="
               << (c.span0 ? std::to_string(*c.span0) : "none") << " n-b<=span0: " << (c.lower_bound_holds ? "yes" : "no")
               << "\n";
        o.doc.push_back(c6_to_json(c));
    }
    o.text << scan.size() << " graphs, " << violations << " lower-bound violations\n";
    emit(o, "scan-c6", out);
    return kExitOk;
}

VertexWeightedGraph literal(std::vector<int> weights, std::vector<std::pair<int, int>> edges) {
    std::vector<std::string> ids;
    for (std::size_t v = 0; v < weights.size(); ++v) ids.push_back(std::string(1, static_cast<char>('a' + v)));
    std::vector<Edge> es;
    for (auto [u, v] : edges) es.push_back({u, v});
    return VertexWeightedGraph(std::move(ids), std::move(weights), std::move(es));
}

int run_selftest(Context& ctx, std::ostream& out) {
    Output o(ctx.config);
    bool all = true;
    auto record = [&](const std::string& name, bool passed) {
        all = all && passed;
        o.text << (passed ? "pass " : "FAIL ") << name << "\n";
        o.doc.push_back({{"check", name}, {"passed", passed}});
    };
    const Partition sign3{1, 1, 1};
    const Partition mixed{2, 1};

    const auto segment = literal({1, 2}, {{0, 1}});
    const HomologyTable ts = homology_table(segment, ctx.homology);
    record("weighted segment homology",
           ts.modules == std::map<Bidegree, Multiplicities>{{{0, 0}, {{mixed, 1}}}, {{0, 1}, {{sign3, 1}}},
                                                              {{1, 2}, {{sign3, 1}}}});
    record("weighted segment Frobenius series",
           frobenius_series(ts).to_string() == "s[2,1] - (q + q^2*t)*s[1,1,1]");

    const auto p3 = literal({1, 1, 1}, {{0, 1}, {1, 2}});
    const HomologyTable tp = homology_table(p3, ctx.homology);
    record("path P3 homology",
           tp.modules == std::map<Bidegree, Multiplicities>{{{0, 0}, {{sign3, 1}}},
                                                              {{1, 1}, {{mixed, 1}, {sign3, 2}}},
                                                              {{2, 2}, {{sign3, 1}}}});
    LESOptions lopts;
    lopts.ses.complex = ctx.homology.complex;
    const LESReport les = verify_les(p3, 0, lopts);
    record("P3 long exact sequence", les.ok() && les.contracted == ts && les.derived_contracted == ts);
    record("P3 categorification", categorification_check(p3, tp).holds);
    record("loop graph chromatic function vanishes", csf_state_sum(literal({1}, {{0, 0}})).is_zero());
    SymFunc p3sum(Basis::PowerSum, Partition{3});
    record("p3 in the Schur basis",
           basis_convert(p3sum, Basis::Schur).to_string() == "s[3] - s[2,1] + s[1,1,1]");
    emit(o, "selftest", out);
    return all ? kExitOk : kExitCheckFailed;
}

const char* command_name(Command c) {
    switch (c) {
        case Command::Csf: return "csf";
        case Command::Homology: return "homology";
        case Command::Les: return "les";
        case Command::Verify: return "verify";
        case Command::ScanC6: return "scan-c6";
        case Command::Selftest: return "selftest";
    }
    return "?";
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        check_bounds(config);
        Context ctx{config, std::nullopt, {}};
        ctx.homology.complex.max_points = config.max_points;
        ctx.homology.complex.max_edges = config.max_edges;
        ctx.homology.threads = config.threads;
        if (!config.no_cache) {
            std::optional<std::filesystem::path> dir = config.cache_dir;
            if (!dir) {
                if (const char* env = std::getenv(kCacheDirVariable); env && *env) dir = env;
            }
            if (dir) ctx.cache.emplace(*dir);
        }
        switch (config.command) {
            case Command::Csf: return run_csf(ctx, out);
            case Command::Homology: return run_homology(ctx, out);
            case Command::Les: return run_les(ctx, out);
            case Command::Verify: return run_verify(ctx, out);
            case Command::ScanC6: return run_scan(ctx, out);
            case Command::Selftest: return run_selftest(ctx, out);
        }
        return kExitUsage;
    } catch (const InvariantViolation& e) {
        err << "chromsh " << command_name(config.command) << ": internal check failed: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const Error& e) {
        err << "chromsh " << command_name(config.command) << ": " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace chromsh
