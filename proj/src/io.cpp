#include "chromsh/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "chromsh/error.hpp"

namespace chromsh {

namespace {

std::string id_of(const Json& v, const std::string& what) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw InputError(what + " must be a string or an integer");
}

}  // namespace

GraphDescription parse_graph_document(const Json& doc) {
    if (!doc.is_object()) throw InputError("graph document must be an object");
    if (!doc.contains("vertices") || !doc["vertices"].is_array()) throw InputError("graph document needs a vertices array");
    GraphDescription d;
    for (const Json& v : doc["vertices"]) {
        if (!v.is_object() || !v.contains("id")) throw InputError("each vertex needs an id");
        const std::string id = id_of(v["id"], "vertex id");
        int weight = 1;
        if (v.contains("weight")) {
            if (!v["weight"].is_number_integer()) throw InputError("weight of " + id + " must be an integer");
            const auto w = v["weight"].get<long long>();
            if (w < 1 || w > 1000) throw InputError("weight of " + id + " must be a positive integer");
            weight = static_cast<int>(w);
        }
        d.vertices.emplace_back(id, weight);
    }
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) throw InputError("edges must be an array");
        for (const Json& e : doc["edges"]) {
            if (!e.is_array() || e.size() != 2) throw InputError("each edge must be a pair of vertex ids");
            d.edges.emplace_back(id_of(e[0], "edge endpoint"), id_of(e[1], "edge endpoint"));
        }
    }
    return d;
}

GraphDescription parse_graph_text(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& err) {
        throw InputError(std::string("graph document is not valid JSON: ") + err.what());
    }
    return parse_graph_document(doc);
}

VertexWeightedGraph load_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return build_graph(parse_graph_text(buffer.str()));
}

Json graph_to_json(const VertexWeightedGraph& g) {
    Json doc;
    doc["vertices"] = Json::array();
    for (VertexIndex v = 0; v < g.num_vertices(); ++v) {
        doc["vertices"].push_back({{"id", g.ids()[static_cast<std::size_t>(v)]}, {"weight", g.weight(v)}});
    }
    doc["edges"] = Json::array();
    for (const Edge& e : g.edges()) {
        doc["edges"].push_back({g.ids()[static_cast<std::size_t>(e.u)], g.ids()[static_cast<std::size_t>(e.v)]});
    }
    return doc;
}

Json partition_to_json(const Partition& p) { return Json(p.parts()); }

Json symfunc_to_json(const SymFunc& x) {
    Json doc;
    doc["basis"] = x.basis() == Basis::Schur ? "schur" : "power_sum";
    doc["text"] = x.to_string();
    doc["terms"] = Json::array();
    for (const auto& [lambda, c] : x.terms()) doc["terms"].push_back({partition_to_json(lambda), c.get_str()});
    return doc;
}

Json multiplicities_to_json(const Multiplicities& m) {
    Json out = Json::array();
    for (const auto& [lambda, mult] : m) out.push_back({partition_to_json(lambda), mult});
    return out;
}

Json homology_to_json(const HomologyTable& t) {
    Json doc;
    doc["num_points"] = t.num_points;
    doc["max_index"] = t.max_index;
    doc["max_degree"] = t.max_degree;
    doc["groups"] = Json::array();
    for (const auto& [bideg, mults] : t.modules) {
        auto it = t.betti.find(bideg);
        doc["groups"].push_back({{"i", bideg.first},
                                 {"j", bideg.second},
                                 {"dim", it == t.betti.end() ? 0 : it->second},
                                 {"irreducibles", multiplicities_to_json(mults)}});
    }
    return doc;
}

HomologyTable homology_from_json(const Json& doc) {
    try {
        HomologyTable t;
        t.num_points = doc.at("num_points").get<int>();
        t.max_index = doc.at("max_index").get<int>();
        t.max_degree = doc.at("max_degree").get<int>();
        for (const Json& g : doc.at("groups")) {
            const Bidegree bideg{g.at("i").get<int>(), g.at("j").get<int>()};
            for (const Json& entry : g.at("irreducibles")) {
                t.modules[bideg][Partition(entry.at(0).get<std::vector<int>>())] = entry.at(1).get<int>();
            }
            t.betti[bideg] = g.at("dim").get<std::size_t>();
        }
        return t;
    } catch (const Json::exception& err) {
        throw InputError(std::string("malformed homology document: ") + err.what());
    }
}

Json les_to_json(const LESReport& r) {
    Json doc;
    doc["graph"] = graph_to_json(r.graph);
    doc["edge"] = r.edge;
    doc["exact"] = r.exact();
    doc["derived_contraction_matches"] = r.derived_matches;
    doc["connecting_support_ok"] = r.connecting_support_ok;
    doc["tables_agree"] = r.tables_agree;
    doc["rows"] = Json::array();
    for (const LESRow& row : r.rows) {
        Json jr;
        jr["j"] = row.j;
        jr["exact"] = row.exact();
        jr["alternating_sum_ok"] = row.alternating_sum_ok;
        jr["nodes"] = Json::array();
        for (const LESNode& node : row.nodes) {
            jr["nodes"].push_back({{"graph", std::string(1, node.complex)},
                                   {"i", node.i},
                                   {"dim", node.dim},
                                   {"module", multiplicities_to_json(node.module)},
                                   {"outgoing_rank", multiplicities_to_json(node.outgoing_rank)},
                                   {"exact", node.exact}});
        }
        doc["rows"].push_back(std::move(jr));
    }
    doc["deleted"] = homology_to_json(r.deleted);
    doc["whole"] = homology_to_json(r.whole);
    doc["contracted"] = homology_to_json(r.contracted);
    doc["derived_contracted"] = homology_to_json(r.derived_contracted);
    return doc;
}

Json c6_to_json(const C6Observation& o) {
    Json doc;
    doc["label"] = o.label;
    doc["n"] = o.n;
    doc["m"] = o.m;
    doc["blocks"] = o.blocks;
    doc["span0"] = o.span0 ? Json(*o.span0) : Json(nullptr);
    doc["lower_bound_holds"] = o.lower_bound_holds;
    doc["upper_bound_holds"] = o.upper_bound_holds;
    return doc;
}

Json structure_to_json(const StructureReport& r) {
    Json doc;
    doc["ok"] = r.ok();
    doc["graphs"] = Json::array();
    for (const GraphTheoremReport& g : r.graphs) {
        Json jg;
        jg["label"] = g.label;
        jg["ok"] = g.ok();
        jg["checks"] = Json::array();
        for (const TheoremCheck& c : g.checks) {
            jg["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        }
        doc["graphs"].push_back(std::move(jg));
    }
    doc["c6_scan"] = Json::array();
    for (const C6Observation& o : r.c6) doc["c6_scan"].push_back(c6_to_json(o));
    return doc;
}

std::string multiplicities_text(const Multiplicities& m) {
    if (m.empty()) return "0";
    std::string out;
    for (const auto& [lambda, mult] : m) {
        if (!out.empty()) out += " + ";
        if (mult != 1) out += std::to_string(mult) + "*";
        out += "S" + lambda.to_string();
    }
    return out;
}

std::string homology_text(const HomologyTable& t) {
    std::ostringstream out;
    if (t.modules.empty()) out << "all groups vanish\n";
    for (const auto& [bideg, mults] : t.modules) {
        auto it = t.betti.find(bideg);
        out << "H[" << bideg.first << "," << bideg.second << "] = " << multiplicities_text(mults) << "  (dim "
            << (it == t.betti.end() ? 0 : it->second) << ")\n";
    }
    return out.str();
}

std::string les_text(const LESReport& r) {
    std::ostringstream out;
    out << "edge " << r.edge << ": A = G\\e, B = G, C = G/e\n";
    for (const LESRow& row : r.rows) {
        out << "j=" << row.j << (row.exact() ? " exact" : " NOT EXACT") << ":";
        bool first = true;
        for (const LESNode& node : row.nodes) {
            out << (first ? " " : " -> ") << node.complex << "[" << node.i << "]=" << multiplicities_text(node.module);
            if (!node.exact) out << "(!)";
            first = false;
        }
        out << " -> 0\n";
    }
    out << "contraction recovered from the rows: " << (r.derived_matches ? "yes" : "no") << "\n";
    out << "connecting map supported on input states: " << (r.connecting_support_ok ? "yes" : "no") << "\n";
    return out.str();
}

}  // namespace chromsh
