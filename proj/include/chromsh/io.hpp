#pragma once

// Graph documents and the JSON / text forms of every result.
//
// Graph document:
//   {"vertices": [{"id": "a", "weight": 1}, ...], "edges": [["a", "b"], ...]}
// The order of "edges" is the edge order.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "chromsh/graph.hpp"
#include "chromsh/homology.hpp"
#include "chromsh/les.hpp"
#include "chromsh/structure.hpp"
#include "chromsh/symfunc.hpp"

namespace chromsh {

using Json = nlohmann::ordered_json;

/// Throws InputError on malformed documents.
GraphDescription parse_graph_document(const Json& doc);
GraphDescription parse_graph_text(const std::string& text);
VertexWeightedGraph load_graph_file(const std::filesystem::path& path);

/// Canonical document for g; parse_graph_document inverts it.
Json graph_to_json(const VertexWeightedGraph& g);

Json partition_to_json(const Partition& p);
Json symfunc_to_json(const SymFunc& x);
Json multiplicities_to_json(const Multiplicities& m);

/// {"num_points", "max_index", "max_degree", "groups": [{"i", "j", "dim", "irreducibles": [[[2,1], 1], ...]}]}
Json homology_to_json(const HomologyTable& t);
HomologyTable homology_from_json(const Json& doc);

Json les_to_json(const LESReport& r);
Json structure_to_json(const StructureReport& r);
Json c6_to_json(const C6Observation& o);

/// "S[2,1] + 2*S[1,1,1]", or "0".
std::string multiplicities_text(const Multiplicities& m);
std::string homology_text(const HomologyTable& t);
std::string les_text(const LESReport& r);

}  // namespace chromsh
