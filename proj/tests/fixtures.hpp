#pragma once

// Small graphs shared by the tests.

#include <string>
#include <utility>
#include <vector>

#include "chromsh/graph.hpp"

namespace fixtures {

inline chromsh::VertexWeightedGraph graph(std::vector<int> weights, std::vector<std::pair<int, int>> edges) {
    std::vector<std::string> ids;
    for (std::size_t v = 0; v < weights.size(); ++v) ids.push_back("v" + std::to_string(v));
    std::vector<chromsh::Edge> es;
    for (auto [u, v] : edges) es.push_back({u, v});
    return chromsh::VertexWeightedGraph(std::move(ids), std::move(weights), std::move(es));
}

inline chromsh::VertexWeightedGraph k2(int a = 1, int b = 1) { return graph({a, b}, {{0, 1}}); }
inline chromsh::VertexWeightedGraph p3() { return graph({1, 1, 1}, {{0, 1}, {1, 2}}); }
inline chromsh::VertexWeightedGraph k3() { return graph({1, 1, 1}, {{0, 1}, {1, 2}, {0, 2}}); }

}  // namespace fixtures
