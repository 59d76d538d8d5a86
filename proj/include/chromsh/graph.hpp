#pragma once

// Vertex-weighted multigraphs, edge-subset states and the Boolean lattice of
// states used by the chain complex.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "chromsh/partition.hpp"

namespace chromsh {

using VertexIndex = int;
using EdgeIndex = int;
using EdgeMask = std::uint32_t;

inline constexpr int kMaxEdges = 31;

struct Edge {
    VertexIndex u = 0;
    VertexIndex v = 0;

    bool is_loop() const { return u == v; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Input description: vertex ids with weights, and an ordered edge list given
/// by vertex ids. List order is the edge order.
struct GraphDescription {
    std::vector<std::pair<std::string, int>> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
};

/// A graph G with vertex weights w: V(G) -> {1, 2, ...}. Loops and parallel
/// edges are allowed. The position of an edge in edges() is its rank in the
/// edge order used for differential signs.
class VertexWeightedGraph {
public:
    VertexWeightedGraph() = default;

    /// Validating constructor. Throws InputError on out-of-range endpoints,
    /// weights < 1, an empty vertex set or more than kMaxEdges edges.
    VertexWeightedGraph(std::vector<std::string> ids, std::vector<int> weights,
                        std::vector<Edge> edges);

    int num_vertices() const { return static_cast<int>(weights_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int total_weight() const { return total_weight_; }

    const std::vector<std::string>& ids() const { return ids_; }
    const std::vector<int>& weights() const { return weights_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeIndex e) const { return edges_.at(static_cast<std::size_t>(e)); }
    int weight(VertexIndex v) const { return weights_.at(static_cast<std::size_t>(v)); }

    bool has_loop() const;
    EdgeMask full_mask() const;

    friend bool operator==(const VertexWeightedGraph&, const VertexWeightedGraph&) = default;

private:
    std::vector<std::string> ids_;
    std::vector<int> weights_;
    std::vector<Edge> edges_;
    int total_weight_ = 0;
};

VertexWeightedGraph build_graph(const GraphDescription& description);

enum class EdgeMode { Delete, Contract };

/// G \ e or G / e. Remaining edges keep their relative order. Contracting a
/// non-loop edge (v1, v2) replaces the earlier endpoint by the merged vertex
/// of weight w(v1) + w(v2) and drops the later one; incident edges are
/// re-targeted, so new loops and parallel edges may appear. Contracting a
/// loop removes it and leaves the weights unchanged.
VertexWeightedGraph modify_edge(const VertexWeightedGraph& g, EdgeIndex e, EdgeMode mode);

/// Disjoint union A + B; vertices of A come first, then those of B.
VertexWeightedGraph disjoint_union(const VertexWeightedGraph& a, const VertexWeightedGraph& b);

/// Connected-component data of an edge subset F.
struct State {
    EdgeMask mask = 0;
    /// Vertex sets of the components, ordered by smallest vertex index.
    std::vector<std::vector<VertexIndex>> blocks;
    /// Total weight of each block, in block order.
    std::vector<int> block_weights;
    /// component_of[v] = index of the block containing v.
    std::vector<int> component_of;
    /// Weakly decreasing sort of block_weights.
    Partition lambda;

    int num_blocks() const { return static_cast<int>(blocks.size()); }
    int num_edges() const;
};

State state_profile(const VertexWeightedGraph& g, EdgeMask mask);

/// A covering relation F -> F - e in the lattice of states.
struct HasseEdge {
    EdgeMask upper = 0;
    EdgeMask lower = 0;
    EdgeIndex removed = 0;
    /// (-1)^k with k the number of edges of F before e.
    int sign = 1;
};

int hasse_sign(EdgeMask upper, EdgeIndex removed);

struct LayerEntry {
    State state;
    std::vector<HasseEdge> down;
};

/// All states with exactly i edges, by increasing mask value, each with its
/// outgoing Hasse edges in increasing order of the removed edge.
std::vector<LayerEntry> lattice_layer(const VertexWeightedGraph& g, int i);

/// Number of connected components of the whole graph.
int count_components(const VertexWeightedGraph& g);

/// Number of blocks (maximal 2-connected pieces, bridges and isolated
/// vertices) of the underlying simple graph. Loops are ignored.
int count_blocks(const VertexWeightedGraph& g);

}  // namespace chromsh
