#pragma once

#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

#include "chromsh/graph.hpp"
#include "chromsh/linalg.hpp"
#include "chromsh/repn.hpp"

namespace chromsh {

/// Per-degree matrices of an equivariant map between two chain spaces.
struct EquivariantMatrix {
    std::shared_ptr<const ChainSpace> domain;
    std::shared_ptr<const ChainSpace> codomain;
    std::vector<SparseMatrix> by_degree;  // index j

    const SparseMatrix& degree(int j) const { return by_degree.at(static_cast<std::size_t>(j)); }
};

enum class EdgeCase {
    SameComponents,  // identity map
    SplitsComponent  // projection onto the split factors
};

struct PerEdgeMap {
    EdgeCase kind = EdgeCase::SameComponents;
    EquivariantMatrix matrix;
};

/// d_eps: M_F -> M_{F-e} for e in F. Throws InputError when e is not in F.
PerEdgeMap per_edge_map(const VertexWeightedGraph& g, const State& upper, EdgeIndex e,
                        int max_points = kDefaultMaxPoints);

struct ComplexOptions {
    int max_points = kDefaultMaxPoints;
    int max_edges = 8;
    /// Exact d^2 = 0 check at every (i, j).
    bool check_square = true;
    /// Commutation with adjacent transpositions on every basis vector.
    bool check_equivariance = true;
};

/// One summand M_F of a chain group C_i.
struct ChainSummand {
    State state;
    std::shared_ptr<const ChainSpace> space;
    std::vector<Index> offset;  // offset[j] inside C_{i,j}
};

/// The bigraded complex C_{*,*}(G, w) with d_{i,j}: C_{i,j} -> C_{i-1,j}.
class ChainComplex {
public:
    ChainComplex(VertexWeightedGraph g, const ComplexOptions& options);

    const VertexWeightedGraph& graph() const { return graph_; }
    int num_points() const { return graph_.total_weight(); }
    int max_index() const { return graph_.num_edges(); }
    /// Degrees j range over [0, max_degree()].
    int max_degree() const { return num_points() - 1; }

    std::size_t dim(int i, int j) const;
    const std::vector<ChainSummand>& summands(int i) const { return layers_.at(static_cast<std::size_t>(i)); }
    /// Position of the state with this mask inside its layer.
    std::size_t summand_index(EdgeMask mask) const;
    const ChainSummand& summand(EdgeMask mask) const;
    /// The summand holding coordinate k of C_{i,j}, and k's position inside it.
    std::pair<const ChainSummand*, Index> locate(int i, int j, Index k) const;

    /// d_{i,j}; the zero map (with zero columns) for i = 0.
    const SparseMatrix& differential(int i, int j) const;

    /// g acting on a vector of C_{i,j}, summand by summand.
    SparseVec act(int i, int j, const Perm& g, const SparseVec& v) const;

    /// Throws InvariantViolation with the offending (i, j) if d^2 != 0.
    void verify_square_zero() const;
    /// Throws InvariantViolation if some d_{i,j} fails to commute with an
    /// adjacent transposition.
    void verify_equivariance() const;

private:
    VertexWeightedGraph graph_;
    std::vector<std::vector<ChainSummand>> layers_;
    std::unordered_map<EdgeMask, std::size_t> position_;
    std::vector<std::vector<std::size_t>> dims_;
    std::vector<std::vector<SparseMatrix>> diff_;
};

std::shared_ptr<const ChainComplex> build_complex(const VertexWeightedGraph& g, const ComplexOptions& options = {});

}  // namespace chromsh
