#pragma once

// Structural theorems about homology, checked on concrete graphs, and the
// empirical scan of the conjectured lower bound n - b <= span_0.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chromsh/homology.hpp"

namespace chromsh {

/// Homology of A + B by inducing every H(A) (x) H(B) product.
HomologyTable disjoint_union_table(const HomologyTable& a, const HomologyTable& b);

/// Homology after adding an isolated vertex of weight 1: every S^lambda is
/// replaced by the S^mu with mu obtained by adding one box.
HomologyTable add_isolated_unit_vertex(const HomologyTable& t);

/// Equal multiplicities at every bidegree; ignores the recorded index range.
bool same_modules(const HomologyTable& a, const HomologyTable& b);

/// Subgraph induced on the given vertices (in the given order), keeping
/// edge order.
VertexWeightedGraph induced_subgraph(const VertexWeightedGraph& g, const std::vector<VertexIndex>& vertices);

/// Connected simple graphs on n unlabeled vertices with unit weights, one per
/// isomorphism class, in a deterministic order.
std::vector<VertexWeightedGraph> connected_simple_graphs(int n);

struct TheoremCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct GraphTheoremReport {
    std::string label;
    VertexWeightedGraph graph;
    HomologyTable table;
    std::vector<TheoremCheck> checks;
    bool ok() const;
};

struct C6Observation {
    std::string label;
    int n = 0;
    int m = 0;
    int blocks = 0;
    std::optional<int> span0;  // absent when H_{*,0} vanishes
    bool lower_bound_holds = false;
    bool upper_bound_holds = false;
};

C6Observation observe_c6(const std::string& label, const VertexWeightedGraph& g, const HomologyTable& t);

struct StructureOptions {
    HomologyOptions homology;
    /// Isolated-vertex checks only when w(G) + 1 stays within this bound.
    int extension_max_points = 5;
};

struct StructureReport {
    std::vector<GraphTheoremReport> graphs;
    /// Reported only; never part of ok().
    std::vector<C6Observation> c6;
    bool ok() const;
};

StructureReport verify_structure_theorems(const std::vector<std::pair<std::string, VertexWeightedGraph>>& corpus,
                                          const StructureOptions& options = {});

/// observe_c6 over connected_simple_graphs(n) for n = 1..max_vertices.
std::vector<C6Observation> scan_c6(int max_vertices, const HomologyOptions& options = {});

}  // namespace chromsh
