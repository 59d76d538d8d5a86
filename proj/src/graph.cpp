#include "chromsh/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/biconnected_components.hpp>
#include <boost/property_map/property_map.hpp>

#include "chromsh/error.hpp"

namespace chromsh {

VertexWeightedGraph::VertexWeightedGraph(std::vector<std::string> ids, std::vector<int> weights,
                                         std::vector<Edge> edges)
    : ids_(std::move(ids)), weights_(std::move(weights)), edges_(std::move(edges)) {
    if (weights_.empty()) throw InputError("graph has no vertices");
    if (ids_.size() != weights_.size()) throw InputError("vertex id and weight counts differ");
    if (edges_.size() > static_cast<std::size_t>(kMaxEdges)) {
        throw InputError("at most " + std::to_string(kMaxEdges) + " edges are supported");
    }
    for (std::size_t v = 0; v < weights_.size(); ++v) {
        if (weights_[v] < 1) {
            throw InputError("vertex '" + ids_[v] + "' has weight " + std::to_string(weights_[v]) +
                             "; weights must be >= 1");
        }
        total_weight_ += weights_[v];
    }
    for (const Edge& e : edges_) {
        if (e.u < 0 || e.v < 0 || e.u >= num_vertices() || e.v >= num_vertices()) {
            throw InputError("edge endpoint out of range");
        }
    }
}

bool VertexWeightedGraph::has_loop() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

EdgeMask VertexWeightedGraph::full_mask() const {
    return num_edges() == 0 ? 0u : static_cast<EdgeMask>((std::uint64_t{1} << num_edges()) - 1);
}

VertexWeightedGraph build_graph(const GraphDescription& description) {
    std::vector<std::string> ids;
    std::vector<int> weights;
    std::unordered_map<std::string, VertexIndex> index;
    for (const auto& [id, weight] : description.vertices) {
        if (!index.emplace(id, static_cast<VertexIndex>(ids.size())).second) {
            throw InputError("duplicate vertex id '" + id + "'");
        }
        ids.push_back(id);
        weights.push_back(weight);
    }
    std::vector<Edge> edges;
    for (const auto& [a, b] : description.edges) {
        auto ia = index.find(a);
        auto ib = index.find(b);
        if (ia == index.end()) throw InputError("edge endpoint '" + a + "' is not a declared vertex");
        if (ib == index.end()) throw InputError("edge endpoint '" + b + "' is not a declared vertex");
        edges.push_back({ia->second, ib->second});
    }
    return VertexWeightedGraph(std::move(ids), std::move(weights), std::move(edges));
}

VertexWeightedGraph modify_edge(const VertexWeightedGraph& g, EdgeIndex e, EdgeMode mode) {
    if (e < 0 || e >= g.num_edges()) {
        throw InputError("edge index " + std::to_string(e) + " out of range");
    }
    const Edge removed = g.edge(e);
    std::vector<Edge> rest;
    for (EdgeIndex f = 0; f < g.num_edges(); ++f) {
        if (f != e) rest.push_back(g.edge(f));
    }
    if (mode == EdgeMode::Delete || removed.is_loop()) {
        return VertexWeightedGraph(g.ids(), g.weights(), std::move(rest));
    }

    const VertexIndex keep = std::min(removed.u, removed.v);
    const VertexIndex drop = std::max(removed.u, removed.v);
    auto relabel = [&](VertexIndex v) {
        if (v == drop) return keep;
        return v > drop ? v - 1 : v;
    };
    std::vector<std::string> ids;
    std::vector<int> weights;
    for (VertexIndex v = 0; v < g.num_vertices(); ++v) {
        if (v == drop) continue;
        if (v == keep) {
            ids.push_back(g.ids()[static_cast<std::size_t>(keep)] + "+" +
                          g.ids()[static_cast<std::size_t>(drop)]);
            weights.push_back(g.weight(keep) + g.weight(drop));
        } else {
            ids.push_back(g.ids()[static_cast<std::size_t>(v)]);
            weights.push_back(g.weight(v));
        }
    }
    for (Edge& f : rest) f = {relabel(f.u), relabel(f.v)};
    return VertexWeightedGraph(std::move(ids), std::move(weights), std::move(rest));
}

VertexWeightedGraph disjoint_union(const VertexWeightedGraph& a, const VertexWeightedGraph& b) {
    std::vector<std::string> ids = a.ids();
    std::vector<int> weights = a.weights();
    std::vector<Edge> edges = a.edges();
    const int shift = a.num_vertices();
    for (VertexIndex v = 0; v < b.num_vertices(); ++v) {
        ids.push_back(b.ids()[static_cast<std::size_t>(v)]);
        weights.push_back(b.weight(v));
    }
    for (const Edge& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
    return VertexWeightedGraph(std::move(ids), std::move(weights), std::move(edges));
}

int State::num_edges() const { return std::popcount(mask); }

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent[static_cast<std::size_t>(b)] = a;
    }
};

}  // namespace

State state_profile(const VertexWeightedGraph& g, EdgeMask mask) {
    const int n = g.num_vertices();
    UnionFind uf(n);
    for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
        if (mask & (EdgeMask{1} << e)) uf.unite(g.edge(e).u, g.edge(e).v);
    }
    State s;
    s.mask = mask;
    s.component_of.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> root_block(static_cast<std::size_t>(n), -1);
    // Scanning vertices in order assigns block numbers by smallest vertex.
    for (VertexIndex v = 0; v < n; ++v) {
        const int root = uf.find(v);
        int& block = root_block[static_cast<std::size_t>(root)];
        if (block < 0) {
            block = static_cast<int>(s.blocks.size());
            s.blocks.emplace_back();
            s.block_weights.push_back(0);
        }
        s.blocks[static_cast<std::size_t>(block)].push_back(v);
        s.block_weights[static_cast<std::size_t>(block)] += g.weight(v);
        s.component_of[static_cast<std::size_t>(v)] = block;
    }
    s.lambda = Partition(s.block_weights);
    return s;
}

int hasse_sign(EdgeMask upper, EdgeIndex removed) {
    const EdgeMask below = upper & ((EdgeMask{1} << removed) - 1);
    return (std::popcount(below) % 2 == 0) ? 1 : -1;
}

std::vector<LayerEntry> lattice_layer(const VertexWeightedGraph& g, int i) {
    const int m = g.num_edges();
    if (i < 0 || i > m) throw InputError("lattice layer index out of range");
    std::vector<LayerEntry> out;
    for (std::uint64_t raw = 0; raw < (std::uint64_t{1} << m); ++raw) {
        const auto mask = static_cast<EdgeMask>(raw);
        if (std::popcount(mask) != i) continue;
        LayerEntry entry{state_profile(g, mask), {}};
        for (EdgeIndex e = 0; e < m; ++e) {
            if (!(mask & (EdgeMask{1} << e))) continue;
            entry.down.push_back({mask, mask & ~(EdgeMask{1} << e), e, hasse_sign(mask, e)});
        }
        out.push_back(std::move(entry));
    }
    return out;
}

int count_components(const VertexWeightedGraph& g) {
    return state_profile(g, g.full_mask()).num_blocks();
}

int count_blocks(const VertexWeightedGraph& g) {
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                                             boost::property<boost::edge_index_t, std::size_t>>;
    const int n = g.num_vertices();
    BoostGraph bg(static_cast<std::size_t>(n));
    std::vector<std::vector<bool>> seen(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    std::size_t edge_count = 0;
    for (const Edge& e : g.edges()) {
        if (e.is_loop() || seen[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)]) continue;
        seen[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = true;
        seen[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = true;
        ++degree[static_cast<std::size_t>(e.u)];
        ++degree[static_cast<std::size_t>(e.v)];
        boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), edge_count++, bg);
    }
    std::vector<std::size_t> storage(edge_count);
    auto component = boost::make_iterator_property_map(storage.begin(), boost::get(boost::edge_index, bg));
    const auto edge_blocks = static_cast<int>(boost::biconnected_components(bg, component));
    const auto isolated = static_cast<int>(std::count(degree.begin(), degree.end(), 0));
    return edge_blocks + isolated;
}

}  // namespace chromsh
