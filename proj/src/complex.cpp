#include "chromsh/complex.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <string>

#include "chromsh/error.hpp"
#include "bits.hpp"

namespace chromsh {

using detail::points_of;
using detail::sort_sign;

namespace {

// Everything the per-edge matrix depends on, flattened into a cache key.
struct SplitShape {
    std::vector<int> upper_weights;
    std::vector<int> lower_weights;
    int split_block = -1;     // block of F that splits (-1 in Case 1)
    int target_a = -1;        // earlier new component
    int target_b = -1;        // later new component
    std::vector<int> relabel; // source block -> target block (unsplit blocks)

    std::vector<int> key() const {
        std::vector<int> k = upper_weights;
        k.push_back(-1);
        k.insert(k.end(), lower_weights.begin(), lower_weights.end());
        k.push_back(-1);
        k.push_back(split_block);
        k.push_back(target_a);
        k.push_back(target_b);
        k.insert(k.end(), relabel.begin(), relabel.end());
        return k;
    }
};

EquivariantMatrix identity_map(const std::shared_ptr<const ChainSpace>& space) {
    EquivariantMatrix m{space, space, {}};
    for (int j = 0; j <= space->top_degree(); ++j) {
        SparseMatrix mat;
        mat.rows = space->dim(j);
        mat.cols.reserve(mat.rows);
        for (Index k = 0; k < mat.rows; ++k) mat.cols.push_back(SparseVec::unit(k));
        m.by_degree.push_back(std::move(mat));
    }
    return m;
}

EquivariantMatrix split_map(const SplitShape& shape, int max_points) {
    auto src = chain_space(shape.upper_weights, max_points);
    auto dst = chain_space(shape.lower_weights, max_points);
    const int n = src->num_points();
    const int s = shape.split_block;
    const int size_a = shape.lower_weights[static_cast<std::size_t>(shape.target_a)];

    EquivariantMatrix m{src, dst, {}};
    std::vector<int> keys;
    for (int j = 0; j <= src->top_degree(); ++j) {
        SparseMatrix mat;
        mat.rows = dst->dim(j);
        for (const ChainBasisElement& b : src->basis(j)) {
            PointMask block_points = 0;
            Word relabelled = 0;
            for (int p = 0; p < n; ++p) {
                const int t = word_label(b.word, p);
                if (t == s) {
                    block_points |= PointMask{1} << p;
                } else {
                    relabelled = word_with_label(relabelled, p, shape.relabel[static_cast<std::size_t>(t)]);
                }
            }
            const PointMask block_wedge = b.wedge & block_points;
            const PointMask other_wedge = b.wedge & ~block_points;
            const BlockWedge v{{block_wedge, Rational(1)}};

            VecBuilder col;
            // Every ordered split (D_A, D_B) of the affected block.
            const std::vector<int> pts = points_of(block_points);
            for (PointMask sub = block_points;; sub = (sub - 1) & block_points) {
                if (std::popcount(sub) == size_a) {
                    const PointMask part_b = block_points & ~sub;
                    Word word = relabelled;
                    for (int p : pts) word = word_with_label(word, p, (sub >> p) & 1u ? shape.target_a : shape.target_b);
                    const SplitWedge proj = split_projection(SplitDecomposition(block_points, sub, part_b), v);
                    for (const auto& [parts, coeff] : proj) {
                        const auto [sa, sb] = parts;
                        // Factor order in the source: block by block; the
                        // split block contributes its A factors then B factors.
                        keys.clear();
                        for (int t = 0; t < src->num_blocks(); ++t) {
                            if (t == s) {
                                for (int y : points_of(sa)) keys.push_back(shape.target_a * 16 + y);
                                for (int z : points_of(sb)) keys.push_back(shape.target_b * 16 + z);
                                continue;
                            }
                            const int target = shape.relabel[static_cast<std::size_t>(t)];
                            for (int x : points_of(other_wedge)) {
                                if (word_label(b.word, x) == t) keys.push_back(target * 16 + x);
                            }
                        }
                        const int sign = sort_sign(keys);
                        const Index target = dst->index_of(j, {word, other_wedge | sa | sb});
                        col.add(target, sign > 0 ? coeff : Rational(-coeff));
                    }
                }
                if (sub == 0) break;
            }
            mat.cols.push_back(col.build());
        }
        m.by_degree.push_back(std::move(mat));
    }
    return m;
}

std::shared_ptr<const PerEdgeMap> cached_per_edge_map(const VertexWeightedGraph& g, const State& upper, EdgeIndex e,
                                                      int max_points) {
    if (e < 0 || e >= g.num_edges() || !(upper.mask & (EdgeMask{1} << e))) {
        throw InputError("edge " + std::to_string(e) + " is not in the state");
    }
    const State lower = state_profile(g, upper.mask & ~(EdgeMask{1} << e));
    SplitShape shape;
    shape.upper_weights = upper.block_weights;
    shape.lower_weights = lower.block_weights;
    if (lower.num_blocks() != upper.num_blocks()) {
        const Edge& edge = g.edge(e);
        shape.split_block = upper.component_of[static_cast<std::size_t>(edge.u)];
        shape.target_a = lower.component_of[static_cast<std::size_t>(edge.u)];
        shape.target_b = lower.component_of[static_cast<std::size_t>(edge.v)];
        if (shape.target_a > shape.target_b) std::swap(shape.target_a, shape.target_b);
        for (int t = 0; t < upper.num_blocks(); ++t) {
            const VertexIndex rep = upper.blocks[static_cast<std::size_t>(t)].front();
            shape.relabel.push_back(t == shape.split_block ? -1 : lower.component_of[static_cast<std::size_t>(rep)]);
        }
    }

    static std::mutex mutex;
    static std::map<std::pair<std::vector<int>, int>, std::shared_ptr<const PerEdgeMap>> cache;
    const auto key = std::make_pair(shape.key(), max_points);
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto built = std::make_shared<PerEdgeMap>();
    if (shape.split_block < 0) {
        built->kind = EdgeCase::SameComponents;
        built->matrix = identity_map(chain_space(shape.upper_weights, max_points));
    } else {
        built->kind = EdgeCase::SplitsComponent;
        built->matrix = split_map(shape, max_points);
    }
    std::lock_guard lock(mutex);
    return cache.emplace(key, std::move(built)).first->second;
}

}  // namespace

PerEdgeMap per_edge_map(const VertexWeightedGraph& g, const State& upper, EdgeIndex e, int max_points) {
    return *cached_per_edge_map(g, upper, e, max_points);
}

ChainComplex::ChainComplex(VertexWeightedGraph g, const ComplexOptions& options) : graph_(std::move(g)) {
    const int n = graph_.total_weight();
    const int m = graph_.num_edges();
    if (n > options.max_points || n > kHardMaxPoints) {
        throw BoundError("total weight " + std::to_string(n) + " exceeds the bound " +
                         std::to_string(std::min(options.max_points, kHardMaxPoints)));
    }
    if (m > options.max_edges) {
        throw BoundError("edge count " + std::to_string(m) + " exceeds the bound " + std::to_string(options.max_edges));
    }

    std::vector<std::vector<LayerEntry>> lattice;
    for (int i = 0; i <= m; ++i) lattice.push_back(lattice_layer(graph_, i));

    const auto degrees = static_cast<std::size_t>(n);
    layers_.resize(lattice.size());
    dims_.assign(lattice.size(), std::vector<std::size_t>(degrees, 0));
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        for (const LayerEntry& entry : lattice[i]) {
            ChainSummand summand{entry.state, chain_space(entry.state.block_weights, options.max_points), {}};
            for (std::size_t j = 0; j < degrees; ++j) {
                summand.offset.push_back(static_cast<Index>(dims_[i][j]));
                dims_[i][j] += summand.space->dim(static_cast<int>(j));
            }
            position_.emplace(entry.state.mask, layers_[i].size());
            layers_[i].push_back(std::move(summand));
        }
    }

    diff_.resize(lattice.size());
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        for (std::size_t j = 0; j < degrees; ++j) {
            SparseMatrix mat;
            mat.rows = i == 0 ? 0 : dims_[i - 1][j];
            mat.cols.resize(dims_[i][j]);
            diff_[i].push_back(std::move(mat));
        }
        if (i == 0) continue;
        for (std::size_t pos = 0; pos < lattice[i].size(); ++pos) {
            const LayerEntry& entry = lattice[i][pos];
            const ChainSummand& src = layers_[i][pos];
            for (std::size_t j = 0; j < degrees; ++j) {
                const std::size_t local_dim = src.space->dim(static_cast<int>(j));
                std::vector<VecBuilder> cols(local_dim);
                for (const HasseEdge& h : entry.down) {
                    const auto pem = cached_per_edge_map(graph_, entry.state, h.removed, options.max_points);
                    const ChainSummand& dst = summand(h.lower);
                    if (j >= pem->matrix.by_degree.size()) continue;
                    const SparseMatrix& local = pem->matrix.degree(static_cast<int>(j));
                    const Index shift = dst.offset[j];
                    for (std::size_t k = 0; k < local_dim; ++k) {
                        for (const auto& [row, c] : local.cols[k].entries()) {
                            cols[k].add(shift + row, h.sign > 0 ? c : Rational(-c));
                        }
                    }
                }
                for (std::size_t k = 0; k < local_dim; ++k) diff_[i][j].cols[src.offset[j] + k] = cols[k].build();
            }
        }
    }

    if (options.check_square) verify_square_zero();
    if (options.check_equivariance) verify_equivariance();
}

std::size_t ChainComplex::dim(int i, int j) const {
    if (i < 0 || i > max_index() || j < 0 || j > max_degree()) return 0;
    return dims_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

std::size_t ChainComplex::summand_index(EdgeMask mask) const {
    auto it = position_.find(mask);
    if (it == position_.end()) throw InputError("not a state of this graph");
    return it->second;
}

const ChainSummand& ChainComplex::summand(EdgeMask mask) const {
    return layers_.at(static_cast<std::size_t>(std::popcount(mask))).at(summand_index(mask));
}

const SparseMatrix& ChainComplex::differential(int i, int j) const {
    if (i < 0 || i > max_index() || j < 0 || j > max_degree()) throw InputError("differential index out of range");
    return diff_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

std::pair<const ChainSummand*, Index> ChainComplex::locate(int i, int j, Index k) const {
    if (k >= dim(i, j)) throw InputError("coordinate out of range");
    const auto& layer = summands(i);
    const auto jj = static_cast<std::size_t>(j);
    // Last summand whose offset is <= k; it is never an empty one.
    auto it = std::upper_bound(layer.begin(), layer.end(), k,
                               [jj](Index key, const ChainSummand& s) { return key < s.offset[jj]; });
    --it;
    return {&*it, k - it->offset[jj]};
}

SparseVec ChainComplex::act(int i, int j, const Perm& g, const SparseVec& v) const {
    if (static_cast<int>(g.size()) != num_points()) throw InputError("permutation has the wrong degree");
    const auto jj = static_cast<std::size_t>(j);
    VecBuilder acc;
    std::vector<std::pair<Index, int>> images;
    for (const auto& [k, c] : v.entries()) {
        const auto [s, local] = locate(i, j, k);
        images.clear();
        act_on_basis(*s->space, j, g, s->space->basis(j)[local], images);
        for (const auto& [idx, sign] : images) acc.add(s->offset[jj] + idx, sign > 0 ? c : Rational(-c));
    }
    return acc.build();
}

void ChainComplex::verify_square_zero() const {
    for (int i = 2; i <= max_index(); ++i) {
        for (int j = 0; j <= max_degree(); ++j) {
            const SparseMatrix& upper = differential(i, j);
            const SparseMatrix& lower = differential(i - 1, j);
            for (const SparseVec& col : upper.cols) {
                if (!lower.apply(col).empty()) {
                    throw InvariantViolation("d^2 != 0 at (i, j) = (" + std::to_string(i) + ", " + std::to_string(j) +
                                             ")");
                }
            }
        }
    }
}

void ChainComplex::verify_equivariance() const {
    const int n = num_points();
    for (int a = 0; a + 1 < n; ++a) {
        Perm s = identity_perm(n);
        std::swap(s[static_cast<std::size_t>(a)], s[static_cast<std::size_t>(a + 1)]);
        for (int i = 1; i <= max_index(); ++i) {
            for (int j = 0; j <= max_degree(); ++j) {
                const SparseMatrix& d = differential(i, j);
                for (Index k = 0; k < d.num_cols(); ++k) {
                    const SparseVec lhs = d.apply(act(i, j, s, SparseVec::unit(k)));
                    const SparseVec rhs = act(i - 1, j, s, d.cols[k]);
                    if (lhs != rhs) {
                        throw InvariantViolation("differential is not equivariant at (i, j) = (" + std::to_string(i) +
                                                 ", " + std::to_string(j) + ")");
                    }
                }
            }
        }
    }
}

std::shared_ptr<const ChainComplex> build_complex(const VertexWeightedGraph& g, const ComplexOptions& options) {
    return std::make_shared<const ChainComplex>(g, options);
}

}  // namespace chromsh
