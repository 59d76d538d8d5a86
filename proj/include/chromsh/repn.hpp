#pragma once

// Explicit bases for the chain modules M_F and the symmetric-group action.
//
// A state F with component weights b_1..b_r contributes the induced module
// Ind_{S_b1 x ... x S_br}^{S_N} (L_b1 (x) ... (x) L_br). It is modelled on
// ordered block tuples (D_1..D_r), a set partition of the points {0..N-1}
// with |D_t| = b_t, together with a wedge monomial in each block: the subset
// S_t of D_t \ {min D_t} indexes  /\_{x in S_t} (e_x - e_{min D_t}), a basis
// element of the exterior algebra of the sum-zero representation on D_t.
//
// Wedge monomials of different blocks are concatenated in block order, each
// block's factors in increasing point order. The degree j is the total
// number of factors.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chromsh/graph.hpp"
#include "chromsh/linalg.hpp"
#include "chromsh/partition.hpp"

namespace chromsh {

inline constexpr int kDefaultMaxPoints = 7;
/// Words pack one 4-bit block label per point.
inline constexpr int kHardMaxPoints = 12;

using Perm = std::vector<int>;
using Word = std::uint64_t;
using PointMask = std::uint32_t;

inline int word_label(Word w, int point) { return static_cast<int>((w >> (4 * point)) & 0xFu); }
inline Word word_with_label(Word w, int point, int label) {
    const Word shift = 4 * static_cast<Word>(point);
    return (w & ~(Word{0xF} << shift)) | (static_cast<Word>(label) << shift);
}

Perm compose(const Perm& g, const Perm& h);  // (g h)(p) = g(h(p))
Perm inverse(const Perm& g);
Perm identity_perm(int n);
int perm_sign(const Perm& g);

/// Each vertex owns the contiguous run of points [start, start + weight),
/// assigned in vertex order. This fixes the ambient group S_{w(G)}.
struct PointMap {
    int total = 0;
    std::vector<std::pair<int, int>> intervals;  // (start, length) per vertex

    static PointMap from_graph(const VertexWeightedGraph& g);
    /// Block tuple in which component t holds the points of its vertices.
    Word base_word(const State& s) const;
};

struct ChainBasisElement {
    Word word = 0;
    PointMask wedge = 0;
    friend bool operator==(const ChainBasisElement&, const ChainBasisElement&) = default;
};

/// The graded chain space of a state, determined by its ordered block
/// weights. Basis per degree j: block tuples in lexicographic order of their
/// label words, then wedge masks in increasing numeric order.
class ChainSpace {
public:
    explicit ChainSpace(std::vector<int> block_weights);

    int num_points() const { return n_; }
    int num_blocks() const { return static_cast<int>(weights_.size()); }
    const std::vector<int>& block_weights() const { return weights_; }
    /// Largest degree with a nonzero piece: N - r.
    int top_degree() const { return n_ - num_blocks(); }

    std::size_t dim(int j) const;
    std::size_t total_dim() const;
    const std::vector<ChainBasisElement>& basis(int j) const;
    std::optional<Index> find(int j, const ChainBasisElement& b) const;
    Index index_of(int j, const ChainBasisElement& b) const;

    const std::vector<Word>& words() const { return words_; }
    /// Points of the word that are not the minimum of their block.
    PointMask free_points(Word w) const;

private:
    static std::uint64_t key(const ChainBasisElement& b) { return (b.word << 16) | b.wedge; }

    int n_ = 0;
    std::vector<int> weights_;
    std::vector<Word> words_;
    std::vector<std::vector<ChainBasisElement>> basis_;
    std::vector<std::unordered_map<std::uint64_t, Index>> index_;
};

/// Shared chain space for the given ordered block weights. Throws BoundError
/// when the weights sum to more than max_points (or kHardMaxPoints).
std::shared_ptr<const ChainSpace> chain_space(const std::vector<int>& block_weights,
                                              int max_points = kDefaultMaxPoints);

/// chain_space for a state of G; the point map must describe G.
std::shared_ptr<const ChainSpace> chain_space(const VertexWeightedGraph& g, const State& s, const PointMap& points,
                                              int max_points = kDefaultMaxPoints);

/// Image of a basis element under g, as (index, coefficient) pairs with
/// integer coefficients.
void act_on_basis(const ChainSpace& space, int j, const Perm& g, const ChainBasisElement& b,
                  std::vector<std::pair<Index, int>>& out);

/// g . v for v in the degree-j piece of the space.
SparseVec act(const ChainSpace& space, int j, const Perm& g, const SparseVec& v);

/// Splitting a block D into (D_A, D_B): the sum-zero space on D decomposes as
/// std(D_A) + std(D_B) + C u with u = (1/|D_A|) sum_{D_A} e - (1/|D_B|) sum_{D_B} e.
struct SplitDecomposition {
    PointMask block = 0;
    PointMask part_a = 0;
    PointMask part_b = 0;

    /// Throws InputError unless part_a and part_b are disjoint, nonempty and
    /// cover block.
    SplitDecomposition(PointMask block, PointMask part_a, PointMask part_b);

    /// Coordinates of e_x - e_{min D} in the adapted basis
    /// {e_y - e_{min D_A}} u {e_z - e_{min D_B}} u {u}: A-part by increasing y,
    /// then B-part by increasing z, then the u coefficient last.
    std::vector<Rational> adapted_coordinates(int x) const;
};

/// A vector of the exterior algebra of std(D): wedge mask over D \ {min D}
/// to coefficient.
using BlockWedge = std::map<PointMask, Rational>;
/// A vector of Lambda std(D_A) (x) Lambda std(D_B): (S_A, S_B) to coefficient,
/// monomials ordered with the A-factors first.
using SplitWedge = std::map<std::pair<PointMask, PointMask>, Rational>;

/// Rewrites every factor in the adapted basis, expands, drops each term
/// containing u. Degree preserving.
SplitWedge split_projection(const SplitDecomposition& dec, const BlockWedge& v);

/// P_lambda = (f^lambda / N!) sum_g chi_lambda(g^-1) g, applied by summing
/// over all of S_N. Intended for checks at small N.
class IsotypicProjector {
public:
    explicit IsotypicProjector(Partition lambda);

    const Partition& lambda() const { return lambda_; }
    SparseVec apply(const ChainSpace& space, int j, const SparseVec& v) const;
    /// Trace on the degree-j piece; equals f^lambda times the multiplicity.
    Rational trace(const ChainSpace& space, int j) const;

private:
    Partition lambda_;
    std::vector<Perm> elements_;
    std::vector<Rational> weights_;
};

/// Row and column groups of the row-reading tableau of shape lambda. The
/// image of a module V under (second-group sum)(first-group sum) has
/// dimension equal to the multiplicity of S^lambda in V.
class YoungSymmetrizer {
public:
    explicit YoungSymmetrizer(const Partition& lambda);

    const Partition& lambda() const { return lambda_; }
    std::size_t num_terms() const { return row_group_.size() * col_group_.size(); }

    /// Spanning set of e.V for the degree-j piece of a chain space; the
    /// returned vectors are linearly independent.
    std::vector<SparseVec> isotypic_basis(const ChainSpace& space, int j) const;

    SparseVec apply(const ChainSpace& space, int j, const SparseVec& v) const;

private:
    Partition lambda_;
    std::vector<Perm> row_group_;
    std::vector<std::pair<Perm, int>> col_group_;
};

/// Cached YoungSymmetrizer::isotypic_basis keyed by (space, j, lambda).
std::shared_ptr<const std::vector<SparseVec>> cached_isotypic_basis(const std::shared_ptr<const ChainSpace>& space,
                                                                    int j, const Partition& lambda);

}  // namespace chromsh
