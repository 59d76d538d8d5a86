#include "chromsh/repn.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>
#include <tuple>
#include <unordered_set>

#include "chromsh/character_table.hpp"
#include "chromsh/error.hpp"
#include "bits.hpp"

namespace chromsh {

using detail::mask_of;
using detail::points_of;
using detail::sort_sign;

Perm compose(const Perm& g, const Perm& h) {
    Perm out(h.size());
    for (std::size_t p = 0; p < h.size(); ++p) out[p] = g[static_cast<std::size_t>(h[p])];
    return out;
}

Perm inverse(const Perm& g) {
    Perm out(g.size());
    for (std::size_t p = 0; p < g.size(); ++p) out[static_cast<std::size_t>(g[p])] = static_cast<int>(p);
    return out;
}

Perm identity_perm(int n) {
    Perm out(static_cast<std::size_t>(n));
    std::iota(out.begin(), out.end(), 0);
    return out;
}

int perm_sign(const Perm& g) {
    int inversions = 0;
    for (std::size_t a = 0; a < g.size(); ++a) {
        for (std::size_t b = a + 1; b < g.size(); ++b) {
            if (g[a] > g[b]) ++inversions;
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

namespace {

Word act_on_word(const Perm& g, Word w, int n) {
    Word out = 0;
    for (int p = 0; p < n; ++p) out = word_with_label(out, g[static_cast<std::size_t>(p)], word_label(w, p));
    return out;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
    const std::size_t k = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t pivot = c;
        while (pivot < k && m[pivot][c] == 0) ++pivot;
        if (pivot == k) return 0;
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < k; ++r) {
            if (m[r][c] == 0) continue;
            const Rational f = m[r][c] / m[c][c];
            for (std::size_t cc = c; cc < k; ++cc) m[r][cc] -= f * m[c][cc];
        }
    }
    return det;
}

// All permutations of {0..n-1} that preserve each of the given point sets.
std::vector<Perm> young_subgroup(int n, const std::vector<std::vector<int>>& sets) {
    std::vector<Perm> group{identity_perm(n)};
    for (const auto& set : sets) {
        if (set.size() < 2) continue;
        std::vector<Perm> next;
        std::vector<int> images = set;
        std::sort(images.begin(), images.end());
        do {
            Perm local = identity_perm(n);
            for (std::size_t k = 0; k < set.size(); ++k) local[static_cast<std::size_t>(set[k])] = images[k];
            for (const Perm& g : group) next.push_back(compose(local, g));
        } while (std::next_permutation(images.begin(), images.end()));
        group = std::move(next);
    }
    return group;
}

}  // namespace

PointMap PointMap::from_graph(const VertexWeightedGraph& g) {
    PointMap pm;
    for (VertexIndex v = 0; v < g.num_vertices(); ++v) {
        pm.intervals.emplace_back(pm.total, g.weight(v));
        pm.total += g.weight(v);
    }
    return pm;
}

Word PointMap::base_word(const State& s) const {
    Word w = 0;
    for (std::size_t v = 0; v < intervals.size(); ++v) {
        const auto [start, len] = intervals[v];
        for (int p = start; p < start + len; ++p) w = word_with_label(w, p, s.component_of[v]);
    }
    return w;
}

ChainSpace::ChainSpace(std::vector<int> block_weights) : weights_(std::move(block_weights)) {
    n_ = std::accumulate(weights_.begin(), weights_.end(), 0);
    if (n_ < 1 || n_ > kHardMaxPoints) throw BoundError("chain space needs 1 <= N <= 12");
    if (weights_.size() > 16) throw BoundError("too many blocks");
    std::vector<int> labels;
    for (std::size_t t = 0; t < weights_.size(); ++t) {
        if (weights_[t] < 1) throw InputError("block weights must be positive");
        labels.insert(labels.end(), static_cast<std::size_t>(weights_[t]), static_cast<int>(t));
    }
    do {
        Word w = 0;
        for (int p = 0; p < n_; ++p) w = word_with_label(w, p, labels[static_cast<std::size_t>(p)]);
        words_.push_back(w);
    } while (std::next_permutation(labels.begin(), labels.end()));

    basis_.resize(static_cast<std::size_t>(top_degree() + 1));
    index_.resize(basis_.size());
    for (Word w : words_) {
        const PointMask free = free_points(w);
        std::vector<PointMask> subs;
        for (PointMask s = free;; s = (s - 1) & free) {
            subs.push_back(s);
            if (s == 0) break;
        }
        std::reverse(subs.begin(), subs.end());
        for (PointMask s : subs) {
            const auto j = static_cast<std::size_t>(std::popcount(s));
            const ChainBasisElement b{w, s};
            index_[j].emplace(key(b), static_cast<Index>(basis_[j].size()));
            basis_[j].push_back(b);
        }
    }
}

std::size_t ChainSpace::dim(int j) const {
    if (j < 0 || j > top_degree()) return 0;
    return basis_[static_cast<std::size_t>(j)].size();
}

std::size_t ChainSpace::total_dim() const {
    std::size_t total = 0;
    for (const auto& b : basis_) total += b.size();
    return total;
}

const std::vector<ChainBasisElement>& ChainSpace::basis(int j) const {
    static const std::vector<ChainBasisElement> empty;
    if (j < 0 || j > top_degree()) return empty;
    return basis_[static_cast<std::size_t>(j)];
}

std::optional<Index> ChainSpace::find(int j, const ChainBasisElement& b) const {
    if (j < 0 || j > top_degree()) return std::nullopt;
    const auto& idx = index_[static_cast<std::size_t>(j)];
    auto it = idx.find(key(b));
    if (it == idx.end()) return std::nullopt;
    return it->second;
}

Index ChainSpace::index_of(int j, const ChainBasisElement& b) const {
    auto k = find(j, b);
    if (!k) throw InvariantViolation("basis element not present in chain space");
    return *k;
}

PointMask ChainSpace::free_points(Word w) const {
    PointMask seen_labels = 0;
    PointMask free = 0;
    for (int p = 0; p < n_; ++p) {
        const int t = word_label(w, p);
        if (seen_labels & (PointMask{1} << t)) {
            free |= PointMask{1} << p;
        } else {
            seen_labels |= PointMask{1} << t;
        }
    }
    return free;
}

std::shared_ptr<const ChainSpace> chain_space(const std::vector<int>& block_weights, int max_points) {
    const int n = std::accumulate(block_weights.begin(), block_weights.end(), 0);
    if (n > max_points || n > kHardMaxPoints) {
        throw BoundError("total weight " + std::to_string(n) + " exceeds the point bound " +
                         std::to_string(std::min(max_points, kHardMaxPoints)));
    }
    static std::mutex mutex;
    static std::map<std::vector<int>, std::shared_ptr<const ChainSpace>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(block_weights); it != cache.end()) return it->second;
    }
    auto built = std::make_shared<const ChainSpace>(block_weights);
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.emplace(block_weights, std::move(built));
    return it->second;
}

std::shared_ptr<const ChainSpace> chain_space(const VertexWeightedGraph& g, const State& s, const PointMap& points,
                                              int max_points) {
    if (points.total != g.total_weight() || points.intervals.size() != static_cast<std::size_t>(g.num_vertices())) {
        throw InputError("point map does not describe the graph");
    }
    return chain_space(s.block_weights, max_points);
}

void act_on_basis(const ChainSpace& space, int j, const Perm& g, const ChainBasisElement& b,
                  std::vector<std::pair<Index, int>>& out) {
    const int n = space.num_points();
    const int r = space.num_blocks();
    if (static_cast<int>(g.size()) != n) throw InputError("permutation size does not match the chain space");

    std::vector<int> source_min(static_cast<std::size_t>(r), -1);
    std::vector<int> image_min(static_cast<std::size_t>(r), n);
    std::vector<std::vector<int>> wedge_images(static_cast<std::size_t>(r));
    Word image_word = 0;
    for (int p = 0; p < n; ++p) {
        const int t = word_label(b.word, p);
        const int gp = g[static_cast<std::size_t>(p)];
        image_word = word_with_label(image_word, gp, t);
        auto& smin = source_min[static_cast<std::size_t>(t)];
        if (smin < 0) smin = p;
        image_min[static_cast<std::size_t>(t)] = std::min(image_min[static_cast<std::size_t>(t)], gp);
        if (b.wedge & (PointMask{1} << p)) wedge_images[static_cast<std::size_t>(t)].push_back(gp);
    }

    // Expand block by block; each block's factors e_{gx} - e_{g min D} are
    // re-anchored at min(gD), and at most one factor may take the e_{g min D}
    // term.
    std::vector<std::pair<PointMask, int>> terms{{0, 1}};
    std::vector<std::pair<PointMask, int>> block_terms;
    std::vector<int> seq;
    for (int t = 0; t < r; ++t) {
        const auto& a = wedge_images[static_cast<std::size_t>(t)];
        if (a.empty()) continue;
        const int c = g[static_cast<std::size_t>(source_min[static_cast<std::size_t>(t)])];
        const int anchor = image_min[static_cast<std::size_t>(t)];
        block_terms.clear();
        if (c == anchor) {
            block_terms.emplace_back(mask_of(a), sort_sign(a));
        } else {
            int hit = -1;
            for (std::size_t k = 0; k < a.size(); ++k) {
                if (a[k] == anchor) hit = static_cast<int>(k);
            }
            if (hit < 0) block_terms.emplace_back(mask_of(a), sort_sign(a));
            for (std::size_t k = 0; k < a.size(); ++k) {
                if (hit >= 0 && static_cast<int>(k) != hit) continue;
                seq = a;
                seq[k] = c;
                block_terms.emplace_back(mask_of(seq), -sort_sign(seq));
            }
        }
        std::vector<std::pair<PointMask, int>> next;
        next.reserve(terms.size() * block_terms.size());
        for (const auto& [m1, s1] : terms) {
            for (const auto& [m2, s2] : block_terms) next.emplace_back(m1 | m2, s1 * s2);
        }
        terms = std::move(next);
    }
    for (const auto& [mask, sign] : terms) {
        out.emplace_back(space.index_of(j, {image_word, mask}), sign);
    }
}

SparseVec act(const ChainSpace& space, int j, const Perm& g, const SparseVec& v) {
    VecBuilder acc;
    std::vector<std::pair<Index, int>> images;
    const auto& basis = space.basis(j);
    for (const auto& [k, c] : v.entries()) {
        images.clear();
        act_on_basis(space, j, g, basis[k], images);
        for (const auto& [idx, sign] : images) acc.add(idx, sign > 0 ? c : Rational(-c));
    }
    return acc.build();
}

SplitDecomposition::SplitDecomposition(PointMask block_, PointMask part_a_, PointMask part_b_)
    : block(block_), part_a(part_a_), part_b(part_b_) {
    if (part_a == 0 || part_b == 0 || (part_a & part_b) != 0 || (part_a | part_b) != block) {
        throw InputError("split parts must be nonempty, disjoint and cover the block");
    }
}

std::vector<Rational> SplitDecomposition::adapted_coordinates(int x) const {
    const int block_min = std::countr_zero(block);
    const int a_min = std::countr_zero(part_a);
    const int b_min = std::countr_zero(part_b);
    const Rational a_size = std::popcount(part_a);
    const Rational b_size = std::popcount(part_b);
    const auto in_a = [&](int p) { return (part_a >> p) & 1u; };
    // v = e_x - e_{min D}; s = sum of v over D_A.
    const Rational s = static_cast<int>(in_a(x)) - static_cast<int>(in_a(block_min));
    std::vector<Rational> coords;
    for (int y : points_of(part_a)) {
        if (y == a_min) continue;
        coords.push_back(Rational(y == x ? 1 : 0) - s / a_size);
    }
    for (int z : points_of(part_b)) {
        if (z == b_min) continue;
        coords.push_back(Rational(z == x ? 1 : 0) + s / b_size);
    }
    coords.push_back(s);
    return coords;
}

SplitWedge split_projection(const SplitDecomposition& dec, const BlockWedge& v) {
    const int a_min = std::countr_zero(dec.part_a);
    const int b_min = std::countr_zero(dec.part_b);
    std::vector<int> columns;  // adapted basis vector -> point it is anchored at
    std::vector<bool> column_in_a;
    for (int y : points_of(dec.part_a)) {
        if (y != a_min) {
            columns.push_back(y);
            column_in_a.push_back(true);
        }
    }
    for (int z : points_of(dec.part_b)) {
        if (z != b_min) {
            columns.push_back(z);
            column_in_a.push_back(false);
        }
    }
    const int block_min = std::countr_zero(dec.block);
    SplitWedge out;
    for (const auto& [mask, coeff] : v) {
        if (mask & ~dec.block) throw InputError("wedge factor outside the block");
        if (mask & (PointMask{1} << block_min)) throw InputError("wedge factor at the block minimum");
        const std::vector<int> xs = points_of(mask);
        const std::size_t k = xs.size();
        if (k > columns.size()) continue;
        std::vector<std::vector<Rational>> rows;
        for (int x : xs) {
            auto c = dec.adapted_coordinates(x);
            c.pop_back();  // the u coordinate is dropped
            rows.push_back(std::move(c));
        }
        // Coefficient on /\_{c in T} basis_c is the minor on columns T.
        std::vector<int> pick(k);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            std::vector<std::vector<Rational>> minor(k, std::vector<Rational>(k));
            for (std::size_t r = 0; r < k; ++r) {
                for (std::size_t c = 0; c < k; ++c) minor[r][c] = rows[r][static_cast<std::size_t>(pick[c])];
            }
            const Rational det = k == 0 ? Rational(1) : determinant(std::move(minor));
            if (det != 0) {
                PointMask sa = 0;
                PointMask sb = 0;
                for (int c : pick) {
                    (column_in_a[static_cast<std::size_t>(c)] ? sa : sb) |= PointMask{1} << columns[static_cast<std::size_t>(c)];
                }
                Rational& slot = out[{sa, sb}];
                slot += coeff * det;
                if (slot == 0) out.erase({sa, sb});
            }
            // next k-combination of columns
            int pos = static_cast<int>(k) - 1;
            while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == static_cast<int>(columns.size() - k) + pos) --pos;
            if (pos < 0) break;
            ++pick[static_cast<std::size_t>(pos)];
            for (std::size_t q = static_cast<std::size_t>(pos) + 1; q < k; ++q) pick[q] = pick[q - 1] + 1;
        }
    }
    return out;
}

IsotypicProjector::IsotypicProjector(Partition lambda) : lambda_(std::move(lambda)) {
    const int n = lambda_.size();
    const auto table = character_table(n, kHardMaxPoints);
    const std::size_t row = table->index_of(lambda_);
    const Rational scale = Rational(static_cast<unsigned long>(table->dimension(row))) /
                           Rational(static_cast<unsigned long>(factorial(n)));
    Perm g = identity_perm(n);
    do {
        const auto chi = table->value(row, table->index_of(cycle_type(g)));
        if (chi != 0) {
            elements_.push_back(g);
            weights_.push_back(scale * Rational(chi));
        }
    } while (std::next_permutation(g.begin(), g.end()));
}

SparseVec IsotypicProjector::apply(const ChainSpace& space, int j, const SparseVec& v) const {
    if (space.num_points() != lambda_.size()) throw InputError("projector degree does not match chain space");
    VecBuilder acc;
    for (std::size_t k = 0; k < elements_.size(); ++k) acc.add(act(space, j, elements_[k], v), weights_[k]);
    return acc.build();
}

Rational IsotypicProjector::trace(const ChainSpace& space, int j) const {
    Rational total = 0;
    for (Index k = 0; k < space.dim(j); ++k) total += apply(space, j, SparseVec::unit(k)).at(k);
    return total;
}

YoungSymmetrizer::YoungSymmetrizer(const Partition& lambda) : lambda_(lambda) {
    const int n = lambda.size();
    std::vector<std::vector<int>> rows;
    std::vector<std::vector<int>> cols(lambda.empty() ? 0 : static_cast<std::size_t>(lambda[0]));
    int next = 0;
    for (int part : lambda.parts()) {
        std::vector<int> row;
        for (int c = 0; c < part; ++c) {
            row.push_back(next);
            cols[static_cast<std::size_t>(c)].push_back(next);
            ++next;
        }
        rows.push_back(std::move(row));
    }
    row_group_ = young_subgroup(n, rows);
    for (Perm& g : young_subgroup(n, cols)) {
        const int s = perm_sign(g);
        col_group_.emplace_back(std::move(g), s);
    }
}

SparseVec YoungSymmetrizer::apply(const ChainSpace& space, int j, const SparseVec& v) const {
    VecBuilder rows;
    for (const Perm& g : row_group_) rows.add(act(space, j, g, v));
    const SparseVec a = rows.build();
    VecBuilder cols;
    for (const auto& [g, s] : col_group_) cols.add(act(space, j, g, a), s);
    return cols.build();
}

std::vector<SparseVec> YoungSymmetrizer::isotypic_basis(const ChainSpace& space, int j) const {
    if (space.num_points() != lambda_.size()) throw InputError("symmetrizer degree does not match chain space");
    if (space.dim(j) == 0) return {};

    std::vector<std::pair<Perm, int>> rows;
    for (const Perm& g : row_group_) rows.emplace_back(g, 1);
    // Sum over the larger group first; span{e_1 b} only needs one word per
    // orbit of that group, since e_1 g = sign(g) e_1.
    const bool rows_first = row_group_.size() >= col_group_.size();
    const auto& first = rows_first ? rows : col_group_;
    const auto& second = rows_first ? col_group_ : rows;

    const int n = space.num_points();
    const auto& basis = space.basis(j);
    std::unordered_set<Word> visited;
    std::vector<SparseVec> stage;
    std::vector<std::pair<Index, int>> images;
    std::size_t k = 0;
    while (k < basis.size()) {
        const Word w = basis[k].word;
        std::size_t end = k;
        while (end < basis.size() && basis[end].word == w) ++end;
        if (!visited.contains(w)) {
            for (const auto& [g, s] : first) visited.insert(act_on_word(g, w, n));
            Echelon local;
            for (std::size_t b = k; b < end; ++b) {
                VecBuilder acc;
                for (const auto& [g, s] : first) {
                    images.clear();
                    act_on_basis(space, j, g, basis[b], images);
                    for (const auto& [idx, sign] : images) acc.add(idx, sign * s);
                }
                SparseVec v = acc.build();
                if (local.insert(v)) stage.push_back(std::move(v));
            }
        }
        k = end;
    }

    Echelon global;
    std::vector<SparseVec> out;
    for (const SparseVec& x : stage) {
        VecBuilder acc;
        for (const auto& [g, s] : second) acc.add(act(space, j, g, x), s);
        SparseVec y = acc.build();
        if (global.insert(y)) out.push_back(std::move(y));
    }
    return out;
}

std::shared_ptr<const std::vector<SparseVec>> cached_isotypic_basis(const std::shared_ptr<const ChainSpace>& space,
                                                                    int j, const Partition& lambda) {
    using Key = std::tuple<const ChainSpace*, int, Partition>;
    static std::mutex mutex;
    static std::map<Key, std::shared_ptr<const std::vector<SparseVec>>> cache;
    Key key{space.get(), j, lambda};
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto built = std::make_shared<const std::vector<SparseVec>>(YoungSymmetrizer(lambda).isotypic_basis(*space, j));
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.emplace(std::move(key), std::move(built));
    return it->second;
}

}  // namespace chromsh
