#include <doctest.h>

#include <algorithm>
#include <random>

#include "chromsh/character_table.hpp"
#include "chromsh/error.hpp"
#include "chromsh/repn.hpp"
#include "chromsh/symfunc.hpp"

using namespace chromsh;

namespace {

const std::vector<std::vector<int>> kShapes{{1}, {2}, {3}, {1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1}, {1, 1, 1}, {2, 1, 1}, {3, 2}};

std::uint64_t expected_total_dim(const std::vector<int>& weights) {
    int n = 0;
    std::uint64_t denom = 1;
    std::uint64_t wedges = 1;
    for (int b : weights) {
        n += b;
        denom *= factorial(b);
        wedges <<= (b - 1);
    }
    return factorial(n) / denom * wedges;
}

Rational trace_of(const ChainSpace& space, int j, const Perm& g) {
    Rational total = 0;
    std::vector<std::pair<Index, int>> image;
    const auto& basis = space.basis(j);
    for (Index k = 0; k < basis.size(); ++k) {
        image.clear();
        act_on_basis(space, j, g, basis[k], image);
        for (const auto& [idx, c] : image)
            if (idx == k) total += c;
    }
    return total;
}

Perm perm_of_type(const Partition& mu) {
    Perm g;
    int start = 0;
    for (int part : mu.parts()) {
        for (int k = 0; k < part; ++k) g.push_back(start + (k + 1) % part);
        start += part;
    }
    return g;
}

SparseVec random_vector(std::size_t dim, std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    SparseVec v;
    for (std::size_t k = 0; k < dim; ++k) v.push_back(static_cast<Index>(k), coeff(rng));
    return v;
}

// Vector e_x - e_{min D} in Q^N.
std::vector<Rational> root(int n, int x, int base) {
    std::vector<Rational> v(static_cast<std::size_t>(n), 0);
    v[x] += 1;
    v[base] -= 1;
    return v;
}

}  // namespace

TEST_CASE("permutation helpers") {
    const Perm g{1, 2, 0};
    const Perm h{1, 0, 2};
    CHECK(compose(g, h) == Perm{2, 1, 0});
    CHECK(compose(g, inverse(g)) == identity_perm(3));
    CHECK(perm_sign(g) == 1);
    CHECK(perm_sign(h) == -1);
}

TEST_CASE("chain space dimensions") {
    for (const auto& w : kShapes) {
        const ChainSpace space(w);
        CHECK(space.total_dim() == expected_total_dim(w));
        CHECK(space.top_degree() == space.num_points() - space.num_blocks());
        for (int j = 0; j <= space.top_degree(); ++j) {
            const auto& basis = space.basis(j);
            for (Index k = 0; k < basis.size(); ++k) CHECK(space.index_of(j, basis[k]) == k);
        }
    }
    CHECK(ChainSpace({2, 1}).dim(0) == 3);
    CHECK(ChainSpace({2, 1}).dim(1) == 3);
    CHECK(ChainSpace({2, 1}).dim(2) == 0);
    CHECK_THROWS_AS(chain_space({4, 4}), BoundError);
    CHECK_THROWS_AS(ChainSpace({}), BoundError);
}

TEST_CASE("the action is a left action") {
    std::mt19937 rng(7);
    for (const auto& w : kShapes) {
        const ChainSpace space(w);
        const int n = space.num_points();
        for (int trial = 0; trial < 4; ++trial) {
            Perm g = identity_perm(n);
            Perm h = identity_perm(n);
            std::shuffle(g.begin(), g.end(), rng);
            std::shuffle(h.begin(), h.end(), rng);
            for (int j = 0; j <= space.top_degree(); ++j) {
                const SparseVec v = random_vector(space.dim(j), rng);
                CHECK(act(space, j, g, act(space, j, h, v)) == act(space, j, compose(g, h), v));
                CHECK(act(space, j, identity_perm(n), v) == v);
            }
        }
    }
}

TEST_CASE("traces match the chain module character") {
    for (const auto& w : kShapes) {
        const ChainSpace space(w);
        const int n = space.num_points();
        const auto table = character_table(n);
        for (int j = 0; j <= space.top_degree(); ++j) {
            const SymFunc ch = chain_module_character(w, j);
            for (const Partition& mu : partitions_of(n)) {
                Rational expected = 0;
                for (const auto& [lambda, c] : ch.terms()) expected += c * table->value(lambda, mu);
                CHECK(trace_of(space, j, perm_of_type(mu)) == expected);
            }
        }
    }
}

TEST_CASE("adapted coordinates reconstruct the root vectors") {
    const int n = 5;
    const SplitDecomposition dec(0b11101, 0b01001, 0b10100);
    std::vector<std::vector<Rational>> basis;
    for (int y : {3}) basis.push_back(root(n, y, 0));
    for (int z : {4}) basis.push_back(root(n, z, 2));
    std::vector<Rational> u(n, 0);
    for (int y : {0, 3}) u[y] += Rational(1, 2);
    for (int z : {2, 4}) u[z] -= Rational(1, 2);
    basis.push_back(u);
    for (int x : {2, 3, 4}) {
        const auto c = dec.adapted_coordinates(x);
        REQUIRE(c.size() == basis.size());
        std::vector<Rational> sum(n, 0);
        for (std::size_t k = 0; k < c.size(); ++k)
            for (int p = 0; p < n; ++p) sum[p] += c[k] * basis[k][p];
        CHECK(sum == root(n, x, 0));
    }
    CHECK_THROWS_AS(SplitDecomposition(0b111, 0b011, 0b110), InputError);
    CHECK_THROWS_AS(SplitDecomposition(0b111, 0b111, 0), InputError);
}

TEST_CASE("split projection examples") {
    // D = {0,1,2}, D_A = {0}, D_B = {1,2}: e1 - e0 = -u - 1/2 (e2 - e1)
    const SplitDecomposition dec(0b111, 0b001, 0b110);
    const SplitWedge one = split_projection(dec, {{0b010, 1}});
    CHECK(one == SplitWedge{{{0, 0b100}, Rational(-1, 2)}});
    CHECK(split_projection(dec, {{0b110, 1}}).empty());
    CHECK(split_projection(dec, {{0, 3}}) == SplitWedge{{{0, 0}, 3}});

    const SplitDecomposition other(0b111, 0b011, 0b100);
    CHECK(split_projection(other, {{0b010, 1}}) == SplitWedge{{{0b010, 0}, 1}});
    CHECK(split_projection(other, {{0b100, 1}}) == SplitWedge{{{0b010, 0}, Rational(1, 2)}});
    CHECK_THROWS_AS(split_projection(other, {{0b001, 1}}), InputError);
}

TEST_CASE("split projection of a wedge of two factors") {
    // D = {0..3}, D_A = {0,1}, D_B = {2,3}. Coordinates without u:
    // x=1 -> (1, 0), x=3 -> (1/2, 1/2), so the only minor is 1/2.
    const SplitDecomposition dec(0b1111, 0b0011, 0b1100);
    const SplitWedge out = split_projection(dec, {{0b1010, 1}});
    CHECK(out == SplitWedge{{{0b0010, 0b1000}, Rational(1, 2)}});
}

TEST_CASE("isotypic projectors") {
    std::mt19937 rng(11);
    for (const auto& w : std::vector<std::vector<int>>{{2, 1}, {3}, {2, 2}, {1, 1, 1}}) {
        const ChainSpace space(w);
        const int n = space.num_points();
        for (int j = 0; j <= space.top_degree(); ++j) {
            const SparseVec v = random_vector(space.dim(j), rng);
            VecBuilder total;
            for (const Partition& lambda : partitions_of(n)) {
                const IsotypicProjector pl(lambda);
                const SparseVec pv = pl.apply(space, j, v);
                CHECK(pl.apply(space, j, pv) == pv);
                for (const Partition& mu : partitions_of(n)) {
                    if (mu == lambda) continue;
                    CHECK(IsotypicProjector(mu).apply(space, j, pv).empty());
                }
                total.add(pv);

                const Rational mult = schur_multiplicity(chain_module_character(w, j), lambda);
                const auto f = static_cast<unsigned long>(num_standard_tableaux(lambda));
                CHECK(pl.trace(space, j) == mult * f);
                const YoungSymmetrizer e(lambda);
                CHECK(Rational(static_cast<unsigned long>(e.isotypic_basis(space, j).size())) == mult);
            }
            CHECK(total.build() == v);
        }
    }
}

TEST_CASE("young symmetrizer images are isotypic") {
    const ChainSpace space({2, 1, 1});
    for (int j = 0; j <= space.top_degree(); ++j) {
        for (const Partition& lambda : partitions_of(4)) {
            const auto basis = YoungSymmetrizer(lambda).isotypic_basis(space, j);
            CHECK(rank_of(basis) == basis.size());
            const IsotypicProjector pl(lambda);
            for (const SparseVec& v : basis) CHECK(pl.apply(space, j, v) == v);
        }
    }
}
