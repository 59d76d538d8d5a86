#include <doctest.h>

#include <algorithm>
#include <random>

#include "chromsh/character_table.hpp"
#include "chromsh/homology.hpp"
#include "fixtures.hpp"

using namespace chromsh;

TEST_CASE("weighted segment K2 with weights 1 and 2") {
    const auto t = homology_table(fixtures::k2(1, 2));
    Multiplicities h00{{Partition{2, 1}, 1}};
    Multiplicities top{{Partition{1, 1, 1}, 1}};
    CHECK(t.at(0, 0) == h00);
    CHECK(t.at(0, 1) == top);
    CHECK(t.at(1, 2) == top);
    CHECK(t.modules.size() == 3);
    CHECK(frobenius_series(t).to_string() == "s[2,1] - (q + q^2*t)*s[1,1,1]");
}

TEST_CASE("path on three vertices") {
    const auto t = homology_table(fixtures::p3());
    Multiplicities sign{{Partition{1, 1, 1}, 1}};
    Multiplicities h11{{Partition{2, 1}, 1}, {Partition{1, 1, 1}, 2}};
    CHECK(t.at(0, 0) == sign);
    CHECK(t.at(2, 2) == sign);
    CHECK(t.at(1, 1) == h11);
    CHECK_FALSE(t.nonzero(0, 1));
    CHECK_FALSE(t.nonzero(2, 0));
    CHECK_FALSE(t.nonzero(2, 1));
}

namespace {

std::vector<VertexWeightedGraph> small_corpus() {
    return {fixtures::k2(),
            fixtures::k2(2, 1),
            fixtures::p3(),
            fixtures::k3(),
            fixtures::graph({2, 1, 1}, {{0, 1}, {1, 2}}),
            fixtures::graph({1, 2, 1}, {{0, 1}, {1, 2}, {2, 0}}),
            fixtures::graph({1, 1, 1}, {{0, 1}, {0, 1}, {1, 2}}),
            fixtures::graph({1, 1, 1, 1}, {{0, 1}, {1, 2}, {2, 3}}),
            fixtures::graph({1, 1, 1, 1}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})};
}

std::vector<Perm> all_perms(int n) {
    std::vector<Perm> out;
    Perm g = identity_perm(n);
    do out.push_back(g);
    while (std::next_permutation(g.begin(), g.end()));
    return out;
}

// P_lambda applied to every basis vector of C_{i,j} through the complex's own action.
std::vector<SparseVec> projected_basis(const ChainComplex& c, int i, int j, const Partition& lambda) {
    const int n = c.num_points();
    const auto table = character_table(n);
    std::vector<SparseVec> out;
    for (Index k = 0; k < c.dim(i, j); ++k) {
        VecBuilder acc;
        for (const Perm& g : all_perms(n)) {
            const auto chi = table->value(lambda, cycle_type(g));
            if (chi != 0) acc.add(c.act(i, j, g, SparseVec::unit(k)), chi);
        }
        out.push_back(acc.build());
    }
    return out;
}

std::size_t image_rank(const SparseMatrix& d, const std::vector<SparseVec>& vs) {
    std::vector<SparseVec> images;
    for (const SparseVec& v : vs) images.push_back(d.apply(v));
    return rank_of(images);
}

// Multiplicities from projector ranks: (dim P C - rank d P C - rank d' P C') / f.
HomologyTable projector_table(const ChainComplex& c) {
    HomologyTable t;
    t.num_points = c.num_points();
    t.max_index = c.max_index();
    t.max_degree = c.max_degree();
    for (int i = 0; i <= c.max_index(); ++i) {
        for (int j = 0; j <= c.max_degree(); ++j) {
            for (const Partition& lambda : partitions_of(c.num_points())) {
                const auto here = projected_basis(c, i, j, lambda);
                std::size_t total = rank_of(here);
                if (i > 0) total -= image_rank(c.differential(i, j), here);
                if (i < c.max_index()) total -= image_rank(c.differential(i + 1, j), projected_basis(c, i + 1, j, lambda));
                const auto f = num_standard_tableaux(lambda);
                REQUIRE(total % f == 0);
                if (total > 0) t.modules[{i, j}][lambda] = static_cast<int>(total / f);
            }
        }
    }
    return t;
}

}  // namespace

TEST_CASE("unit segment") {
    const auto t = homology_table(fixtures::k2());
    Multiplicities sign{{Partition{1, 1}, 1}};
    CHECK(t.at(0, 0) == sign);
    CHECK(t.at(1, 1) == sign);
    CHECK(t.modules.size() == 2);
    CHECK(t.betti.at({0, 0}) == 1);
    CHECK(frobenius_series(t).to_string() == "(1 + q*t)*s[1,1]");
}

TEST_CASE("a single vertex of weight n gives hooks") {
    for (int n = 1; n <= 5; ++n) {
        const auto t = homology_table(fixtures::graph({n}, {}));
        FrobeniusSeries expected;
        for (int j = 0; j < n; ++j) {
            CHECK(t.multiplicity(0, j, Partition::hook(n, j)) == 1);
            expected.add(Partition::hook(n, j), j, 0, j % 2 ? -1 : 1);
        }
        CHECK(frobenius_series(t) == expected);
    }
    CHECK(frobenius_series(homology_table(fixtures::graph({2}, {}))).to_string() == "s[2] - q*s[1,1]");
}

TEST_CASE("a loop kills everything") {
    const auto t = homology_table(fixtures::graph({1, 2}, {{0, 1}, {0, 0}}));
    CHECK(t.modules.empty());
    CHECK(frobenius_series(t).to_string() == "0");
    CHECK_FALSE(span_indices(t, 0));
}

TEST_CASE("multiplicities agree with projector ranks") {
    for (const auto& g : small_corpus()) {
        const auto c = build_complex(g);
        CHECK(homology_table(*c).modules == projector_table(*c).modules);
    }
}

TEST_CASE("isotypic chain bases have the character multiplicity") {
    const auto c = build_complex(fixtures::graph({2, 1, 1}, {{0, 1}, {1, 2}}));
    for (int i = 0; i <= c->max_index(); ++i) {
        for (int j = 0; j <= c->max_degree(); ++j) {
            SymFunc ch(Basis::Schur);
            for (const ChainSummand& s : c->summands(i)) ch += chain_module_character(s.state.block_weights, j);
            for (const Partition& lambda : partitions_of(4)) {
                const auto basis = isotypic_chain_basis(*c, i, j, lambda);
                CHECK(Rational(static_cast<unsigned long>(basis.size())) == ch.coefficient(lambda));
            }
        }
    }
}

TEST_CASE("isotypic rank through the projector") {
    const auto c = build_complex(fixtures::k2(1, 2));
    const ChainSummand& top = c->summands(1).front();
    const IsotypicProjector trivial(Partition{3});
    const auto r = isotypic_rank(trivial, *top.space, 0, c->differential(1, 0));
    CHECK(r.dim == 1);
    CHECK(r.rank == 1);
    const IsotypicProjector standard(Partition{2, 1});
    const auto s = isotypic_rank(standard, *top.space, 1, c->differential(1, 1));
    CHECK(s.dim == 2);
    CHECK(s.rank == 2);
}

TEST_CASE("homology categorifies the chromatic symmetric function") {
    for (const auto& g : small_corpus()) {
        const auto t = homology_table(g);
        const auto check = categorification_check(g, t);
        CHECK(check.holds);
        CHECK(check.euler_holds);
        CHECK(check.frobenius_at_one == basis_convert(csf_state_sum(g), Basis::Schur));
        CHECK(frobenius_series(t).evaluate(1, 1) == check.chromatic);
    }
}

TEST_CASE("the table does not depend on the edge order") {
    std::mt19937 rng(5);
    for (const auto& g : small_corpus()) {
        const auto base = homology_table(g);
        for (int trial = 0; trial < 3; ++trial) {
            auto edges = g.edges();
            std::shuffle(edges.begin(), edges.end(), rng);
            CHECK(homology_table(VertexWeightedGraph(g.ids(), g.weights(), edges)) == base);
        }
    }
}

TEST_CASE("parallel computation matches") {
    HomologyOptions options;
    options.threads = 4;
    const auto g = fixtures::graph({1, 1, 1, 1}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(homology_table(g, options) == homology_table(g));
}

TEST_CASE("span indices") {
    const auto t = homology_table(fixtures::p3());
    const auto s0 = span_indices(t, 0);
    REQUIRE(s0);
    CHECK(s0->k_min == 0);
    CHECK(s0->k_max == 0);
    CHECK(s0->span0 == 1);
    const auto s2 = span_indices(t, 2);
    REQUIRE(s2);
    CHECK(s2->k_min == 2);
    CHECK(s2->k_max == 2);
    CHECK_FALSE(s2->span0);
}

TEST_CASE("frobenius series evaluation") {
    const auto f = frobenius_series(homology_table(fixtures::k2(1, 2)));
    // s[2,1] - (q + q^2 t) s[1,1,1] at q = 2, t = -1
    CHECK(f.evaluate(2, -1) == SymFunc(Basis::Schur, {2, 1}) + SymFunc(Basis::Schur, {1, 1, 1}, 2));
}
