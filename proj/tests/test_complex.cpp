#include <doctest.h>

#include <algorithm>
#include <random>

#include "chromsh/complex.hpp"
#include "chromsh/error.hpp"
#include "chromsh/symfunc.hpp"
#include "fixtures.hpp"

using namespace chromsh;

namespace {

std::vector<VertexWeightedGraph> corpus() {
    return {fixtures::k2(),
            fixtures::k2(1, 2),
            fixtures::k2(2, 2),
            fixtures::p3(),
            fixtures::k3(),
            fixtures::graph({2, 1, 1}, {{0, 1}, {1, 2}, {2, 0}}),
            fixtures::graph({1, 2, 1}, {{0, 1}, {1, 2}, {1, 2}}),
            fixtures::graph({1, 1, 1}, {{0, 1}, {1, 1}, {1, 2}}),
            fixtures::graph({1, 1, 1, 1}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}),
            fixtures::graph({1, 1, 1, 1}, {{0, 1}, {0, 2}, {0, 3}}),
            fixtures::graph({2, 1, 1}, {{0, 1}})};
}

// Composition of two column-stored matrices.
bool composes_to_zero(const SparseMatrix& outer, const SparseMatrix& inner) {
    return std::all_of(inner.cols.begin(), inner.cols.end(),
                       [&](const SparseVec& c) { return outer.apply(c).empty(); });
}

SymFunc layer_character(const ChainComplex& c, int i, int j) {
    SymFunc total(Basis::Schur);
    for (const ChainSummand& s : c.summands(i)) total += chain_module_character(s.state.block_weights, j);
    return total;
}

}  // namespace

TEST_CASE("per-edge map of a unit segment") {
    const auto g = fixtures::k2();
    const State full = state_profile(g, 1);
    const PerEdgeMap m = per_edge_map(g, full, 0);
    CHECK(m.kind == EdgeCase::SplitsComponent);
    // degree 0: the trivial line of S_2 maps injectively into C[S_2]
    const SparseMatrix& d0 = m.matrix.degree(0);
    CHECK(d0.num_cols() == 1);
    CHECK(d0.rows == 2);
    CHECK(rank_of(d0.cols) == 1);
    // degree 1 has no target
    CHECK(m.matrix.degree(1).rows == 0);
    CHECK(m.matrix.degree(1).is_zero());
    CHECK_THROWS_AS(per_edge_map(g, state_profile(g, 0), 0), InputError);
}

TEST_CASE("an edge inside a cycle gives the identity") {
    const auto g = fixtures::k3();
    const State full = state_profile(g, 0b111);
    for (EdgeIndex e = 0; e < 3; ++e) {
        const PerEdgeMap m = per_edge_map(g, full, e);
        CHECK(m.kind == EdgeCase::SameComponents);
        for (const SparseMatrix& mat : m.matrix.by_degree)
            for (Index k = 0; k < mat.num_cols(); ++k) CHECK(mat.cols[k] == SparseVec::unit(k));
    }
}

TEST_CASE("split maps are equivariant") {
    const auto g = fixtures::graph({2, 1, 1}, {{0, 1}, {1, 2}});
    const State full = state_profile(g, 0b11);
    for (EdgeIndex e = 0; e < 2; ++e) {
        const PerEdgeMap m = per_edge_map(g, full, e);
        const auto& src = *m.matrix.domain;
        const auto& dst = *m.matrix.codomain;
        for (int j = 0; j <= src.top_degree(); ++j) {
            const SparseMatrix& mat = m.matrix.degree(j);
            for (int a = 0; a + 1 < src.num_points(); ++a) {
                Perm swap = identity_perm(src.num_points());
                std::swap(swap[a], swap[a + 1]);
                for (Index k = 0; k < mat.num_cols(); ++k) {
                    const SparseVec unit = SparseVec::unit(k);
                    CHECK(mat.apply(act(src, j, swap, unit)) == act(dst, j, swap, mat.apply(unit)));
                }
            }
        }
    }
}

TEST_CASE("chain group dimensions of the path on three vertices") {
    const auto c = build_complex(fixtures::p3());
    CHECK(c->max_index() == 2);
    CHECK(c->max_degree() == 2);
    CHECK(c->dim(0, 0) == 6);
    CHECK(c->dim(0, 1) == 0);
    CHECK(c->dim(1, 0) == 6);
    CHECK(c->dim(1, 1) == 6);
    CHECK(c->dim(2, 0) == 1);
    CHECK(c->dim(2, 1) == 2);
    CHECK(c->dim(2, 2) == 1);
    CHECK(c->summands(1).size() == 2);
    CHECK(c->differential(0, 0).num_cols() == 6);
    CHECK(c->differential(0, 0).is_zero());
}

TEST_CASE("edgeless graphs have a single column") {
    const auto c = build_complex(fixtures::graph({3}, {}));
    CHECK(c->max_index() == 0);
    CHECK(c->dim(0, 0) == 1);
    CHECK(c->dim(0, 1) == 2);
    CHECK(c->dim(0, 2) == 1);
}

TEST_CASE("weighted segment top differential") {
    const auto c = build_complex(fixtures::k2(1, 2));
    CHECK(c->dim(1, 2) == 1);
    CHECK(c->dim(0, 2) == 0);
    CHECK(c->differential(1, 2).is_zero());
    CHECK(rank_of(c->differential(1, 0).cols) == 1);
    CHECK(rank_of(c->differential(1, 1).cols) == 2);
}

TEST_CASE("square zero and equivariance across the corpus") {
    for (const auto& g : corpus()) {
        const auto c = build_complex(g);
        CHECK_NOTHROW(c->verify_square_zero());
        CHECK_NOTHROW(c->verify_equivariance());
        for (int i = 2; i <= c->max_index(); ++i)
            for (int j = 0; j <= c->max_degree(); ++j)
                CHECK(composes_to_zero(c->differential(i - 1, j), c->differential(i, j)));
    }
}

TEST_CASE("each chain layer has the character of its states") {
    for (const auto& g : corpus()) {
        const auto c = build_complex(g);
        for (int i = 0; i <= c->max_index(); ++i) {
            SymFunc states(Basis::PowerSum);
            for (const LayerEntry& entry : lattice_layer(g, i)) states += SymFunc(Basis::PowerSum, entry.state.lambda);
            SymFunc alt(Basis::Schur);
            for (int j = 0; j <= c->max_degree(); ++j) {
                const SymFunc ch = layer_character(*c, i, j);
                Rational dim = 0;
                for (const auto& [lambda, mult] : ch.terms())
                    dim += mult * static_cast<unsigned long>(num_standard_tableaux(lambda));
                CHECK(dim == static_cast<unsigned long>(c->dim(i, j)));
                alt += j % 2 ? -ch : ch;
            }
            CHECK(alt == basis_convert(states, Basis::Schur));
        }
    }
}

TEST_CASE("dimensions do not depend on the edge order") {
    std::mt19937 rng(3);
    for (const auto& g : corpus()) {
        const auto base = build_complex(g);
        for (int trial = 0; trial < 3; ++trial) {
            auto edges = g.edges();
            std::shuffle(edges.begin(), edges.end(), rng);
            const auto c = build_complex(VertexWeightedGraph(g.ids(), g.weights(), edges));
            for (int i = 0; i <= c->max_index(); ++i)
                for (int j = 0; j <= c->max_degree(); ++j) CHECK(c->dim(i, j) == base->dim(i, j));
        }
    }
}

TEST_CASE("locate and act") {
    const auto c = build_complex(fixtures::p3());
    const auto [summand, local] = c->locate(1, 0, 4);
    CHECK(summand == &c->summands(1)[1]);
    CHECK(local == 1);
    const Perm swap{1, 0, 2};
    for (Index k = 0; k < c->dim(1, 1); ++k) {
        const SparseVec v = SparseVec::unit(k);
        CHECK(c->act(1, 1, swap, c->act(1, 1, swap, v)) == v);
    }
    CHECK_THROWS_AS(c->act(1, 1, Perm{0, 1}, SparseVec::unit(0)), InputError);
}

TEST_CASE("bounds") {
    const auto heavy = fixtures::k2(4, 4);
    CHECK_THROWS_AS(build_complex(heavy), BoundError);
    ComplexOptions wide;
    wide.max_points = 8;
    CHECK_NOTHROW(build_complex(fixtures::graph({4, 4}, {}), wide));
    ComplexOptions few;
    few.max_edges = 2;
    CHECK_THROWS_AS(build_complex(fixtures::k3(), few), BoundError);
}
