#include <doctest.h>

#include "chromsh/error.hpp"
#include "chromsh/les.hpp"
#include "fixtures.hpp"

using namespace chromsh;

namespace {

const LESNode* find_node(const LESRow& row, char complex, int i) {
    for (const LESNode& n : row.nodes)
        if (n.complex == complex && n.i == i) return &n;
    return nullptr;
}

Multiplicities mods(std::initializer_list<std::pair<const Partition, int>> entries) { return Multiplicities(entries); }

}  // namespace

TEST_CASE("path on three vertices, contracting the first edge") {
    const auto report = verify_les(fixtures::p3(), 0);
    CHECK(report.ok());
    REQUIRE(report.rows.size() == 3);

    const Multiplicities both = mods({{Partition{2, 1}, 1}, {Partition{1, 1, 1}, 1}});
    const Multiplicities sign = mods({{Partition{1, 1, 1}, 1}});
    CHECK(report.deleted.at(0, 0) == both);
    CHECK(report.deleted.at(1, 1) == both);
    CHECK_FALSE(report.deleted.nonzero(1, 0));

    // j = 0: 0 -> H_{1,0}(C) -> 0 -> 0 -> H_{0,0}(C) -> S21 + S111 -> S111 -> 0
    const LESRow& r0 = report.rows[0];
    CHECK(r0.exact());
    CHECK(find_node(r0, 'C', 1)->module.empty());
    CHECK(find_node(r0, 'C', 0)->module == mods({{Partition{2, 1}, 1}}));
    CHECK(find_node(r0, 'A', 0)->module == both);
    CHECK(find_node(r0, 'B', 0)->module == sign);

    // j = 1: H_{1,1}(C) = 0 and H_{0,1}(C) = S111
    const LESRow& r1 = report.rows[1];
    CHECK(find_node(r1, 'C', 1)->module.empty());
    CHECK(find_node(r1, 'C', 0)->module == sign);
    CHECK(find_node(r1, 'B', 1)->module == mods({{Partition{2, 1}, 1}, {Partition{1, 1, 1}, 2}}));

    // j = 2: S111 = H_{2,2}(B) maps onto H_{1,2}(C)
    const LESRow& r2 = report.rows[2];
    CHECK(find_node(r2, 'B', 2)->module == sign);
    CHECK(find_node(r2, 'C', 1)->module == sign);
    CHECK(find_node(r2, 'C', 0)->module.empty());

    CHECK(report.derived_matches);
    CHECK(report.derived_contracted == report.contracted);
    CHECK(report.contracted == homology_table(fixtures::k2(2, 1)));
}

TEST_CASE("node dimensions and exactness flags") {
    const auto report = verify_les(fixtures::p3(), 1);
    for (const LESRow& row : report.rows) {
        CHECK(row.alternating_sum_ok);
        for (const LESNode& n : row.nodes) {
            CHECK(n.exact);
            std::size_t dim = 0;
            for (const auto& [lambda, m] : n.module) dim += m * num_standard_tableaux(lambda);
            CHECK(n.dim == dim);
        }
    }
}

TEST_CASE("short exact sequence maps") {
    const auto g = fixtures::k3();
    const SesMaps ses = build_ses_maps(g, 0);
    CHECK(ses.iota.shift == 0);
    CHECK(ses.pi.shift == -1);
    // pi vanishes on C_0, which has no state containing e
    for (int j = 0; j <= ses.whole->max_degree(); ++j) CHECK(ses.pi.at(0, j).is_zero());
    // iota is injective and pi surjective in every bidegree
    for (int i = 0; i <= ses.whole->max_index(); ++i) {
        for (int j = 0; j <= ses.whole->max_degree(); ++j) {
            CHECK(rank_of(ses.iota.at(i, j).cols) == ses.deleted->dim(i, j));
            if (i > 0) CHECK(rank_of(ses.pi.at(i, j).cols) == ses.contracted->dim(i - 1, j));
        }
    }
}

TEST_CASE("the last edge needs no twist") {
    const auto g = fixtures::k3();
    const SesMaps ses = build_ses_maps(g, 2);
    for (int i = 1; i <= ses.whole->max_index(); ++i) {
        for (int j = 0; j <= ses.whole->max_degree(); ++j) {
            for (const SparseVec& col : ses.pi.at(i, j).cols)
                for (const auto& [k, c] : col.entries()) CHECK(c == 1);
        }
    }
}

TEST_CASE("moving the edge last gives the same sequence") {
    const auto g = fixtures::graph({1, 2, 1}, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(move_edge_last(g, 0).edges() == std::vector<Edge>{{1, 2}, {2, 0}, {0, 1}});
    LESOptions options;
    options.ses.signs = EdgeSigns::MoveLast;
    for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
        const auto twisted = verify_les(g, e);
        const auto moved = verify_les(g, e, options);
        CHECK(twisted.ok());
        CHECK(moved.ok());
        CHECK(moved.edge == g.num_edges() - 1);
        CHECK(moved.contracted == twisted.contracted);
        CHECK(moved.deleted == twisted.deleted);
    }
}

TEST_CASE("a loop gives a vanishing sequence") {
    const auto g = fixtures::graph({1, 1}, {{0, 1}, {1, 1}});
    const auto report = verify_les(g, 1);
    CHECK(report.ok());
    CHECK(report.whole.modules.empty());
    // deleting the loop and contracting it give the same graph
    CHECK(report.deleted == report.contracted);
}

TEST_CASE("every edge of small graphs") {
    const std::vector<VertexWeightedGraph> graphs{
        fixtures::k3(), fixtures::graph({2, 1, 1}, {{0, 1}, {1, 2}, {0, 1}}),
        fixtures::graph({1, 1, 1, 1}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})};
    for (const auto& g : graphs) {
        for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
            const auto report = verify_les(g, e);
            CHECK(report.exact());
            CHECK(report.derived_matches);
            CHECK(report.connecting_support_ok);
            CHECK(report.tables_agree);
        }
    }
}

TEST_CASE("bad edges are rejected") {
    CHECK_THROWS_AS(verify_les(fixtures::p3(), 2), InputError);
    CHECK_THROWS_AS(build_ses_maps(fixtures::p3(), -1), InputError);
}
