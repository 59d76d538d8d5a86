#include <doctest.h>

#include "chromsh/error.hpp"
#include "chromsh/linalg.hpp"

using namespace chromsh;

namespace {

SparseVec vec(std::vector<long> dense) {
    SparseVec v;
    for (std::size_t k = 0; k < dense.size(); ++k) v.push_back(static_cast<Index>(k), dense[k]);
    return v;
}

}  // namespace

TEST_CASE("sparse vector arithmetic") {
    SparseVec a = vec({1, 0, 2});
    a.axpy(-2, vec({0, 1, 1}));
    CHECK(a == vec({1, -2, 0}));
    CHECK(a.size() == 2);
    CHECK(a.at(1) == -2);
    CHECK(a.at(7) == 0);
    a.scale(0);
    CHECK(a.empty());
    SparseVec b;
    b.push_back(3, 1);
    CHECK_THROWS_AS(b.push_back(2, 1), InvariantViolation);
}

TEST_CASE("builder merges and drops zeros") {
    VecBuilder acc;
    acc.add(4, 1);
    acc.add(1, 2);
    acc.add(4, -1);
    CHECK(acc.build() == SparseVec::unit(1, 2));
}

TEST_CASE("ranks") {
    const std::vector<SparseVec> vs{vec({1, 2, 3}), vec({2, 4, 6}), vec({0, 1, 1}), vec({1, 3, 4})};
    CHECK(rank_of(vs) == 2);
    CHECK(basis_of(vs).size() == 2);
    CHECK(rank_of(std::vector<SparseVec>{}) == 0);
    CHECK(rank_of(std::vector<SparseVec>{SparseVec{}}) == 0);
}

TEST_CASE("kernels") {
    const std::vector<SparseVec> vs{vec({1, 2, 3}), vec({2, 4, 6}), vec({0, 1, 1}), vec({1, 3, 4})};
    const auto ker = kernel_of(vs);
    CHECK(ker.size() == 2);
    for (const SparseVec& r : ker) CHECK(combine(vs, r).empty());
}

TEST_CASE("solving") {
    Echelon ech(true);
    ech.insert(vec({1, 1, 0}));
    ech.insert(vec({0, 1, 1}));
    const auto x = ech.solve(vec({1, 3, 2}));
    REQUIRE(x);
    CHECK(*x == vec({1, 2}));
    CHECK_FALSE(ech.solve(vec({0, 0, 1})));
    CHECK(ech.in_span(vec({2, 1, -1})));
    CHECK_THROWS_AS(Echelon().solve(vec({1})), InvariantViolation);
}

TEST_CASE("rational entries") {
    const std::vector<SparseVec> vs{vec({1, 3}), [] {
                                        SparseVec v;
                                        v.push_back(0, Rational(1, 3));
                                        v.push_back(1, 1);
                                        return v;
                                    }()};
    CHECK(rank_of(vs) == 1);
}

TEST_CASE("matrix application") {
    SparseMatrix m{2, {vec({1, 0}), vec({1, 1}), vec({0, 2})}};
    CHECK(m.apply(vec({1, 1, 1})) == vec({2, 3}));
    CHECK_FALSE(m.is_zero());
    CHECK(SparseMatrix{2, {SparseVec{}}}.is_zero());
}
