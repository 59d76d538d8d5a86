#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "chromsh/character_table.hpp"
#include "chromsh/error.hpp"
#include "chromsh/symfunc.hpp"
#include "fixtures.hpp"

using namespace chromsh;

namespace {

// Standard tableaux counted by removing outer corners.
std::uint64_t count_tableaux(std::vector<int> shape) {
    while (!shape.empty() && shape.back() == 0) shape.pop_back();
    if (shape.empty()) return 1;
    std::uint64_t total = 0;
    for (std::size_t r = 0; r < shape.size(); ++r) {
        const bool corner = r + 1 == shape.size() || shape[r + 1] < shape[r];
        if (!corner) continue;
        auto smaller = shape;
        --smaller[r];
        total += count_tableaux(smaller);
    }
    return total;
}

using Monomials = std::map<std::vector<int>, long long>;

Monomials multiply(const Monomials& a, const Monomials& b) {
    Monomials out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            out[e] += ca * cb;
        }
    }
    return out;
}

// chi_lambda(mu) as the coefficient of x^(lambda + delta) in a_delta * p_mu.
long long frobenius_character(const Partition& lambda, const Partition& mu) {
    const int l = lambda.length();
    Monomials prod;
    std::vector<int> perm(static_cast<std::size_t>(l));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inversions = 0;
        for (int a = 0; a < l; ++a)
            for (int b = a + 1; b < l; ++b) inversions += perm[a] > perm[b];
        std::vector<int> e(static_cast<std::size_t>(l));
        for (int k = 0; k < l; ++k) e[k] = l - 1 - perm[k];
        prod[e] += inversions % 2 ? -1 : 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (int part : mu.parts()) {
        Monomials p;
        for (int k = 0; k < l; ++k) {
            std::vector<int> e(static_cast<std::size_t>(l), 0);
            e[k] = part;
            p[e] += 1;
        }
        prod = multiply(prod, p);
    }
    std::vector<int> target(static_cast<std::size_t>(l));
    for (int k = 0; k < l; ++k) target[k] = lambda[k] + l - 1 - k;
    auto it = prod.find(target);
    return it == prod.end() ? 0 : it->second;
}

// Sum over proper colorings with k colors of prod x_color^weight.
Polynomial coloring_sum(const VertexWeightedGraph& g, int k) {
    Polynomial out(k);
    const int n = g.num_vertices();
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    while (true) {
        bool proper = true;
        for (const Edge& e : g.edges()) proper = proper && color[e.u] != color[e.v];
        if (proper) {
            std::vector<int> exps(static_cast<std::size_t>(k), 0);
            for (int v = 0; v < n; ++v) exps[color[v]] += g.weight(v);
            out.add_term(exps, 1);
        }
        int pos = 0;
        while (pos < n && ++color[pos] == k) color[pos++] = 0;
        if (pos == n) break;
    }
    return out;
}

SymFunc p(const Partition& mu, const Rational& c = 1) { return SymFunc(Basis::PowerSum, mu, c); }
SymFunc s(const Partition& mu, const Rational& c = 1) { return SymFunc(Basis::Schur, mu, c); }

std::vector<VertexWeightedGraph> small_graphs() {
    return {fixtures::k2(1, 2),
            fixtures::p3(),
            fixtures::k3(),
            fixtures::graph({2, 1, 2}, {{0, 1}, {1, 2}}),
            fixtures::graph({1, 1, 1, 1}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}),
            fixtures::graph({1, 2, 1, 1}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}}),
            fixtures::graph({1, 1, 2}, {{0, 1}, {0, 1}, {1, 2}}),
            fixtures::graph({3, 2}, {{0, 1}}),
            fixtures::graph({1, 1, 1}, {{0, 1}})};
}

}  // namespace

TEST_CASE("partitions") {
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(4).front() == Partition{4});
    CHECK(partitions_of(4).back() == Partition{1, 1, 1, 1});
    CHECK(partitions_of(0).size() == 1);
    CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
    CHECK(Partition(std::vector<int>{1, 3, 2}) == Partition{3, 2, 1});
    CHECK(Partition::hook(4, 2) == Partition{2, 1, 1});
    CHECK(Partition{2, 1}.to_string() == "[2,1]");
    CHECK(Partition{}.to_string() == "[]");
    CHECK(centralizer_order(Partition{2, 1, 1}) == 4);
    CHECK(add_one_box(Partition{2, 1}).size() == 3);
    CHECK_THROWS_AS(Partition(std::vector<int>{2, 0}), InputError);
}

TEST_CASE("character table of S_3") {
    const auto t = character_table(3);
    // rows [3], [2,1], [1,1,1]; columns [3], [2,1], [1,1,1]
    const std::vector<std::vector<std::int64_t>> expected{{1, 1, 1}, {-1, 0, 2}, {1, -1, 1}};
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) CHECK(t->value(a, b) == expected[a][b]);
    CHECK(t->centralizer(0) == 3);
    CHECK(t->centralizer(1) == 2);
    CHECK(t->centralizer(2) == 6);
    CHECK(character_table(4)->dimension(Partition{2, 2}) == 2);
    CHECK_THROWS_AS(character_table(9), BoundError);
    CHECK_THROWS_AS(character_table(0), BoundError);
}

TEST_CASE("tableau counts agree with a recursive count") {
    for (int n = 1; n <= 8; ++n) {
        std::uint64_t squares = 0;
        for (const Partition& lambda : partitions_of(n)) {
            const auto f = num_standard_tableaux(lambda);
            CHECK(f == count_tableaux(lambda.parts()));
            CHECK(f == character_table(n)->dimension(lambda));
            squares += f * f;
        }
        CHECK(squares == factorial(n));
    }
}

TEST_CASE("characters agree with the Frobenius formula") {
    for (int n = 1; n <= 6; ++n) {
        const auto t = character_table(n);
        for (const Partition& lambda : partitions_of(n))
            for (const Partition& mu : partitions_of(n)) {
                CHECK(t->value(lambda, mu) == frobenius_character(lambda, mu));
                CHECK(murnaghan_nakayama(lambda, mu) == t->value(lambda, mu));
            }
    }
}

TEST_CASE("column and row orthogonality") {
    for (int n = 1; n <= 8; ++n) {
        const auto t = character_table(n);
        const std::size_t k = t->partitions().size();
        for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t b = 0; b < k; ++b) {
                Rational row = 0;
                std::int64_t col = 0;
                for (std::size_t m = 0; m < k; ++m) {
                    Rational term(t->value(a, m) * t->value(b, m), static_cast<long>(t->centralizer(m)));
                    term.canonicalize();
                    row += term;
                    col += t->value(m, a) * t->value(m, b);
                }
                CHECK(row == (a == b ? 1 : 0));
                CHECK(col == (a == b ? static_cast<std::int64_t>(t->centralizer(a)) : 0));
            }
        }
    }
}

TEST_CASE("cycle types") {
    CHECK(cycle_type({1, 2, 0, 3}) == Partition{3, 1});
    CHECK(cycle_type({0, 1}) == Partition{1, 1});
}

TEST_CASE("power sums in the Schur basis") {
    CHECK(basis_convert(p({3}), Basis::Schur) == s({3}) - s({2, 1}) + s({1, 1, 1}));
    CHECK(basis_convert(p({2, 1}), Basis::Schur) == s({3}) - s({1, 1, 1}));
    CHECK(basis_convert(p({1}), Basis::Schur) == s({1}));
    SymFunc p111 = basis_convert(p({1, 1, 1}), Basis::Schur);
    CHECK(p111 == s({3}) + s({2, 1}, 2) + s({1, 1, 1}));
    CHECK(basis_convert(s({2, 1}), Basis::PowerSum) == p({1, 1, 1}, Rational(1, 3)) - p({3}, Rational(1, 3)));
}

TEST_CASE("basis conversion round trips") {
    for (int n = 1; n <= 6; ++n) {
        for (const Partition& mu : partitions_of(n)) {
            const SymFunc x = p(mu, 3) + p(partitions_of(n).back(), Rational(-1, 2));
            CHECK(basis_convert(basis_convert(x, Basis::Schur), Basis::PowerSum) == x);
            const SymFunc y = s(mu, 2);
            CHECK(basis_convert(basis_convert(y, Basis::PowerSum), Basis::Schur) == y);
        }
        // p_1^n = sum f^lambda s_lambda
        SymFunc expected(Basis::Schur);
        for (const Partition& lambda : partitions_of(n))
            expected.add_term(lambda, static_cast<long>(num_standard_tableaux(lambda)));
        CHECK(basis_convert(p(Partition(std::vector<int>(static_cast<std::size_t>(n), 1))), Basis::Schur) == expected);
    }
}

TEST_CASE("products and multiplicities") {
    CHECK(multiply(p({2}), p({1})) == p({2, 1}));
    CHECK(multiply(s({1}), s({1})) == s({2}) + s({1, 1}));
    CHECK(multiply(s({2}), s({1})) == s({3}) + s({2, 1}));
    CHECK(schur_multiplicity(p({2, 1}), Partition{1, 1, 1}) == -1);
    CHECK(schur_multiplicity(p({2, 1}), Partition{2, 1}) == 0);
}

TEST_CASE("symmetric function text") {
    CHECK((p({2, 1}) - p({3})).to_string() == "-p[3] + p[2,1]");
    CHECK((s({2}, Rational(1, 2)) - s({1, 1})).to_string() == "1/2*s[2] - s[1,1]");
    CHECK(SymFunc().to_string() == "0");
    CHECK_THROWS_AS(p({2}) + p({1}), InputError);
}

TEST_CASE("chain module characters") {
    // Single block of weight a: L_a in degree j is the hook (a-j, 1^j).
    CHECK(chain_module_character({3}, 1) == s({2, 1}));
    CHECK(chain_module_character({3}, 3).is_zero());
    // Two unit blocks: Ind of the trivial rep of S_1 x S_1.
    CHECK(chain_module_character({1, 1}, 0) == s({2}) + s({1, 1}));
    // Alternating sum over degrees gives p_lambda.
    for (const auto& weights : std::vector<std::vector<int>>{{3}, {2, 1}, {2, 2}, {1, 1, 1}, {3, 1, 1}}) {
        SymFunc alt(Basis::Schur);
        for (int j = 0; j < 6; ++j) {
            SymFunc ch = chain_module_character(weights, j);
            alt += j % 2 ? -ch : ch;
        }
        CHECK(alt == basis_convert(p(Partition(weights)), Basis::Schur));
    }
}

TEST_CASE("chromatic symmetric function examples") {
    CHECK(csf_state_sum(fixtures::k2(1, 2)) == p({2, 1}) - p({3}));
    CHECK(csf_state_sum(fixtures::graph({1, 1}, {{0, 1}, {1, 1}})).is_zero());
    CHECK(csf_state_sum(fixtures::graph({5}, {})) == p({5}));
    CHECK(basis_convert(csf_state_sum(fixtures::p3()), Basis::Schur).to_string() == "s[2,1] + 4*s[1,1,1]");
    CHECK(basis_convert(p({3}), Basis::Schur).to_string() == "s[3] - s[2,1] + s[1,1,1]");
}

TEST_CASE("chromatic symmetric function specializes to colorings") {
    for (const auto& g : small_graphs()) {
        const SymFunc x = csf_state_sum(g);
        for (int k = 1; k <= 3; ++k) {
            const Polynomial expected = coloring_sum(g, k);
            CHECK(specialize(x, k) == expected);
            CHECK(csf_colorings_oracle(g, k) == expected);
        }
    }
}

TEST_CASE("deletion-contraction") {
    for (const auto& g : small_graphs()) {
        for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
            const auto check = check_deletion_contraction_csf(g, e);
            CHECK(check.holds);
            CHECK(check.whole == check.deleted - check.contracted);
        }
    }
    CHECK_THROWS_AS(check_deletion_contraction_csf(fixtures::graph({1, 1}, {}), 0), InputError);
}

TEST_CASE("disjoint unions multiply") {
    const auto a = fixtures::k2(1, 2);
    const auto b = fixtures::p3();
    CHECK(csf_state_sum(disjoint_union(a, b)) == multiply(csf_state_sum(a), csf_state_sum(b)));
}

TEST_CASE("polynomial text") {
    Polynomial x(2);
    x.add_term({1, 2}, 1);
    x.add_term({2, 1}, 1);
    CHECK(x.to_string() == "x1^2*x2 + x1*x2^2");
}
