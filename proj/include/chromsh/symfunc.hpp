#pragma once

// Homogeneous symmetric functions with exact rational coefficients in the
// power-sum and Schur bases, and the weighted chromatic symmetric function.

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "chromsh/character_table.hpp"
#include "chromsh/graph.hpp"
#include "chromsh/partition.hpp"

namespace chromsh {

using Rational = mpq_class;

enum class Basis { PowerSum, Schur };

char basis_letter(Basis b);

/// A homogeneous symmetric function sum_lambda c_lambda b_lambda. Zero
/// coefficients are never stored; the zero function has no terms and no
/// degree.
class SymFunc {
public:
    using Terms = std::map<Partition, Rational, RevLex>;

    explicit SymFunc(Basis basis = Basis::PowerSum) : basis_(basis) {}
    SymFunc(Basis basis, const Partition& lambda, const Rational& coeff = 1);

    Basis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Degree of the index partitions; -1 for the zero function.
    int degree() const { return terms_.empty() ? -1 : terms_.begin()->first.size(); }
    Rational coefficient(const Partition& lambda) const;

    /// Adds c * b_lambda. Throws InputError on a degree mismatch.
    void add_term(const Partition& lambda, const Rational& coeff);

    SymFunc& operator+=(const SymFunc& other);
    SymFunc& operator-=(const SymFunc& other);
    SymFunc& operator*=(const Rational& c);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator*(SymFunc a, const Rational& c) { return a *= c; }
    SymFunc operator-() const { return *this * Rational(-1); }

    /// Same basis and identical coefficients; all zero functions are equal.
    friend bool operator==(const SymFunc& a, const SymFunc& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.basis_ == b.basis_ && a.terms_ == b.terms_;
    }

    /// "-p[3] + p[2,1]", "1/2*s[2] - s[1,1]", "0". Terms in reverse-lex order.
    std::string to_string() const;

private:
    void check_compatible(const SymFunc& other) const;

    Basis basis_;
    Terms terms_;
};

/// Re-expresses x in the target basis using p_mu = sum_lambda chi_lambda(mu) s_lambda
/// and s_lambda = sum_mu chi_lambda(mu) / z_mu p_mu.
SymFunc basis_convert(const SymFunc& x, Basis target, int max_degree = kDefaultMaxDegree);

/// Product of symmetric functions; the result is in a's basis.
SymFunc multiply(const SymFunc& a, const SymFunc& b, int max_degree = kDefaultMaxDegree);

/// Hall inner product <s_lambda, x>, i.e. the Schur coefficient of lambda.
Rational schur_multiplicity(const SymFunc& x, const Partition& lambda, int max_degree = kDefaultMaxDegree);

/// Frobenius characteristic of the degree-j piece of the induced module
/// Ind (L_{b_1} (x) ... (x) L_{b_r}), where L_a = sum_j S^{(a-j,1^j)}.
/// Schur basis.
SymFunc chain_module_character(const std::vector<int>& block_weights, int j, int max_degree = kDefaultMaxDegree);

/// A polynomial in x_1..x_k with rational coefficients.
class Polynomial {
public:
    using Exponents = std::vector<int>;

    explicit Polynomial(int num_vars = 0) : num_vars_(num_vars) {}

    int num_vars() const { return num_vars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& exponents, const Rational& coeff);
    Polynomial& operator+=(const Polynomial& other);
    Polynomial operator*(const Polynomial& other) const;
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// "x1*x2^2 + x1^2*x2" style text, terms in decreasing exponent order.
    std::string to_string() const;

private:
    int num_vars_;
    std::map<Exponents, Rational> terms_;
};

/// Evaluates x at (x_1, ..., x_k, 0, 0, ...).
Polynomial specialize(const SymFunc& x, int num_vars, int max_degree = kDefaultMaxDegree);

/// X_(G,w) = sum over F subset E(G) of (-1)^|F| p_lambda(G,w,F). Power-sum basis.
SymFunc csf_state_sum(const VertexWeightedGraph& g);

/// Brute force over proper colorings kappa: V -> {1..k} of prod_v x_kappa(v)^w(v).
Polynomial csf_colorings_oracle(const VertexWeightedGraph& g, int num_colors);

struct DeletionContractionCheck {
    bool holds = false;
    SymFunc whole;
    SymFunc deleted;
    SymFunc contracted;
};

/// Checks X_(G,w) = X_(G\e,w) - X_(G/e,w/e) exactly in the power-sum basis.
DeletionContractionCheck check_deletion_contraction_csf(const VertexWeightedGraph& g, EdgeIndex e);

}  // namespace chromsh
