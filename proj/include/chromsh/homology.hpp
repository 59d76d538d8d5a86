#pragma once

// Bigraded homology H_{i,j} as multiplicities of irreducible S_N-modules,
// the Frobenius series, span indices and the categorification identity.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chromsh/complex.hpp"
#include "chromsh/partition.hpp"
#include "chromsh/symfunc.hpp"

namespace chromsh {

using Bidegree = std::pair<int, int>;  // (i, j)
using Multiplicities = std::map<Partition, int, RevLex>;

struct HomologyOptions {
    ComplexOptions complex;
    /// Recompute every dim H_{i,j} by plain rank-nullity and compare.
    bool betti_check = true;
    /// Compare chain multiplicities with the characters from symfunc.
    bool character_check = true;
    int threads = 1;
};

struct HomologyTable {
    int num_points = 0;
    int max_index = 0;   // m
    int max_degree = 0;  // N - 1
    /// Nonzero entries only.
    std::map<Bidegree, Multiplicities> modules;
    std::map<Bidegree, std::size_t> betti;

    const Multiplicities& at(int i, int j) const;
    int multiplicity(int i, int j, const Partition& lambda) const;
    bool nonzero(int i, int j) const { return modules.count({i, j}) > 0; }
    /// ch(H_{i,j}) in the Schur basis.
    SymFunc character(int i, int j) const;

    friend bool operator==(const HomologyTable&, const HomologyTable&) = default;
};

/// e_lambda C_{i,j} for the Young symmetrizer of lambda, as independent
/// vectors in the basis of C_{i,j}. Its size is the multiplicity of S^lambda.
std::vector<SparseVec> isotypic_chain_basis(const ChainComplex& c, int i, int j, const Partition& lambda);

/// Throws InvariantViolation on a negative multiplicity or a failed
/// cross-check.
HomologyTable homology_table(const ChainComplex& c, const HomologyOptions& options = {});
HomologyTable homology_table(const VertexWeightedGraph& g, const HomologyOptions& options = {});

struct IsotypicRank {
    Rational dim;   // trace of P_lambda on the domain
    std::size_t rank = 0;  // rank of M P_lambda
};

/// Projector route, intended for checks at small N. Both values are
/// multiples of f^lambda.
IsotypicRank isotypic_rank(const IsotypicProjector& p, const ChainSpace& domain, int j, const SparseMatrix& m);

/// Bivariate polynomial in q, t; keys are (q-degree, t-degree).
using QTPolynomial = std::map<std::pair<int, int>, Rational>;

/// sum_{i,j} (-1)^{i+j} t^i q^j ch(H_{i,j}), grouped by Schur function.
class FrobeniusSeries {
public:
    FrobeniusSeries() = default;
    explicit FrobeniusSeries(const HomologyTable& t);

    const std::map<Partition, QTPolynomial, RevLex>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    void add(const Partition& lambda, int q_degree, int t_degree, const Rational& c);

    /// Schur expansion at rational (q, t).
    SymFunc evaluate(const Rational& q, const Rational& t) const;
    /// "s[2,1] - (q + q^2*t)*s[1,1,1]"
    std::string to_string() const;

    friend bool operator==(const FrobeniusSeries&, const FrobeniusSeries&) = default;

private:
    std::map<Partition, QTPolynomial, RevLex> coeffs_;
};

FrobeniusSeries frobenius_series(const HomologyTable& t);

/// sum_{i,j} (-1)^{i+j} ch(C_{i,j}) from the chain-module characters alone.
SymFunc chain_euler_characteristic(const VertexWeightedGraph& g);

struct CategorificationCheck {
    bool holds = false;         // Frob(1,1) = X_(G,w)
    bool euler_holds = false;   // homology and chain alternating sums agree
    SymFunc frobenius_at_one{Basis::Schur};
    SymFunc chromatic{Basis::Schur};
    SymFunc chain_euler{Basis::Schur};
};

CategorificationCheck categorification_check(const VertexWeightedGraph& g, const HomologyTable& t);

struct SpanIndices {
    int k_min = 0;
    int k_max = 0;
    /// k_max + 1, reported for j = 0.
    std::optional<int> span0;
};

/// nullopt when column j of the table is identically zero.
std::optional<SpanIndices> span_indices(const HomologyTable& t, int j);

}  // namespace chromsh
