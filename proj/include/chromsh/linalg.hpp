#pragma once

// Exact sparse linear algebra over the rationals.

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace chromsh {

using Rational = mpq_class;
using Index = std::uint32_t;

/// Sparse vector: entries sorted by index, no explicit zeros.
class SparseVec {
public:
    using Entry = std::pair<Index, Rational>;

    SparseVec() = default;
    static SparseVec unit(Index k, const Rational& c = 1);

    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    Rational at(Index k) const;

    /// Appends an entry; indices must be pushed in strictly increasing order.
    void push_back(Index k, Rational c);

    /// this += c * other
    void axpy(const Rational& c, const SparseVec& other);
    void scale(const Rational& c);

    friend bool operator==(const SparseVec&, const SparseVec&) = default;

private:
    std::vector<Entry> entries_;
};

/// Unordered accumulator that can be flushed into a SparseVec.
class VecBuilder {
public:
    void add(Index k, const Rational& c);
    void add(const SparseVec& v, const Rational& c = 1);
    SparseVec build() const;
    bool empty() const { return acc_.empty(); }

private:
    std::unordered_map<Index, Rational> acc_;
};

/// A sparse matrix stored by columns: column k is the image of basis vector k.
struct SparseMatrix {
    std::size_t rows = 0;
    std::vector<SparseVec> cols;

    std::size_t num_cols() const { return cols.size(); }
    SparseVec apply(const SparseVec& v) const;
    bool is_zero() const;
};

/// Incremental row-echelon form. Each stored row has leading coefficient 1.
/// Optionally records, for every stored row, the combination of inserted
/// vectors that produced it, which yields kernels and solutions.
class Echelon {
public:
    explicit Echelon(bool track_combinations = false) : track_(track_combinations) {}

    /// Inserts v with the next insertion id. Returns true if v was not in the
    /// span of previously inserted vectors. With tracking on and v dependent,
    /// *relation receives coefficients c with sum_k c_k input_k = 0 and
    /// c_{id(v)} = 1.
    bool insert(const SparseVec& v, SparseVec* relation = nullptr);

    SparseVec reduce(const SparseVec& v) const;
    bool in_span(const SparseVec& v) const { return reduce(v).empty(); }

    /// Coefficients over insertion ids expressing v, or nullopt when v is not
    /// in the span. Requires tracking.
    std::optional<SparseVec> solve(const SparseVec& v) const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t inserted() const { return inserted_; }

private:
    struct Row {
        SparseVec vec;
        SparseVec combo;
    };
    void reduce_in_place(SparseVec& v, SparseVec* combo) const;

    bool track_;
    std::size_t inserted_ = 0;
    std::vector<Row> rows_;
    std::unordered_map<Index, std::size_t> pivot_;
};

std::size_t rank_of(std::span<const SparseVec> vectors);

/// Basis of the relations among the given vectors: each result r satisfies
/// sum_k r_k vectors[k] = 0.
std::vector<SparseVec> kernel_of(std::span<const SparseVec> vectors);

/// Linear combination sum_k coeffs_k vectors[k].
SparseVec combine(std::span<const SparseVec> vectors, const SparseVec& coeffs);

/// A basis (subset of reduced rows) of span(vectors).
std::vector<SparseVec> basis_of(std::span<const SparseVec> vectors);

}  // namespace chromsh
