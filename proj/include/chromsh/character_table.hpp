#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "chromsh/partition.hpp"

namespace chromsh {

inline constexpr int kDefaultMaxDegree = 8;

/// Irreducible characters of the symmetric group S_n. Rows are irreducibles
/// lambda, columns are cycle types mu, both in reverse-lexicographic order.
class CharacterTable {
public:
    explicit CharacterTable(int n);

    int degree() const { return n_; }
    const std::vector<Partition>& partitions() const { return partitions_; }
    std::size_t index_of(const Partition& p) const;

    std::int64_t value(std::size_t lambda, std::size_t mu) const { return chi_[lambda][mu]; }
    std::int64_t value(const Partition& lambda, const Partition& mu) const {
        return chi_[index_of(lambda)][index_of(mu)];
    }
    /// z_mu, the order of the centralizer of a permutation of cycle type mu.
    std::uint64_t centralizer(std::size_t mu) const { return z_[mu]; }
    /// f^lambda = chi_lambda(1^n).
    std::uint64_t dimension(std::size_t lambda) const { return dims_[lambda]; }
    std::uint64_t dimension(const Partition& lambda) const { return dims_[index_of(lambda)]; }

private:
    int n_;
    std::vector<Partition> partitions_;
    std::vector<std::vector<std::int64_t>> chi_;
    std::vector<std::uint64_t> z_;
    std::vector<std::uint64_t> dims_;
};

/// Shared, immutable table for S_n. Tables are built once per n behind a
/// mutex. Throws BoundError unless 1 <= n <= max_degree.
std::shared_ptr<const CharacterTable> character_table(int n, int max_degree = kDefaultMaxDegree);

/// chi_lambda(mu) by the Murnaghan-Nakayama rule (no table needed).
std::int64_t murnaghan_nakayama(const Partition& lambda, const Partition& mu);

/// Cycle type of a permutation given in one-line notation.
Partition cycle_type(const std::vector<int>& perm);

}  // namespace chromsh
