#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace chromsh {

/// An integer partition: weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    /// Sorts the parts into decreasing order. Throws InputError on a part < 1.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int operator[](int k) const { return parts_[static_cast<std::size_t>(k)]; }
    bool empty() const { return parts_.empty(); }

    /// Hook shape (a - j, 1^j).
    static Partition hook(int a, int j);

    /// The conjugate (transposed) partition.
    Partition conjugate() const;

    /// Product of hook lengths; f^lambda = n! / hook_product().
    std::uint64_t hook_product() const;

    /// Union of parts (the power-sum product index p_a p_b = p_{a u b}).
    Partition join(const Partition& other) const;

    /// Text form "[2,1,1]"; the empty partition prints as "[]".
    std::string to_string() const;

    /// Lexicographic comparison of the part sequences.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }
    friend bool operator==(const Partition& a, const Partition& b) = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// Reverse-lexicographic order: (n) first, (1^n) last. Used for every
/// container of partitions in the engine.
struct RevLex {
    bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

/// All partitions of n in reverse-lexicographic order. partitions_of(0) = {[]}.
std::vector<Partition> partitions_of(int n);

/// Number of standard Young tableaux of shape lambda (hook length formula).
std::uint64_t num_standard_tableaux(const Partition& lambda);

/// Centralizer order z_mu = prod_i i^{m_i} m_i!.
std::uint64_t centralizer_order(const Partition& mu);

/// Partitions obtained by adding one box to lambda, each once.
std::vector<Partition> add_one_box(const Partition& lambda);

std::uint64_t factorial(int n);

}  // namespace chromsh
