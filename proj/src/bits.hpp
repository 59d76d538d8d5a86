#pragma once

// Small helpers shared by the representation and complex code.

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace chromsh::detail {

/// Parity of the permutation sorting seq into increasing order.
inline int sort_sign(std::span<const int> seq) {
    int inversions = 0;
    for (std::size_t a = 0; a < seq.size(); ++a) {
        for (std::size_t b = a + 1; b < seq.size(); ++b) {
            if (seq[a] > seq[b]) ++inversions;
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

inline std::uint32_t mask_of(std::span<const int> points) {
    std::uint32_t m = 0;
    for (int p : points) m |= std::uint32_t{1} << p;
    return m;
}

inline std::vector<int> points_of(std::uint32_t m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

}  // namespace chromsh::detail
