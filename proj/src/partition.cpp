#include "chromsh/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "chromsh/error.hpp"

namespace chromsh {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 1) throw InputError("partition parts must be positive");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::hook(int a, int j) {
    std::vector<int> parts{a - j};
    parts.insert(parts.end(), static_cast<std::size_t>(j), 1);
    return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
    std::vector<int> out;
    if (parts_.empty()) return Partition();
    for (int c = 1; c <= parts_.front(); ++c) {
        int len = 0;
        for (int p : parts_) {
            if (p >= c) ++len;
        }
        out.push_back(len);
    }
    return Partition(std::move(out));
}

std::uint64_t Partition::hook_product() const {
    const Partition conj = conjugate();
    std::uint64_t prod = 1;
    for (int r = 0; r < length(); ++r) {
        for (int c = 0; c < parts_[static_cast<std::size_t>(r)]; ++c) {
            const int arm = parts_[static_cast<std::size_t>(r)] - c - 1;
            const int leg = conj[c] - r - 1;
            prod *= static_cast<std::uint64_t>(arm + leg + 1);
        }
    }
    return prod;
}

Partition Partition::join(const Partition& other) const {
    std::vector<int> all = parts_;
    all.insert(all.end(), other.parts_.begin(), other.parts_.end());
    return Partition(std::move(all));
}

std::string Partition::to_string() const {
    std::string out = "[";
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(parts_[k]);
    }
    return out + "]";
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
}

std::uint64_t num_standard_tableaux(const Partition& lambda) {
    return factorial(lambda.size()) / lambda.hook_product();
}

std::uint64_t centralizer_order(const Partition& mu) {
    std::uint64_t z = 1;
    const auto& parts = mu.parts();
    for (std::size_t k = 0; k < parts.size();) {
        std::size_t run = k;
        while (run < parts.size() && parts[run] == parts[k]) ++run;
        const int mult = static_cast<int>(run - k);
        for (int t = 0; t < mult; ++t) z *= static_cast<std::uint64_t>(parts[k]);
        z *= factorial(mult);
        k = run;
    }
    return z;
}

std::vector<Partition> add_one_box(const Partition& lambda) {
    std::vector<Partition> out;
    const auto& parts = lambda.parts();
    for (std::size_t r = 0; r <= parts.size(); ++r) {
        std::vector<int> next = parts;
        if (r == parts.size()) {
            next.push_back(1);
        } else {
            if (r > 0 && parts[r - 1] == parts[r]) continue;
            ++next[r];
        }
        out.emplace_back(std::move(next));
    }
    return out;
}

}  // namespace chromsh
