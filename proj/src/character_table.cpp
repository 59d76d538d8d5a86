#include "chromsh/character_table.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "chromsh/error.hpp"

namespace chromsh {

namespace {

using Memo = std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t>;

// Beta-set form of Murnaghan-Nakayama: removing a k-rim hook from lambda is
// moving one bead beta -> beta - k onto a free position; the sign counts the
// beads jumped over. mu is consumed from the front.
std::int64_t mn_rec(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t start, Memo& memo) {
    if (start == mu.size()) return lambda.empty() ? 1 : 0;
    std::vector<int> rest(mu.begin() + static_cast<std::ptrdiff_t>(start), mu.end());
    auto key = std::make_pair(lambda, rest);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int len = static_cast<int>(lambda.size());
    std::vector<int> beta(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + len - 1 - i;

    const int k = mu[start];
    std::int64_t total = 0;
    for (int i = 0; i < len; ++i) {
        const int b = beta[static_cast<std::size_t>(i)];
        const int target = b - k;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int jumped = 0;
        for (int c : beta) {
            if (c > target && c < b) ++jumped;
        }
        std::vector<int> moved = beta;
        moved[static_cast<std::size_t>(i)] = target;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        std::vector<int> next;
        for (int r = 0; r < len; ++r) {
            const int part = moved[static_cast<std::size_t>(r)] - (len - 1 - r);
            if (part > 0) next.push_back(part);
        }
        const std::int64_t sub = mn_rec(next, mu, start + 1, memo);
        total += (jumped % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

std::int64_t murnaghan_nakayama(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw InputError("character arguments have different sizes");
    Memo memo;
    return mn_rec(lambda.parts(), mu.parts(), 0, memo);
}

CharacterTable::CharacterTable(int n) : n_(n), partitions_(partitions_of(n)) {
    Memo memo;
    const std::size_t k = partitions_.size();
    chi_.assign(k, std::vector<std::int64_t>(k, 0));
    for (std::size_t l = 0; l < k; ++l) {
        for (std::size_t m = 0; m < k; ++m) {
            chi_[l][m] = mn_rec(partitions_[l].parts(), partitions_[m].parts(), 0, memo);
        }
    }
    for (std::size_t m = 0; m < k; ++m) z_.push_back(centralizer_order(partitions_[m]));
    const std::size_t identity = k - 1;
    for (std::size_t l = 0; l < k; ++l) dims_.push_back(static_cast<std::uint64_t>(chi_[l][identity]));
}

std::size_t CharacterTable::index_of(const Partition& p) const {
    auto it = std::lower_bound(partitions_.begin(), partitions_.end(), p, RevLex{});
    if (it == partitions_.end() || *it != p) {
        throw InputError("partition " + p.to_string() + " is not a partition of " + std::to_string(n_));
    }
    return static_cast<std::size_t>(it - partitions_.begin());
}

std::shared_ptr<const CharacterTable> character_table(int n, int max_degree) {
    if (n < 1 || n > max_degree) {
        throw BoundError("character table degree " + std::to_string(n) + " outside [1, " +
                         std::to_string(max_degree) + "]");
    }
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const CharacterTable>> tables;
    std::lock_guard lock(mutex);
    auto& slot = tables[n];
    if (!slot) slot = std::make_shared<const CharacterTable>(n);
    return slot;
}

Partition cycle_type(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    std::vector<int> cycles;
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (seen[s]) continue;
        int len = 0;
        for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(perm[x])) {
            seen[x] = true;
            ++len;
        }
        cycles.push_back(len);
    }
    return Partition(std::move(cycles));
}

}  // namespace chromsh
