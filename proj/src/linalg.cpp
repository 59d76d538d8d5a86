#include "chromsh/linalg.hpp"

#include <algorithm>

#include "chromsh/error.hpp"

namespace chromsh {

SparseVec SparseVec::unit(Index k, const Rational& c) {
    SparseVec v;
    v.push_back(k, c);
    return v;
}

Rational SparseVec::at(Index k) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), k,
                               [](const Entry& e, Index key) { return e.first < key; });
    return (it != entries_.end() && it->first == k) ? it->second : Rational(0);
}

void SparseVec::push_back(Index k, Rational c) {
    if (c == 0) return;
    if (!entries_.empty() && entries_.back().first >= k) {
        throw InvariantViolation("SparseVec::push_back indices out of order");
    }
    entries_.emplace_back(k, std::move(c));
}

void SparseVec::axpy(const Rational& c, const SparseVec& other) {
    if (c == 0 || other.entries_.empty()) return;
    std::vector<Entry> out;
    out.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
            out.push_back(std::move(*a));
            ++a;
        } else if (a == entries_.end() || b->first < a->first) {
            out.emplace_back(b->first, c * b->second);
            ++b;
        } else {
            Rational sum = a->second + c * b->second;
            if (sum != 0) out.emplace_back(a->first, std::move(sum));
            ++a;
            ++b;
        }
    }
    entries_ = std::move(out);
}

void SparseVec::scale(const Rational& c) {
    if (c == 0) {
        entries_.clear();
        return;
    }
    for (auto& e : entries_) e.second *= c;
}

void VecBuilder::add(Index k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = acc_.try_emplace(k, c);
    if (!inserted) it->second += c;
}

void VecBuilder::add(const SparseVec& v, const Rational& c) {
    for (const auto& [k, x] : v.entries()) add(k, c * x);
}

SparseVec VecBuilder::build() const {
    std::vector<std::pair<Index, const Rational*>> items;
    items.reserve(acc_.size());
    for (const auto& [k, c] : acc_) {
        if (c != 0) items.emplace_back(k, &c);
    }
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec out;
    for (const auto& [k, c] : items) out.push_back(k, *c);
    return out;
}

SparseVec SparseMatrix::apply(const SparseVec& v) const {
    VecBuilder acc;
    for (const auto& [k, c] : v.entries()) {
        if (k >= cols.size()) throw InvariantViolation("SparseMatrix::apply index out of range");
        acc.add(cols[k], c);
    }
    return acc.build();
}

bool SparseMatrix::is_zero() const {
    return std::all_of(cols.begin(), cols.end(), [](const SparseVec& c) { return c.empty(); });
}

void Echelon::reduce_in_place(SparseVec& v, SparseVec* combo) const {
    std::size_t pos = 0;
    while (pos < v.size()) {
        const auto& [idx, coeff] = v.entries()[pos];
        auto it = pivot_.find(idx);
        if (it == pivot_.end()) {
            ++pos;
            continue;
        }
        const Row& row = rows_[it->second];
        const Rational factor = -coeff;
        v.axpy(factor, row.vec);
        if (combo) combo->axpy(factor, row.combo);
    }
}

SparseVec Echelon::reduce(const SparseVec& v) const {
    SparseVec r = v;
    reduce_in_place(r, nullptr);
    return r;
}

bool Echelon::insert(const SparseVec& v, SparseVec* relation) {
    const auto id = static_cast<Index>(inserted_++);
    SparseVec r = v;
    SparseVec combo;
    if (track_) combo = SparseVec::unit(id);
    reduce_in_place(r, track_ ? &combo : nullptr);
    if (r.empty()) {
        if (relation) *relation = std::move(combo);
        return false;
    }
    const Rational inv = 1 / r.entries().front().second;
    r.scale(inv);
    if (track_) combo.scale(inv);
    pivot_.emplace(r.entries().front().first, rows_.size());
    rows_.push_back({std::move(r), std::move(combo)});
    return true;
}

std::optional<SparseVec> Echelon::solve(const SparseVec& v) const {
    if (!track_) throw InvariantViolation("Echelon::solve requires combination tracking");
    SparseVec r = v;
    SparseVec combo;
    reduce_in_place(r, &combo);
    if (!r.empty()) return std::nullopt;
    combo.scale(-1);
    return combo;
}

std::size_t rank_of(std::span<const SparseVec> vectors) {
    // Sparse vectors first: keeps fill-in of the stored rows low.
    std::vector<const SparseVec*> order;
    order.reserve(vectors.size());
    for (const auto& v : vectors) order.push_back(&v);
    std::stable_sort(order.begin(), order.end(), [](const SparseVec* a, const SparseVec* b) { return a->size() < b->size(); });
    Echelon ech;
    for (const SparseVec* v : order) ech.insert(*v);
    return ech.rank();
}

std::vector<SparseVec> kernel_of(std::span<const SparseVec> vectors) {
    Echelon ech(true);
    std::vector<SparseVec> out;
    for (const auto& v : vectors) {
        SparseVec rel;
        if (!ech.insert(v, &rel)) out.push_back(std::move(rel));
    }
    return out;
}

SparseVec combine(std::span<const SparseVec> vectors, const SparseVec& coeffs) {
    VecBuilder acc;
    for (const auto& [k, c] : coeffs.entries()) acc.add(vectors[k], c);
    return acc.build();
}

std::vector<SparseVec> basis_of(std::span<const SparseVec> vectors) {
    Echelon ech;
    std::vector<SparseVec> out;
    for (const auto& v : vectors) {
        if (ech.insert(v)) out.push_back(v);
    }
    return out;
}

}  // namespace chromsh
