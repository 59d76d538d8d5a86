#include "chromsh/symfunc.hpp"

#include <bit>
#include <functional>
#include <sstream>

#include "chromsh/error.hpp"

namespace chromsh {

char basis_letter(Basis b) { return b == Basis::PowerSum ? 'p' : 's'; }

SymFunc::SymFunc(Basis basis, const Partition& lambda, const Rational& coeff) : basis_(basis) {
    add_term(lambda, coeff);
}

Rational SymFunc::coefficient(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SymFunc::add_term(const Partition& lambda, const Rational& coeff) {
    if (coeff == 0) return;
    if (!terms_.empty() && terms_.begin()->first.size() != lambda.size()) {
        throw InputError("adding a degree-" + std::to_string(lambda.size()) + " term to a degree-" +
                         std::to_string(degree()) + " symmetric function");
    }
    auto [it, inserted] = terms_.emplace(lambda, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

void SymFunc::check_compatible(const SymFunc& other) const {
    if (other.basis_ != basis_ && !other.is_zero() && !is_zero()) {
        throw InputError("combining symmetric functions written in different bases");
    }
}

SymFunc& SymFunc::operator+=(const SymFunc& other) {
    check_compatible(other);
    if (is_zero()) basis_ = other.is_zero() ? basis_ : other.basis_;
    for (const auto& [lambda, c] : other.terms_) add_term(lambda, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other) {
    check_compatible(other);
    if (is_zero()) basis_ = other.is_zero() ? basis_ : other.basis_;
    for (const auto& [lambda, c] : other.terms_) add_term(lambda, -c);
    return *this;
}

SymFunc& SymFunc::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [lambda, coeff] : terms_) coeff *= c;
    return *this;
}

std::string SymFunc::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [lambda, c] : terms_) {
        const bool negative = c < 0;
        if (first) {
            if (negative) out << '-';
        } else {
            out << (negative ? " - " : " + ");
        }
        const Rational mag = abs(c);
        if (mag != 1) out << mag.get_str() << '*';
        out << basis_letter(basis_) << lambda.to_string();
        first = false;
    }
    return out.str();
}

SymFunc basis_convert(const SymFunc& x, Basis target, int max_degree) {
    if (x.basis() == target || x.is_zero()) {
        SymFunc copy = x;
        if (copy.is_zero()) return SymFunc(target);
        return copy;
    }
    const auto table = character_table(x.degree(), max_degree);
    const auto& parts = table->partitions();
    SymFunc out(target);
    for (const auto& [idx, c] : x.terms()) {
        const std::size_t k = table->index_of(idx);
        for (std::size_t other = 0; other < parts.size(); ++other) {
            if (target == Basis::Schur) {
                // p_mu = sum_lambda chi_lambda(mu) s_lambda
                const auto chi = table->value(other, k);
                if (chi != 0) out.add_term(parts[other], c * Rational(chi));
            } else {
                // s_lambda = sum_mu chi_lambda(mu) / z_mu p_mu
                const auto chi = table->value(k, other);
                if (chi != 0) {
                    out.add_term(parts[other], c * Rational(chi) / Rational(static_cast<unsigned long>(table->centralizer(other))));
                }
            }
        }
    }
    return out;
}

SymFunc multiply(const SymFunc& a, const SymFunc& b, int max_degree) {
    if (a.is_zero() || b.is_zero()) return SymFunc(a.basis());
    const SymFunc pa = basis_convert(a, Basis::PowerSum, max_degree);
    const SymFunc pb = basis_convert(b, Basis::PowerSum, max_degree);
    SymFunc prod(Basis::PowerSum);
    for (const auto& [la, ca] : pa.terms()) {
        for (const auto& [lb, cb] : pb.terms()) prod.add_term(la.join(lb), ca * cb);
    }
    return basis_convert(prod, a.basis(), max_degree);
}

Rational schur_multiplicity(const SymFunc& x, const Partition& lambda, int max_degree) {
    return basis_convert(x, Basis::Schur, max_degree).coefficient(lambda);
}

SymFunc chain_module_character(const std::vector<int>& block_weights, int j, int max_degree) {
    // Sum over distributions (j_1, ..., j_r) of j with 0 <= j_t < b_t of the
    // product of hook Schur functions.
    SymFunc total(Basis::Schur);
    std::vector<int> degrees(block_weights.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t t, int left) {
        if (t == block_weights.size()) {
            if (left != 0) return;
            SymFunc prod(Basis::PowerSum, Partition(), 1);
            for (std::size_t s = 0; s < block_weights.size(); ++s) {
                const Partition h = Partition::hook(block_weights[s], degrees[s]);
                const SymFunc hook_p = basis_convert(SymFunc(Basis::Schur, h), Basis::PowerSum, max_degree);
                SymFunc next(Basis::PowerSum);
                for (const auto& [la, ca] : prod.terms()) {
                    for (const auto& [lb, cb] : hook_p.terms()) next.add_term(la.join(lb), ca * cb);
                }
                prod = std::move(next);
            }
            total += basis_convert(prod, Basis::Schur, max_degree);
            return;
        }
        for (int d = 0; d < block_weights[t] && d <= left; ++d) {
            degrees[t] = d;
            rec(t + 1, left - d);
        }
    };
    rec(0, j);
    return total;
}

void Polynomial::add_term(const Exponents& exponents, const Rational& coeff) {
    if (coeff == 0) return;
    if (static_cast<int>(exponents.size()) != num_vars_) throw InputError("exponent vector has wrong length");
    auto [it, inserted] = terms_.emplace(exponents, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    Polynomial out(num_vars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : other.terms_) {
            Exponents e(ea.size());
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        const Rational mag = abs(c);
        bool wrote = false;
        if (mag != 1) {
            out << mag.get_str();
            wrote = true;
        }
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            out << (wrote ? "*" : "") << 'x' << (k + 1);
            if (e[k] > 1) out << '^' << e[k];
            wrote = true;
        }
        if (!wrote) out << '1';
        first = false;
    }
    return out.str();
}

Polynomial specialize(const SymFunc& x, int num_vars, int max_degree) {
    const SymFunc p = basis_convert(x, Basis::PowerSum, max_degree);
    Polynomial out(num_vars);
    for (const auto& [lambda, c] : p.terms()) {
        Polynomial term(num_vars);
        term.add_term(Polynomial::Exponents(static_cast<std::size_t>(num_vars), 0), c);
        for (int part : lambda.parts()) {
            Polynomial power_sum(num_vars);
            for (int v = 0; v < num_vars; ++v) {
                Polynomial::Exponents e(static_cast<std::size_t>(num_vars), 0);
                e[static_cast<std::size_t>(v)] = part;
                power_sum.add_term(e, 1);
            }
            term = term * power_sum;
        }
        out += term;
    }
    return out;
}

SymFunc csf_state_sum(const VertexWeightedGraph& g) {
    SymFunc out(Basis::PowerSum);
    const std::uint64_t count = std::uint64_t{1} << g.num_edges();
    for (std::uint64_t raw = 0; raw < count; ++raw) {
        const auto mask = static_cast<EdgeMask>(raw);
        const State s = state_profile(g, mask);
        out.add_term(s.lambda, std::popcount(mask) % 2 == 0 ? 1 : -1);
    }
    return out;
}

Polynomial csf_colorings_oracle(const VertexWeightedGraph& g, int num_colors) {
    if (num_colors < 1) throw InputError("need at least one color");
    const int n = g.num_vertices();
    Polynomial out(num_colors);
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    while (true) {
        bool proper = true;
        for (const Edge& e : g.edges()) {
            if (color[static_cast<std::size_t>(e.u)] == color[static_cast<std::size_t>(e.v)]) {
                proper = false;
                break;
            }
        }
        if (proper) {
            Polynomial::Exponents ex(static_cast<std::size_t>(num_colors), 0);
            for (VertexIndex v = 0; v < n; ++v) ex[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])] += g.weight(v);
            out.add_term(ex, 1);
        }
        int pos = 0;
        while (pos < n && ++color[static_cast<std::size_t>(pos)] == num_colors) {
            color[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == n) break;
    }
    return out;
}

DeletionContractionCheck check_deletion_contraction_csf(const VertexWeightedGraph& g, EdgeIndex e) {
    DeletionContractionCheck check;
    check.whole = csf_state_sum(g);
    check.deleted = csf_state_sum(modify_edge(g, e, EdgeMode::Delete));
    check.contracted = csf_state_sum(modify_edge(g, e, EdgeMode::Contract));
    check.holds = check.whole == check.deleted - check.contracted;
    return check;
}

}  // namespace chromsh
