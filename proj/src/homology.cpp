#include "chromsh/homology.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <tuple>

#include "chromsh/error.hpp"
#include "parallel.hpp"

namespace chromsh {

namespace {

std::string bidegree_text(int i, int j) { return "(" + std::to_string(i) + ", " + std::to_string(j) + ")"; }

std::size_t rank_of_images(const SparseMatrix& d, std::span<const SparseVec> vectors) {
    std::vector<SparseVec> images;
    images.reserve(vectors.size());
    for (const SparseVec& v : vectors) images.push_back(d.apply(v));
    return rank_of(images);
}

SymFunc cached_chain_character(const std::vector<int>& weights, int j) {
    static std::mutex mutex;
    static std::map<std::pair<std::vector<int>, int>, SymFunc> cache;
    const auto key = std::make_pair(weights, j);
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    SymFunc ch = chain_module_character(weights, j, kHardMaxPoints);
    std::lock_guard lock(mutex);
    return cache.emplace(key, std::move(ch)).first->second;
}

}  // namespace

const Multiplicities& HomologyTable::at(int i, int j) const {
    static const Multiplicities empty;
    auto it = modules.find({i, j});
    return it == modules.end() ? empty : it->second;
}

int HomologyTable::multiplicity(int i, int j, const Partition& lambda) const {
    const auto& m = at(i, j);
    auto it = m.find(lambda);
    return it == m.end() ? 0 : it->second;
}

SymFunc HomologyTable::character(int i, int j) const {
    SymFunc out(Basis::Schur);
    for (const auto& [lambda, mult] : at(i, j)) out.add_term(lambda, mult);
    return out;
}

std::vector<SparseVec> isotypic_chain_basis(const ChainComplex& c, int i, int j, const Partition& lambda) {
    std::vector<SparseVec> out;
    const auto jj = static_cast<std::size_t>(j);
    for (const ChainSummand& s : c.summands(i)) {
        if (s.space->dim(j) == 0) continue;
        const auto local = cached_isotypic_basis(s.space, j, lambda);
        for (const SparseVec& v : *local) {
            SparseVec shifted;
            for (const auto& [k, x] : v.entries()) shifted.push_back(s.offset[jj] + k, x);
            out.push_back(std::move(shifted));
        }
    }
    return out;
}

HomologyTable homology_table(const ChainComplex& c, const HomologyOptions& options) {
    const int n = c.num_points();
    const int m = c.max_index();
    const int top = c.max_degree();
    const std::vector<Partition> lambdas = partitions_of(n);
    const auto table = character_table(n, kHardMaxPoints);

    struct Task {
        int i;
        int j;
        std::size_t lambda;
    };
    std::vector<Task> tasks;
    for (int i = 0; i <= m; ++i) {
        for (int j = 0; j <= top; ++j) {
            if (c.dim(i, j) == 0) continue;
            for (std::size_t l = 0; l < lambdas.size(); ++l) tasks.push_back({i, j, l});
        }
    }
    // chain multiplicity and rank of d_{i,j} on the lambda-part, per task
    std::vector<std::size_t> chain_mult(tasks.size(), 0);
    std::vector<std::size_t> rank(tasks.size(), 0);
    detail::parallel_for(tasks.size(), options.threads, [&](std::size_t k) {
        const Task& t = tasks[k];
        const auto basis = isotypic_chain_basis(c, t.i, t.j, lambdas[t.lambda]);
        chain_mult[k] = basis.size();
        if (t.i > 0 && !basis.empty()) rank[k] = rank_of_images(c.differential(t.i, t.j), basis);
    });

    std::map<std::tuple<int, int, std::size_t>, std::size_t> task_index;
    for (std::size_t k = 0; k < tasks.size(); ++k) task_index[{tasks[k].i, tasks[k].j, tasks[k].lambda}] = k;
    auto lookup = [&](const std::vector<std::size_t>& values, int i, int j, std::size_t l) -> std::size_t {
        auto it = task_index.find({i, j, l});
        return it == task_index.end() ? 0 : values[it->second];
    };

    if (options.character_check) {
        for (std::size_t k = 0; k < tasks.size(); ++k) {
            const Task& t = tasks[k];
            Rational expected = 0;
            for (const ChainSummand& s : c.summands(t.i)) {
                expected += cached_chain_character(s.state.block_weights, t.j).coefficient(lambdas[t.lambda]);
            }
            if (expected != Rational(static_cast<unsigned long>(chain_mult[k]))) {
                throw InvariantViolation("chain multiplicity of " + lambdas[t.lambda].to_string() + " at " +
                                         bidegree_text(t.i, t.j) + " disagrees with its character");
            }
        }
    }

    HomologyTable out;
    out.num_points = n;
    out.max_index = m;
    out.max_degree = top;
    for (std::size_t k = 0; k < tasks.size(); ++k) {
        const Task& t = tasks[k];
        const auto outgoing = static_cast<long>(rank[k]);
        const auto incoming = static_cast<long>(lookup(rank, t.i + 1, t.j, t.lambda));
        const long mult = static_cast<long>(chain_mult[k]) - outgoing - incoming;
        if (mult < 0) {
            throw InvariantViolation("negative multiplicity of " + lambdas[t.lambda].to_string() + " at " +
                                     bidegree_text(t.i, t.j));
        }
        if (mult > 0) out.modules[{t.i, t.j}][lambdas[t.lambda]] = static_cast<int>(mult);
    }
    for (const auto& [bideg, mults] : out.modules) {
        std::size_t dim = 0;
        for (const auto& [lambda, mult] : mults) dim += static_cast<std::size_t>(mult) * table->dimension(lambda);
        out.betti[bideg] = dim;
    }

    if (options.betti_check) {
        std::vector<std::vector<std::size_t>> full_rank(static_cast<std::size_t>(m + 2),
                                                        std::vector<std::size_t>(static_cast<std::size_t>(top + 1), 0));
        std::vector<std::pair<int, int>> rank_tasks;
        for (int i = 1; i <= m; ++i) {
            for (int j = 0; j <= top; ++j) rank_tasks.emplace_back(i, j);
        }
        detail::parallel_for(rank_tasks.size(), options.threads, [&](std::size_t k) {
            const auto [i, j] = rank_tasks[k];
            full_rank[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = rank_of(c.differential(i, j).cols);
        });
        for (int i = 0; i <= m; ++i) {
            for (int j = 0; j <= top; ++j) {
                const std::size_t plain = c.dim(i, j) - full_rank[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                                          full_rank[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j)];
                auto it = out.betti.find({i, j});
                const std::size_t isotypic = it == out.betti.end() ? 0 : it->second;
                if (plain != isotypic) {
                    throw InvariantViolation("Betti number at " + bidegree_text(i, j) + " is " + std::to_string(plain) +
                                             " by plain ranks but " + std::to_string(isotypic) +
                                             " from multiplicities");
                }
            }
        }
    }
    return out;
}

HomologyTable homology_table(const VertexWeightedGraph& g, const HomologyOptions& options) {
    const auto c = build_complex(g, options.complex);
    return homology_table(*c, options);
}

IsotypicRank isotypic_rank(const IsotypicProjector& p, const ChainSpace& domain, int j, const SparseMatrix& m) {
    if (m.num_cols() != domain.dim(j)) throw InputError("matrix does not act on the chain space");
    IsotypicRank out;
    Echelon ech;
    for (Index k = 0; k < domain.dim(j); ++k) {
        const SparseVec projected = p.apply(domain, j, SparseVec::unit(k));
        out.dim += projected.at(k);
        ech.insert(m.apply(projected));
    }
    out.rank = ech.rank();
    return out;
}

FrobeniusSeries::FrobeniusSeries(const HomologyTable& t) {
    for (const auto& [bideg, mults] : t.modules) {
        const auto [i, j] = bideg;
        const int sign = (i + j) % 2 == 0 ? 1 : -1;
        for (const auto& [lambda, mult] : mults) add(lambda, j, i, Rational(sign * mult));
    }
}

void FrobeniusSeries::add(const Partition& lambda, int q_degree, int t_degree, const Rational& c) {
    if (c == 0) return;
    auto& poly = coeffs_[lambda];
    Rational& slot = poly[{q_degree, t_degree}];
    slot += c;
    if (slot == 0) poly.erase({q_degree, t_degree});
    if (poly.empty()) coeffs_.erase(lambda);
}

SymFunc FrobeniusSeries::evaluate(const Rational& q, const Rational& t) const {
    SymFunc out(Basis::Schur);
    for (const auto& [lambda, poly] : coeffs_) {
        Rational value = 0;
        for (const auto& [degrees, c] : poly) {
            Rational term = c;
            for (int k = 0; k < degrees.first; ++k) term *= q;
            for (int k = 0; k < degrees.second; ++k) term *= t;
            value += term;
        }
        out.add_term(lambda, value);
    }
    return out;
}

namespace {

std::string monomial_text(int q_degree, int t_degree) {
    std::string out;
    auto factor = [&](const char* var, int d) {
        if (d == 0) return;
        if (!out.empty()) out += "*";
        out += var;
        if (d > 1) out += "^" + std::to_string(d);
    };
    factor("q", q_degree);
    factor("t", t_degree);
    return out;
}

// Writes a polynomial whose leading coefficient is known to be positive.
std::string polynomial_text(const QTPolynomial& poly, bool negate) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [degrees, raw] : poly) {
        const Rational c = negate ? Rational(-raw) : raw;
        const Rational mag = abs(c);
        const std::string mono = monomial_text(degrees.first, degrees.second);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (mono.empty()) {
            out << mag.get_str();
        } else if (mag == 1) {
            out << mono;
        } else {
            out << mag.get_str() << "*" << mono;
        }
    }
    return out.str();
}

}  // namespace

std::string FrobeniusSeries::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [lambda, poly] : coeffs_) {
        const bool all_negative =
            std::all_of(poly.begin(), poly.end(), [](const auto& term) { return term.second < 0; });
        const std::string schur = "s" + lambda.to_string();
        out << (first ? (all_negative ? "-" : "") : (all_negative ? " - " : " + "));
        first = false;
        const bool single = poly.size() == 1;
        const auto& [degrees, c] = *poly.begin();
        if (single && abs(c) == 1 && degrees == std::make_pair(0, 0)) {
            out << schur;
        } else if (single) {
            out << polynomial_text(poly, all_negative) << "*" << schur;
        } else {
            out << "(" << polynomial_text(poly, all_negative) << ")*" << schur;
        }
    }
    return out.str();
}

FrobeniusSeries frobenius_series(const HomologyTable& t) { return FrobeniusSeries(t); }

SymFunc chain_euler_characteristic(const VertexWeightedGraph& g) {
    SymFunc out(Basis::Schur);
    const int n = g.total_weight();
    for (int i = 0; i <= g.num_edges(); ++i) {
        for (const LayerEntry& entry : lattice_layer(g, i)) {
            for (int j = 0; j < n; ++j) {
                SymFunc ch = cached_chain_character(entry.state.block_weights, j);
                if ((i + j) % 2 != 0) ch *= Rational(-1);
                out += ch;
            }
        }
    }
    return out;
}

CategorificationCheck categorification_check(const VertexWeightedGraph& g, const HomologyTable& t) {
    CategorificationCheck out;
    out.frobenius_at_one = frobenius_series(t).evaluate(1, 1);
    out.chromatic = basis_convert(csf_state_sum(g), Basis::Schur, kHardMaxPoints);
    out.chain_euler = chain_euler_characteristic(g);
    out.holds = out.frobenius_at_one == out.chromatic;
    out.euler_holds = out.frobenius_at_one == out.chain_euler;
    return out;
}

std::optional<SpanIndices> span_indices(const HomologyTable& t, int j) {
    std::optional<SpanIndices> out;
    for (int i = 0; i <= t.max_index; ++i) {
        if (!t.nonzero(i, j)) continue;
        if (!out) out = SpanIndices{i, i, std::nullopt};
        out->k_max = i;
    }
    if (out && j == 0) out->span0 = out->k_max + 1;
    return out;
}

}  // namespace chromsh
