#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wps/error.hpp"
#include "wps/weights.hpp"

namespace wps {

/// A monomial x_0^{e_0}...x_n^{e_n} of the weighted coordinate ring,
/// recorded with its weighted degree sum(a_i e_i).
struct Monomial {
    std::vector<std::uint64_t> exponents;
    std::uint64_t weighted_degree = 0;

    bool operator==(const Monomial&) const = default;

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < exponents.size(); ++i) {
            if (i)
                s += ",";
            s += std::to_string(exponents[i]);
        }
        s += ")";
        return s;
    }
};

namespace detail {

template <typename Fn>
void enumerate_exponents(const WeightVector& w, std::size_t coord, std::uint64_t remaining,
                         std::vector<std::uint64_t>& exps, Fn&& emit) {
    if (coord + 1 == w.size()) {
        if (remaining % w[coord] == 0) {
            exps[coord] = remaining / w[coord];
            emit(exps);
        }
        return;
    }
    // descending lexicographic output: largest leading exponent first
    for (std::uint64_t e = remaining / w[coord] + 1; e-- > 0;) {
        exps[coord] = e;
        enumerate_exponents(w, coord + 1, remaining - e * w[coord], exps, emit);
    }
}

} // namespace detail

/// All exponent vectors of weighted degree exactly d, in descending
/// lexicographic order. Empty when d is not representable.
inline std::vector<Monomial> monomial_basis(const WeightVector& w, std::int64_t d) {
    if (d < 0)
        throw NegativeDegree(d);
    std::vector<Monomial> out;
    std::vector<std::uint64_t> exps(w.size(), 0);
    detail::enumerate_exponents(w, 0, static_cast<std::uint64_t>(d), exps,
                                [&](const std::vector<std::uint64_t>& e) {
                                    out.push_back({e, static_cast<std::uint64_t>(d)});
                                });
    return out;
}

/// dim H^0(P, O(d)): the number of solutions of sum(a_i e_i) = d, computed by
/// dynamic programming over one weight at a time. Matches monomial_basis
/// cardinality by an independent route.
inline Integer h0_dimension(const WeightVector& w, std::int64_t d) {
    if (d < 0)
        throw NegativeDegree(d);
    const auto degree = static_cast<std::uint64_t>(d);
    std::vector<Integer> ways(degree + 1, 0);
    ways[0] = 1;
    for (std::uint64_t a : w.weights()) {
        if (a > degree)
            continue;
        for (std::uint64_t j = a; j <= degree; ++j)
            ways[j] += ways[j - a];
    }
    return ways[degree];
}

/// Caps the memoized decomposition search. Exceeding the cap is an error,
/// never a silent negative answer.
struct DecompositionBudget {
    std::size_t max_memo_entries = 1'000'000;
};

namespace detail {

inline std::uint64_t degree_of(const WeightVector& w, const std::vector<std::uint64_t>& e) {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        d += e[i] * w[i];
    return d;
}

/// Memoized search for factorizations of a monomial into parts of one fixed
/// weighted degree. The memo key is the residual exponent vector; the number
/// of parts it still needs is determined by its degree.
class DecompositionSearch {
public:
    DecompositionSearch(const WeightVector& w, std::uint64_t part_degree,
                        DecompositionBudget budget)
        : w_(w), part_degree_(part_degree), budget_(budget) {}

    /// True iff `exps` (of weighted degree parts * part_degree) is a product
    /// of `parts` monomials each of weighted degree part_degree.
    bool splits(const std::vector<std::uint64_t>& exps, std::uint64_t parts) {
        if (parts <= 1)
            return true;
        if (auto it = memo_.find(exps); it != memo_.end())
            return it->second;
        bool ok = false;
        std::vector<std::uint64_t> part(w_.size(), 0);
        for_each_divisor(exps, part, 0, part_degree_, [&](const std::vector<std::uint64_t>& f) {
            std::vector<std::uint64_t> rest(exps.size());
            for (std::size_t i = 0; i < exps.size(); ++i)
                rest[i] = exps[i] - f[i];
            if (splits(rest, parts - 1)) {
                ok = true;
                return true; // stop
            }
            return false;
        });
        remember(exps, ok);
        return ok;
    }

    /// True iff some divisor of `exps` with weighted degree part_degree_ has
    /// an exponent outside coordinate `avoid` (i.e. vanishes at the fixed
    /// point p_avoid).
    bool has_divisor_off_axis(const std::vector<std::uint64_t>& exps, std::size_t avoid) {
        bool found = false;
        std::vector<std::uint64_t> part(w_.size(), 0);
        for_each_divisor(exps, part, 0, part_degree_, [&](const std::vector<std::uint64_t>& f) {
            for (std::size_t i = 0; i < f.size(); ++i)
                if (i != avoid && f[i] > 0) {
                    found = true;
                    return true;
                }
            return false;
        });
        return found;
    }

private:
    template <typename Fn>
    bool for_each_divisor(const std::vector<std::uint64_t>& exps, std::vector<std::uint64_t>& part,
                          std::size_t coord, std::uint64_t remaining, Fn&& visit) {
        if (remaining == 0) {
            for (std::size_t i = coord; i < part.size(); ++i)
                part[i] = 0;
            return visit(part);
        }
        if (coord == part.size())
            return false;
        const std::uint64_t cap = std::min(exps[coord], remaining / w_[coord]);
        for (std::uint64_t e = cap + 1; e-- > 0;) {
            part[coord] = e;
            if (for_each_divisor(exps, part, coord + 1, remaining - e * w_[coord], visit))
                return true;
        }
        return false;
    }

    void remember(const std::vector<std::uint64_t>& key, bool value) {
        if (memo_.size() >= budget_.max_memo_entries)
            throw BudgetExceeded("decomposition memo exceeded " +
                                 std::to_string(budget_.max_memo_entries) + " entries");
        memo_.emplace(key, value);
    }

    const WeightVector& w_;
    std::uint64_t part_degree_;
    DecompositionBudget budget_;
    std::map<std::vector<std::uint64_t>, bool> memo_;
};

inline std::uint64_t to_u64_degree(const Integer& k, const char* what) {
    if (k > std::numeric_limits<std::uint64_t>::max())
        throw BudgetExceeded(std::string(what) + " does not fit the enumerable degree range");
    return k.convert_to<std::uint64_t>();
}

inline std::int64_t checked_degree(std::uint64_t k, std::int64_t m) {
    const Integer d = Integer(k) * m;
    if (d > std::numeric_limits<std::int64_t>::max())
        throw BudgetExceeded("degree " + d.str() + " exceeds the enumerable range");
    return d.convert_to<std::int64_t>();
}

} // namespace detail

/// Test-visible core of the factorization check: does `mono` factor into
/// `parts` monomials of weighted degree `part_degree` each?
inline bool factors_into_parts(const WeightVector& w, const Monomial& mono,
                               std::uint64_t part_degree, std::uint64_t parts,
                               DecompositionBudget budget = {}) {
    if (mono.weighted_degree != part_degree * parts)
        throw InvalidArgument("monomial degree is not parts * part_degree");
    detail::DecompositionSearch search(w, part_degree, budget);
    return search.splits(mono.exponents, parts);
}

/// Outcome of the degree-1 generation check for the section ring of O(k).
struct NormalGenerationCertificate {
    bool success = true;
    Integer k;
    std::int64_t max_multiple = 0;
    std::uint64_t monomials_checked = 0;
    std::optional<std::int64_t> failing_multiple;
    std::optional<Monomial> counterexample;
};

/// Certifies, for every m in 2..max_multiple, that each monomial of weighted
/// degree m*k is a product of m monomials of weighted degree k. k must be the
/// Picard generator degree of w.
inline NormalGenerationCertificate
is_normally_generated_upto(const WeightVector& w, const Integer& k, std::int64_t max_multiple,
                           DecompositionBudget budget = {}) {
    if (max_multiple < 2)
        throw InvalidArgument("max multiple must be >= 2");
    const Integer expected = w.picard_generator_degree();
    if (k != expected)
        throw InvalidK("k = " + k.str() + " is not the Picard generator degree " +
                       expected.str());
    const std::uint64_t k64 = detail::to_u64_degree(k, "picard generator degree");

    NormalGenerationCertificate cert;
    cert.k = k;
    cert.max_multiple = max_multiple;
    detail::DecompositionSearch search(w, k64, budget);
    for (std::int64_t m = 2; m <= max_multiple; ++m) {
        const auto basis = monomial_basis(w, detail::checked_degree(k64, m));
        for (const Monomial& mono : basis) {
            ++cert.monomials_checked;
            if (!search.splits(mono.exponents, static_cast<std::uint64_t>(m))) {
                cert.success = false;
                cert.failing_multiple = m;
                cert.counterexample = mono;
                return cert;
            }
        }
    }
    return cert;
}

/// Outcome of the fixed-point section-domination check. Only torus-fixed
/// points are certified; the scope note records that restriction.
struct DominationCertificate {
    bool success = true;
    Integer k;
    std::int64_t multiple = 0;
    std::string scope = "torus-fixed points only";
    std::uint64_t monomials_checked = 0;
    std::optional<std::size_t> failing_point;
    std::optional<Monomial> counterexample;
};

/// For each torus-fixed point p_i, certifies that every monomial of weighted
/// degree m*k vanishing at p_i (not a pure power of x_i) factors as f*g with
/// deg f = k, f vanishing at p_i, and deg g = (m-1)k.
inline DominationCertificate
check_section_domination_at_fixed_points(const WeightVector& w, std::int64_t multiple,
                                         DecompositionBudget budget = {}) {
    if (multiple < 1)
        throw InvalidArgument("multiple must be >= 1");
    if (!w.has_isolated_singularities())
        throw NotIsolated();
    const Integer k = w.picard_generator_degree();
    const std::uint64_t k64 = detail::to_u64_degree(k, "picard generator degree");

    DominationCertificate cert;
    cert.k = k;
    cert.multiple = multiple;
    detail::DecompositionSearch search(w, k64, budget);
    const auto basis = monomial_basis(w, detail::checked_degree(k64, multiple));
    for (std::size_t point = 0; point < w.size(); ++point) {
        for (const Monomial& mono : basis) {
            bool pure_power = true;
            for (std::size_t j = 0; j < w.size(); ++j)
                if (j != point && mono.exponents[j] > 0) {
                    pure_power = false;
                    break;
                }
            if (pure_power)
                continue; // does not vanish at p_point
            ++cert.monomials_checked;
            if (!search.has_divisor_off_axis(mono.exponents, point)) {
                cert.success = false;
                cert.failing_point = point;
                cert.counterexample = mono;
                return cert;
            }
        }
    }
    return cert;
}

} // namespace wps
