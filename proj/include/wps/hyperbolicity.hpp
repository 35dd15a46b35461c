#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wps/error.hpp"
#include "wps/rational.hpp"
#include "wps/strata.hpp"
#include "wps/weights.hpp"

namespace wps {

enum class Status { Hyperbolic, NotHyperbolic, Unknown };

inline const char* to_string(Status s) {
    switch (s) {
    case Status::Hyperbolic: return "Hyperbolic";
    case Status::NotHyperbolic: return "NotHyperbolic";
    default: return "Unknown";
    }
}

/// A single genus-degree verdict. `epsilon` is present only when a positive
/// constant is actually certified (2g(C) - 2 >= epsilon * deg C); `citation`
/// names the criterion that produced the verdict.
struct HyperbolicityVerdict {
    Status status = Status::Unknown;
    std::string regime; // "outside-boundary", "full", "threefold-table"
    std::optional<Rational> epsilon;
    std::string citation;

    bool operator==(const HyperbolicityVerdict&) const = default;
};

/// The maximum of the per-subset thresholds Theta_I over coordinate subsets
/// of size >= 4, with the full threshold table and the smallest admissible
/// integer multiple.
struct ThetaReport {
    Rational theta;
    std::vector<std::pair<IndexSubset, Rational>> per_subset; // size-then-lex order
    std::vector<IndexSubset> argmax;
    std::int64_t m_min = 0;
    std::vector<IndexSubset> exceptional_subsets; // 4-subsets needing the surface table
    std::vector<std::string> warnings;
};

namespace detail {

inline void require_isolated(const WeightVector& w) {
    if (!w.has_isolated_singularities()) // throws NotWellFormed first
        throw NotIsolated();
}

inline std::string subset_to_string(const IndexSubset& I) {
    std::string s = "{";
    for (std::size_t i = 0; i < I.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(I[i]);
    }
    s += "}";
    return s;
}

/// Sorted-weight pattern of a 4-subset that escapes the generic threefold
/// criterion: (1,1,1,t) with t >= 2, or (1,1,2,3).
inline bool exceptional_fourfold_pattern(std::vector<std::uint64_t> sorted) {
    std::sort(sorted.begin(), sorted.end());
    if (sorted[0] == 1 && sorted[1] == 1 && sorted[2] == 1 && sorted[3] >= 2)
        return true;
    return sorted == std::vector<std::uint64_t>{1, 1, 2, 3};
}

/// The surface classification for P(a_0,...,a_3) with isolated singularities
/// at multiple m, on sorted weights. Patterns (1,1,1,t) and (1,1,2,3) follow
/// the published surface table; everything else is hyperbolic from m >= 2,
/// and m = 1 is open.
inline Status threefold_table_status(std::vector<std::uint64_t> sorted, const Integer& m) {
    std::sort(sorted.begin(), sorted.end());
    if (sorted[0] == 1 && sorted[1] == 1 && sorted[2] == 1) {
        const std::uint64_t t = sorted[3];
        if ((m >= 4 && t >= 2) || (m == 3 && t >= 4) || (m == 2 && t >= 5))
            return Status::Hyperbolic;
        if ((t == 1 && m <= 4) || (m == 2 && t <= 4))
            return Status::NotHyperbolic;
        return Status::Unknown;
    }
    if (sorted == std::vector<std::uint64_t>{1, 1, 2, 3}) {
        if (m >= 3)
            return Status::Hyperbolic;
        if (m == 1)
            return Status::NotHyperbolic;
        return Status::Unknown;
    }
    return m >= 2 ? Status::Hyperbolic : Status::Unknown;
}

} // namespace detail

/// The coefficient of H|_X in K_X for X in |mH|: m - sum(a_i)/prod(a_i).
inline Rational canonical_coefficient(const WeightVector& w, std::int64_t m) {
    if (m < 1)
        throw InvalidArgument("multiple must be >= 1");
    detail::require_isolated(w);
    return Rational(m) - Rational(w.canonical_weight_sum(), w.weight_product());
}

/// Threshold sum(a_i)/prod(a_i) + (n-2): multiples above it make a very
/// general member of |mH| hyperbolic away from the toric boundary.
inline Rational outside_boundary_threshold(const WeightVector& w) {
    detail::require_isolated(w);
    if (w.dim() < 3)
        throw DimensionTooSmall("the outside-boundary criterion needs dimension >= 3");
    return Rational(w.canonical_weight_sum(), w.weight_product()) +
           Rational(static_cast<std::int64_t>(w.dim()) - 2);
}

/// Margin m - (sum/prod + (n-2)); the certified constant when positive.
inline Rational epsilon_outside_boundary(const WeightVector& w, std::int64_t m) {
    if (m < 1)
        throw InvalidArgument("multiple must be >= 1");
    return Rational(m) - outside_boundary_threshold(w);
}

/// Per-subset threshold
///   Theta_I = (1/q_I) * (sum_{i in I} a_i / prod_{i in I} a_i + (|I| - 3)),
/// with q_I the product of the omitted weights.
inline Rational subset_threshold(const WeightVector& w, const IndexSubset& I) {
    detail::require_isolated(w);
    if (I.size() < 4)
        throw SubsetTooSmall("subset thresholds need |I| >= 4");
    std::vector<bool> in(w.size(), false);
    for (std::size_t i : I) {
        if (i >= w.size())
            throw IndexOutOfRange(i, w.size());
        if (in[i])
            throw InvalidArgument("subset indices must be distinct");
        in[i] = true;
    }
    Integer sum = 0, prod = 1, q = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (in[i]) {
            sum += w[i];
            prod *= w[i];
        } else {
            q *= w[i];
        }
    }
    const Rational inner = Rational(sum, prod) + Rational(static_cast<std::int64_t>(I.size()) - 3);
    return inner / Rational(q);
}

/// Maximizes Theta_I over all coordinate subsets with |I| >= 4. Partial sums
/// and products are maintained incrementally along a Gray-code walk of the
/// subset lattice; results are reported in size-then-lexicographic order.
inline ThetaReport theta(const WeightVector& w) {
    detail::require_isolated(w);
    if (w.dim() < 3)
        throw DimensionTooSmall("theta needs dimension >= 3");
    const std::size_t len = w.size();
    if (len > kMaxSubsetEnumerationLength)
        throw BudgetExceeded("theta over 2^" + std::to_string(len) +
                             " subsets exceeds the supported range");

    const Integer total_product = w.weight_product();
    std::vector<std::pair<std::uint64_t, Rational>> by_mask;
    Integer sum = 0, prod = 1;
    std::uint64_t gray = 0;
    const std::uint64_t count = std::uint64_t{1} << len;
    for (std::uint64_t k = 1; k < count; ++k) {
        const std::size_t flip = static_cast<std::size_t>(std::countr_zero(k));
        const std::uint64_t bit = std::uint64_t{1} << flip;
        gray ^= bit;
        if (gray & bit) {
            sum += w[flip];
            prod *= w[flip];
        } else {
            sum -= w[flip];
            prod /= w[flip]; // exact: the factor was multiplied in earlier
        }
        const int size = std::popcount(gray);
        if (size < 4)
            continue;
        const Rational inner = Rational(sum, prod) + Rational(size - 3);
        by_mask.emplace_back(gray, inner / Rational(total_product / prod));
    }

    std::vector<std::pair<IndexSubset, Rational>> table;
    table.reserve(by_mask.size());
    for (auto& [mask, value] : by_mask) {
        IndexSubset I;
        for (std::size_t i = 0; i < len; ++i)
            if (mask & (std::uint64_t{1} << i))
                I.push_back(i);
        table.emplace_back(std::move(I), std::move(value));
    }
    std::sort(table.begin(), table.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size())
            return a.first.size() < b.first.size();
        return a.first < b.first;
    });

    ThetaReport report;
    report.per_subset = std::move(table);
    report.theta = report.per_subset.front().second;
    for (const auto& [I, value] : report.per_subset)
        if (value > report.theta)
            report.theta = value;
    for (const auto& [I, value] : report.per_subset)
        if (value == report.theta)
            report.argmax.push_back(I);
    report.m_min = strict_ceil(report.theta).convert_to<std::int64_t>();

    for (const auto& [I, value] : report.per_subset) {
        if (I.size() != 4)
            continue;
        std::vector<std::uint64_t> sub;
        for (std::size_t i : I)
            sub.push_back(w[i]);
        if (detail::exceptional_fourfold_pattern(sub)) {
            Integer q = 1;
            std::vector<bool> in(len, false);
            for (std::size_t i : I)
                in[i] = true;
            for (std::size_t i = 0; i < len; ++i)
                if (!in[i])
                    q *= w[i];
            std::sort(sub.begin(), sub.end());
            std::string pattern = "(";
            for (std::size_t i = 0; i < sub.size(); ++i)
                pattern += (i ? "," : "") + std::to_string(sub[i]);
            pattern += ")";
            report.exceptional_subsets.push_back(I);
            report.warnings.push_back(
                "subset " + detail::subset_to_string(I) + " has weight pattern " + pattern +
                ": the generic 4-subset criterion does not cover it; verdicts consult the "
                "surface table at the induced multiple m*q_I (q_I = " + q.str() + ")");
        }
    }
    return report;
}

/// Smallest integer m with m > Theta (strict throughout).
inline std::int64_t minimal_m(const WeightVector& w) { return theta(w).m_min; }

/// Certified constant for |mH|: the minimum over subsets of m - Theta_I,
/// i.e. m - Theta. Non-positive values certify nothing.
inline Rational global_epsilon(const WeightVector& w, std::int64_t m) {
    if (m < 1)
        throw InvalidArgument("multiple must be >= 1");
    return Rational(m) - theta(w).theta;
}

/// Classification of very general surfaces in a weighted projective 3-fold
/// with isolated singularities, by sorted weight pattern. All regimes are
/// exactly the published ones; anything outside them stays Unknown.
inline HyperbolicityVerdict classify_threefold(const WeightVector& w, std::int64_t m) {
    if (w.size() != 4)
        throw WrongDimension("threefold classification needs exactly four weights");
    if (m < 1)
        throw InvalidArgument("multiple must be >= 1");
    detail::require_isolated(w);

    std::vector<std::uint64_t> sorted = w.weights();
    std::sort(sorted.begin(), sorted.end());
    const Status status = detail::threefold_table_status(sorted, Integer(m));

    HyperbolicityVerdict v;
    v.status = status;
    v.regime = "threefold-table";
    if (sorted[0] == 1 && sorted[1] == 1 && sorted[2] == 1) {
        const std::uint64_t t = sorted[3];
        switch (status) {
        case Status::Hyperbolic:
            v.citation = "surface table for P(1,1,1,t) (Coskun-Riedl)";
            break;
        case Status::NotHyperbolic:
            v.citation = "surface table for P(1,1,1,t) (Coskun-Riedl): known non-hyperbolic range";
            break;
        default:
            v.citation = "open case: (1,1,1," + std::to_string(t) + ") at m = " +
                         std::to_string(m) + " is outside the surface table";
        }
    } else if (sorted == std::vector<std::uint64_t>{1, 1, 2, 3}) {
        switch (status) {
        case Status::Hyperbolic:
            v.citation = "threefold criterion: m >= 3 for weight pattern (1,1,2,3)";
            break;
        case Status::NotHyperbolic:
            v.citation = "known failure: the degree-k surface in P(1,1,2,3) is not "
                         "algebraically hyperbolic";
            break;
        default:
            v.citation = "open case: m = 2 for weight pattern (1,1,2,3)";
        }
    } else {
        if (status == Status::Hyperbolic)
            v.citation = "threefold criterion: m >= 2 away from patterns (1,1,1,t) and (1,1,2,3)";
        else
            v.citation = "open case: m = 1";
    }
    return v;
}

/// Positivity of the canonical degree of the curve X cap D_i:
/// sum_{j != i} a_j < m * prod_j a_j.
inline bool boundary_curve_positive(const WeightVector& w, std::int64_t m, std::size_t i) {
    if (w.size() != 4)
        throw WrongDimension("boundary-curve positivity is a threefold statement");
    if (i >= w.size())
        throw IndexOutOfRange(i, w.size());
    if (m < 1)
        throw InvalidArgument("multiple must be >= 1");
    Integer lhs = 0;
    for (std::size_t j = 0; j < w.size(); ++j)
        if (j != i)
            lhs += w[j];
    return lhs < Integer(m) * w.weight_product();
}

/// Uniform upper bounds on Theta that need no subset search.
struct CorollaryBounds {
    Integer general;                         // 2n - 1
    std::optional<Rational> with_large_weight; // 3n/2 - 1, when some a_i >= 2
    std::optional<Rational> exact_ones_t;      // l - 1 + l/t for weights (1,...,1,t)
};

inline CorollaryBounds corollary_bound(const WeightVector& w) {
    detail::require_isolated(w);
    if (w.dim() < 3)
        throw DimensionTooSmall("corollary bounds need dimension >= 3");
    CorollaryBounds b;
    const auto n = static_cast<std::int64_t>(w.dim());
    b.general = 2 * n - 1;
    if (std::any_of(w.weights().begin(), w.weights().end(),
                    [](std::uint64_t a) { return a >= 2; }))
        b.with_large_weight = Rational(Integer(3 * n), Integer(2)) - 1;
    std::vector<std::uint64_t> sorted = w.weights();
    std::sort(sorted.begin(), sorted.end());
    if (sorted[sorted.size() - 2] == 1) {
        const std::uint64_t t = sorted.back();
        const std::int64_t l = n;
        b.exact_ones_t = Rational(l - 1) + Rational(Integer(l), Integer(t));
    }
    return b;
}

/// Sufficiency verdict for a very general member of |mH| when m exceeds
/// Theta. The margin m - Theta is the certified constant. 4-subsets whose
/// pattern escapes the generic criterion are re-checked against the surface
/// table at their induced multiple m*q_I; the verdict degrades to Unknown if
/// any of them is not certified there.
inline HyperbolicityVerdict theta_verdict(const WeightVector& w, std::int64_t m,
                                          const ThetaReport& report) {
    HyperbolicityVerdict v;
    v.regime = "full";
    if (Rational(m) <= report.theta) {
        v.status = Status::Unknown;
        v.citation = "m <= Theta: the stratum-threshold criterion does not apply";
        return v;
    }
    for (const IndexSubset& I : report.exceptional_subsets) {
        std::vector<std::uint64_t> sub;
        Integer q = 1;
        std::vector<bool> in(w.size(), false);
        for (std::size_t i : I)
            in[i] = true;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (in[i])
                sub.push_back(w[i]);
            else
                q *= w[i];
        }
        if (detail::threefold_table_status(sub, Integer(m) * q) != Status::Hyperbolic) {
            v.status = Status::Unknown;
            v.citation = "exceptional 4-subset " + detail::subset_to_string(I) +
                         " is not certified by the surface table at multiple m*q_I";
            return v;
        }
    }
    v.status = Status::Hyperbolic;
    v.epsilon = Rational(m) - report.theta;
    v.citation = "stratum-threshold criterion: m > Theta over coordinate subsets |I| >= 4";
    return v;
}

/// Composite verdict: threefold table in dimension 3, Theta criterion in
/// dimension >= 4, Unknown below dimension 3.
inline HyperbolicityVerdict hyperbolicity_verdict(const WeightVector& w, std::int64_t m) {
    if (m < 1)
        throw InvalidArgument("multiple must be >= 1");
    detail::require_isolated(w);
    if (w.dim() == 3)
        return classify_threefold(w, m);
    if (w.dim() >= 4)
        return theta_verdict(w, m, theta(w));
    HyperbolicityVerdict v;
    v.status = Status::Unknown;
    v.regime = "full";
    v.citation = "no criterion stated for dimension < 3";
    return v;
}

/// Verdict for curves away from the toric boundary (dimension >= 3).
inline HyperbolicityVerdict outside_boundary_verdict(const WeightVector& w, std::int64_t m) {
    const Rational eps = epsilon_outside_boundary(w, m);
    HyperbolicityVerdict v;
    v.regime = "outside-boundary";
    if (eps > 0) {
        v.status = Status::Hyperbolic;
        v.epsilon = eps;
        v.citation = "outside-boundary criterion: m > sum(a)/prod(a) + (n-2)";
    } else {
        v.status = Status::Unknown;
        v.citation = "m does not exceed the outside-boundary threshold";
    }
    return v;
}

} // namespace wps
