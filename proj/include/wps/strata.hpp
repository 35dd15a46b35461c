#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "wps/error.hpp"
#include "wps/weights.hpp"

namespace wps {

using IndexSubset = std::vector<std::size_t>;

// 2^(n+1) subsets get enumerated; longer inputs are rejected up front.
inline constexpr std::size_t kMaxSubsetEnumerationLength = 20;

/// Combinatorial data of one toric stratum: the locus where exactly the
/// coordinates indexed by `support` are nonzero. Points of the stratum are
/// cyclic quotient singularities of order g = gcd(a_i, i in support) acting
/// with the complementary weights.
struct StratumInfo {
    IndexSubset support;                     // I, ascending
    std::uint64_t order = 1;                 // g
    std::vector<std::uint64_t> raw_type;     // a_j, j not in I, index order
    std::vector<std::uint64_t> reduced_type; // residues mod g in [1..g], sorted
    bool faithful = true;                    // gcd(g, residues) == 1

    bool singular() const { return order != 1; }

    /// Type notation "1/g(b_1,...,b_r)".
    std::string label() const {
        std::string s = "1/" + std::to_string(order) + "(";
        for (std::size_t i = 0; i < reduced_type.size(); ++i) {
            if (i)
                s += ",";
            s += std::to_string(reduced_type[i]);
        }
        s += ")";
        return s;
    }

    /// Local analytic model around points of the stratum. Recorded for
    /// reports; only the combinatorial data (I, g, residues) is certified.
    std::string local_model() const {
        return "C^" + std::to_string(support.size() - 1) + " x (C^" +
               std::to_string(raw_type.size()) + " / mu_" + std::to_string(order) + ")";
    }

    bool operator==(const StratumInfo&) const = default;
};

/// A coordinate hyperplane P(a_0,...,^a_i,...,a_n) of the toric boundary.
struct BoundaryDivisor {
    std::size_t omitted_index = 0;
    WeightVector sub_weights;

    bool operator==(const BoundaryDivisor&) const = default;
};

namespace detail {

inline StratumInfo make_stratum(const WeightVector& w, const IndexSubset& support) {
    StratumInfo s;
    s.support = support;
    std::uint64_t g = 0;
    for (std::size_t i : support)
        g = std::gcd(g, w[i]);
    s.order = g;
    std::vector<bool> in(w.size(), false);
    for (std::size_t i : support)
        in[i] = true;
    std::uint64_t res_gcd = g;
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (in[j])
            continue;
        s.raw_type.push_back(w[j]);
        const std::uint64_t r = w[j] % g;
        s.reduced_type.push_back(r == 0 ? g : r);
        res_gcd = std::gcd(res_gcd, w[j]);
    }
    std::sort(s.reduced_type.begin(), s.reduced_type.end());
    s.faithful = (g == 1) || (res_gcd == 1);
    return s;
}

} // namespace detail

/// All 2^(n+1) - 1 nonempty coordinate subsets with their singularity data,
/// ordered by subset size then lexicographically.
inline std::vector<StratumInfo> enumerate_strata(const WeightVector& w) {
    if (!w.is_well_formed())
        throw NotWellFormed();
    const std::size_t len = w.size();
    if (len > kMaxSubsetEnumerationLength)
        throw BudgetExceeded("stratum enumeration over 2^" + std::to_string(len) +
                             " subsets exceeds the supported range");
    std::vector<IndexSubset> subsets;
    subsets.reserve((std::size_t{1} << len) - 1);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << len); ++mask) {
        IndexSubset s;
        for (std::size_t i = 0; i < len; ++i)
            if (mask & (std::uint64_t{1} << i))
                s.push_back(i);
        subsets.push_back(std::move(s));
    }
    std::sort(subsets.begin(), subsets.end(), [](const IndexSubset& a, const IndexSubset& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    std::vector<StratumInfo> out;
    out.reserve(subsets.size());
    for (const auto& s : subsets)
        out.push_back(detail::make_stratum(w, s));
    return out;
}

/// The strata with nontrivial quotient order. For pairwise-coprime weights
/// these are exactly singleton supports (torus-fixed points).
inline std::vector<StratumInfo> singular_locus(const WeightVector& w) {
    std::vector<StratumInfo> out;
    for (auto& s : enumerate_strata(w))
        if (s.singular())
            out.push_back(std::move(s));
    return out;
}

/// The n+1 toric boundary divisors D_i = P(a_0,...,^a_i,...,a_n).
inline std::vector<BoundaryDivisor> boundary_divisors(const WeightVector& w) {
    if (w.size() < 3)
        throw DimensionTooSmall("boundary divisors of a 1-dimensional space are points");
    std::vector<BoundaryDivisor> out;
    out.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::vector<std::uint64_t> sub;
        sub.reserve(w.size() - 1);
        for (std::size_t j = 0; j < w.size(); ++j)
            if (j != i)
                sub.push_back(w[j]);
        out.push_back({i, WeightVector(std::move(sub))});
    }
    return out;
}

} // namespace wps
