#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "wps/error.hpp"
#include "wps/rational.hpp"

namespace wps {

// Internal consistency checks, kept in release builds.
#define WPS_ASSERT_INTERNAL(cond)                                                        \
    do {                                                                                 \
        if (!(cond))                                                                     \
            throw ::wps::Error("InternalInvariant", "violated: " #cond);                 \
    } while (0)

/// The weight tuple (a_0,...,a_n) of a weighted projective space
/// P(a_0,...,a_n). Entries stay in input order; the dimension of the space
/// is n = size() - 1. Immutable after construction.
class WeightVector {
public:
    /// Accepts entries that are already known positive.
    explicit WeightVector(std::vector<std::uint64_t> weights) : weights_(std::move(weights)) {
        if (weights_.size() < 2)
            throw EmptyInput();
        for (std::size_t i = 0; i < weights_.size(); ++i)
            if (weights_[i] == 0)
                throw NonPositiveWeight(i);
    }

    /// Checked entry point for raw (possibly invalid) integer input.
    static WeightVector validate(std::span<const long long> raw) {
        if (raw.size() < 2)
            throw EmptyInput();
        std::vector<std::uint64_t> w;
        w.reserve(raw.size());
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (raw[i] < 1)
                throw NonPositiveWeight(i);
            w.push_back(static_cast<std::uint64_t>(raw[i]));
        }
        return WeightVector(std::move(w));
    }

    static WeightVector validate(std::initializer_list<long long> raw) {
        return validate(std::span<const long long>(raw.begin(), raw.size()));
    }

    std::size_t size() const { return weights_.size(); }

    /// n, the dimension of P(a_0,...,a_n).
    std::size_t dim() const { return weights_.size() - 1; }

    std::uint64_t operator[](std::size_t i) const { return weights_[i]; }

    const std::vector<std::uint64_t>& weights() const { return weights_; }

    /// gcd(a_0,...,^a_i,...,a_n), the defining quantity of well-formedness.
    std::uint64_t gcd_excluding(std::size_t i) const {
        if (i >= weights_.size())
            throw IndexOutOfRange(i, weights_.size());
        std::uint64_t g = 0;
        for (std::size_t j = 0; j < weights_.size(); ++j)
            if (j != i)
                g = std::gcd(g, weights_[j]);
        return g;
    }

    /// True iff no n of the n+1 weights share a common factor.
    bool is_well_formed() const {
        for (std::size_t i = 0; i < weights_.size(); ++i)
            if (gcd_excluding(i) != 1)
                return false;
        return true;
    }

    /// For a well-formed space: singular locus is a finite set of torus-fixed
    /// points iff the weights are pairwise coprime.
    bool has_isolated_singularities() const {
        if (!is_well_formed())
            throw NotWellFormed();
        return pairwise_coprime();
    }

    /// Unchecked combinatorial predicate (no well-formedness requirement).
    bool pairwise_coprime() const {
        for (std::size_t i = 0; i < weights_.size(); ++i)
            for (std::size_t j = i + 1; j < weights_.size(); ++j)
                if (std::gcd(weights_[i], weights_[j]) != 1)
                    return false;
        return true;
    }

    /// Degree k of the ample generator O(k) of the Picard group:
    /// k = lcm(a_0,...,a_n), which equals the product of the weights exactly
    /// in the isolated-singularities case.
    Integer picard_generator_degree() const {
        if (!is_well_formed())
            throw NotWellFormed();
        Integer k = 1;
        for (std::uint64_t a : weights_)
            k = boost::multiprecision::lcm(k, Integer(a));
        if (pairwise_coprime()) {
            WPS_ASSERT_INTERNAL(k == weight_product());
        }
        return k;
    }

    /// Sum of the weights; the anticanonical degree of the ambient space.
    Integer canonical_weight_sum() const {
        Integer s = 0;
        for (std::uint64_t a : weights_)
            s += a;
        return s;
    }

    Integer weight_product() const {
        Integer p = 1;
        for (std::uint64_t a : weights_)
            p *= a;
        return p;
    }

    bool operator==(const WeightVector&) const = default;

private:
    std::vector<std::uint64_t> weights_;
};

/// One reduction applied while making weights well-formed. `pivot` is absent
/// for the initial division of every weight by the overall gcd; otherwise
/// every weight except the pivot was divided by `divisor`.
struct ReductionStep {
    std::optional<std::size_t> pivot;
    std::uint64_t divisor = 1;

    bool operator==(const ReductionStep&) const = default;
};

struct WellFormization {
    WeightVector weights;
    std::vector<ReductionStep> steps;
};

/// Reduce to the well-formed weights of an isomorphic space. A common factor
/// of all weights is divided out first; then, repeatedly, the smallest index
/// i with d = gcd_excluding(i) > 1 has every other weight divided by d.
/// Terminates because the weight product strictly decreases; idempotent on
/// well-formed input.
inline WellFormization well_formize(const WeightVector& w) {
    std::vector<std::uint64_t> cur = w.weights();
    std::vector<ReductionStep> steps;

    std::uint64_t overall = 0;
    for (std::uint64_t a : cur)
        overall = std::gcd(overall, a);
    if (overall > 1) {
        for (auto& a : cur)
            a /= overall;
        steps.push_back({std::nullopt, overall});
    }

    for (;;) {
        const WeightVector probe(cur);
        std::size_t pivot = cur.size();
        std::uint64_t d = 1;
        for (std::size_t i = 0; i < cur.size(); ++i) {
            const std::uint64_t g = probe.gcd_excluding(i);
            if (g > 1) {
                pivot = i;
                d = g;
                break;
            }
        }
        if (pivot == cur.size())
            return {probe, std::move(steps)};
        for (std::size_t j = 0; j < cur.size(); ++j)
            if (j != pivot)
                cur[j] /= d;
        steps.push_back({pivot, d});
    }
}

} // namespace wps
