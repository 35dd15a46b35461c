#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <future>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "wps/error.hpp"
#include "wps/hyperbolicity.hpp"
#include "wps/weights.hpp"

namespace wps {

/// One failed instance of a verified claim, with both sides of the failed
/// inequality as exact values.
struct Violation {
    std::vector<std::uint64_t> weights;
    Rational lhs;
    Rational rhs;
    std::optional<std::size_t> index; // omitted index, for boundary positivity
    std::string detail;

    bool operator==(const Violation&) const = default;
};

struct SearchReport {
    std::string claim_id;
    std::string range;
    std::uint64_t checked_count = 0;
    std::vector<Violation> violations;
    std::vector<std::string> notes;
    std::chrono::duration<double> elapsed{0};

    bool holds() const { return violations.empty(); }
};

/// Streams all non-decreasing pairwise-coprime tuples of a fixed length with
/// entries in [1, max_weight], in lexicographic order, each exactly once.
class CoprimeTupleStream {
public:
    CoprimeTupleStream(std::size_t length, std::uint64_t max_weight)
        : length_(length), max_(max_weight), values_(length, 0), next_try_(length, 1) {
        if (length < 2)
            throw InvalidArgument("tuple length must be >= 2");
        if (max_weight < 1)
            throw InvalidArgument("max weight must be >= 1");
    }

    std::optional<std::vector<std::uint64_t>> next() {
        while (!done_) {
            if (depth_ == length_) {
                auto out = values_;
                --depth_;
                next_try_[depth_] = values_[depth_] + 1;
                return out;
            }
            std::uint64_t v = std::max(next_try_[depth_], depth_ ? values_[depth_ - 1] : 1);
            while (v <= max_ && !coprime_with_prefix(v))
                ++v;
            if (v <= max_) {
                values_[depth_] = v;
                ++depth_;
                if (depth_ < length_)
                    next_try_[depth_] = 1;
            } else if (depth_ == 0) {
                done_ = true;
            } else {
                --depth_;
                next_try_[depth_] = values_[depth_] + 1;
            }
        }
        return std::nullopt;
    }

private:
    bool coprime_with_prefix(std::uint64_t v) const {
        for (std::size_t i = 0; i < depth_; ++i)
            if (std::gcd(values_[i], v) != 1)
                return false;
        return true;
    }

    std::size_t length_;
    std::uint64_t max_;
    std::vector<std::uint64_t> values_;
    std::vector<std::uint64_t> next_try_;
    std::size_t depth_ = 0;
    bool done_ = false;
};

/// Materialized form of the stream.
inline std::vector<WeightVector> enumerate_coprime_tuples(std::size_t length,
                                                          std::uint64_t max_weight) {
    CoprimeTupleStream stream(length, max_weight);
    std::vector<WeightVector> out;
    while (auto t = stream.next())
        out.emplace_back(std::move(*t));
    return out;
}

namespace detail {

/// Runs `check` over every coprime tuple, optionally partitioned over
/// worker threads; partial results are merged in tuple order, so reports do
/// not depend on the worker count.
template <typename Check>
SearchReport run_claim(std::string claim_id, std::string range, std::size_t length,
                       std::uint64_t max_weight, unsigned jobs, Check&& check) {
    const auto start = std::chrono::steady_clock::now();
    SearchReport report;
    report.claim_id = std::move(claim_id);
    report.range = std::move(range);

    if (jobs <= 1) {
        CoprimeTupleStream stream(length, max_weight);
        while (auto t = stream.next()) {
            ++report.checked_count;
            check(WeightVector(std::move(*t)), report.violations, report.notes);
        }
    } else {
        const auto tuples = enumerate_coprime_tuples(length, max_weight);
        const std::size_t chunk = (tuples.size() + jobs - 1) / jobs;
        struct Partial {
            std::uint64_t checked = 0;
            std::vector<Violation> violations;
            std::vector<std::string> notes;
        };
        std::vector<std::future<Partial>> futures;
        for (std::size_t begin = 0; begin < tuples.size(); begin += chunk) {
            const std::size_t end = std::min(begin + chunk, tuples.size());
            futures.push_back(std::async(std::launch::async, [&, begin, end] {
                Partial p;
                for (std::size_t i = begin; i < end; ++i) {
                    ++p.checked;
                    check(tuples[i], p.violations, p.notes);
                }
                return p;
            }));
        }
        for (auto& f : futures) {
            Partial p = f.get();
            report.checked_count += p.checked;
            report.violations.insert(report.violations.end(), p.violations.begin(),
                                     p.violations.end());
            report.notes.insert(report.notes.end(), p.notes.begin(), p.notes.end());
        }
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

inline std::string weights_to_string(const std::vector<std::uint64_t>& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i)
        s += (i ? "," : "") + std::to_string(w[i]);
    s += ")";
    return s;
}

} // namespace detail

/// The expected exception families of the sum-product inequality: the only
/// pairwise-coprime 4-tuples with sum >= product are (1,1,1,t) and (1,1,2,3).
inline bool sum_product_expected_violation(const WeightVector& w) {
    std::vector<std::uint64_t> s = w.weights();
    std::sort(s.begin(), s.end());
    if (s.size() != 4)
        return false;
    if (s[0] == 1 && s[1] == 1 && s[2] == 1)
        return true;
    return s == std::vector<std::uint64_t>{1, 1, 2, 3};
}

/// Checks a_0+a_1+a_2+a_3 < a_0*a_1*a_2*a_3 over all pairwise-coprime sorted
/// 4-tuples with entries <= max_weight, listing every failure.
inline SearchReport verify_sum_product_inequality(std::uint64_t max_weight, unsigned jobs = 1) {
    if (max_weight < 3)
        throw InvalidArgument("sum-product verification needs max_weight >= 3");
    return detail::run_claim(
        "sum-product", "length=4 max_weight=" + std::to_string(max_weight), 4, max_weight, jobs,
        [](const WeightVector& w, std::vector<Violation>& violations,
           std::vector<std::string>&) {
            const Integer sum = w.canonical_weight_sum();
            const Integer prod = w.weight_product();
            if (!(sum < prod))
                violations.push_back({w.weights(), Rational(sum), Rational(prod), std::nullopt,
                                      "sum " + sum.str() + " is not below product " +
                                          prod.str()});
        });
}

/// Checks the uniform bounds on Theta over all pairwise-coprime tuples of the
/// given length: Theta <= 2n-1 always, Theta <= 3n/2-1 when some weight is at
/// least 2, and Theta = l-1+l/t exactly for weights (1,...,1,t). Tight cases
/// are recorded as notes.
inline SearchReport verify_theta_bounds(std::size_t length, std::uint64_t max_weight,
                                        unsigned jobs = 1) {
    if (length < 4)
        throw InvalidArgument("theta bounds need tuples of length >= 4");
    return detail::run_claim(
        "theta-bounds",
        "length=" + std::to_string(length) + " max_weight=" + std::to_string(max_weight),
        length, max_weight, jobs,
        [](const WeightVector& w, std::vector<Violation>& violations,
           std::vector<std::string>& notes) {
            const Rational t = theta(w).theta;
            const auto n = static_cast<std::int64_t>(w.dim());
            const Rational general(2 * n - 1);
            if (t > general)
                violations.push_back({w.weights(), t, general, std::nullopt,
                                      "Theta exceeds 2n-1"});
            else if (t == general)
                notes.push_back("Theta attains 2n-1 at " +
                                detail::weights_to_string(w.weights()));
            const bool has_large =
                std::any_of(w.weights().begin(), w.weights().end(),
                            [](std::uint64_t a) { return a >= 2; });
            if (has_large) {
                const Rational refined = Rational(Integer(3 * n), Integer(2)) - 1;
                if (t > refined)
                    violations.push_back({w.weights(), t, refined, std::nullopt,
                                          "Theta exceeds 3n/2-1 despite a weight >= 2"});
                else if (t == refined)
                    notes.push_back("Theta attains 3n/2-1 at " +
                                    detail::weights_to_string(w.weights()));
            }
            // entries are sorted non-decreasing, so (1,...,1,t) means a 1 at
            // position size-2
            if (w[w.size() - 2] == 1) {
                const std::int64_t l = n;
                const Rational exact =
                    Rational(l - 1) + Rational(Integer(l), Integer(w[w.size() - 1]));
                if (t != exact)
                    violations.push_back({w.weights(), t, exact, std::nullopt,
                                          "Theta differs from the closed form l-1+l/t"});
            }
        });
}

/// Checks boundary-curve positivity sum_{j != i} a_j < m * prod(a) for every
/// pairwise-coprime sorted 4-tuple covered by the threefold criterion and
/// every omitted index. The (1,1,1,t) family lies outside that criterion (the
/// surface table treats it separately) and is excluded, with a note per
/// skipped tuple; (1,1,1,1) and (1,1,1,2) do fail the raw inequality at m=2.
inline SearchReport verify_boundary_positivity(std::uint64_t max_weight, std::int64_t m,
                                               unsigned jobs = 1) {
    if (m < 2)
        throw InvalidArgument("boundary positivity is claimed for m >= 2");
    return detail::run_claim(
        "boundary-positivity",
        "length=4 max_weight=" + std::to_string(max_weight) + " m=" + std::to_string(m) +
            " excluding the (1,1,1,t) family",
        4, max_weight, jobs,
        [m](const WeightVector& w, std::vector<Violation>& violations,
            std::vector<std::string>& notes) {
            if (w[2] == 1) { // sorted tuples: (1,1,1,t)
                notes.push_back("outside the claim: " +
                                detail::weights_to_string(w.weights()) +
                                " is in the (1,1,1,t) family");
                return;
            }
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (!boundary_curve_positive(w, m, i)) {
                    Integer lhs = 0;
                    for (std::size_t j = 0; j < w.size(); ++j)
                        if (j != i)
                            lhs += w[j];
                    violations.push_back({w.weights(), Rational(lhs),
                                          Rational(Integer(m) * w.weight_product()), i,
                                          "canonical degree of the boundary curve omitting "
                                          "index " + std::to_string(i) + " is not positive"});
                }
            }
        });
}

} // namespace wps
