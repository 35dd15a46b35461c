#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wps/hyperbolicity.hpp"
#include "wps/search.hpp"
#include "wps/sections.hpp"
#include "wps/strata.hpp"
#include "wps/weights.hpp"

namespace wps {

using json = nlohmann::json;

enum class Format { json, text };

// ---------------------------------------------------------------------------
// JSON encoding. Arbitrary-precision integers are decimal strings; exact
// fractions are {"num": string, "den": string}; nothing is ever rendered as
// floating point. Keys are emitted sorted, so output bytes are deterministic.
// ---------------------------------------------------------------------------

inline json to_json(const Integer& n) { return n.str(); }

inline json to_json(const Rational& r) {
    return json{{"num", numerator(r).str()}, {"den", denominator(r).str()}};
}

inline Integer integer_from_json(const json& j) { return Integer(j.get<std::string>()); }

inline Rational rational_from_json(const json& j) {
    return Rational(Integer(j.at("num").get<std::string>()),
                    Integer(j.at("den").get<std::string>()));
}

inline json to_json(const ReductionStep& s) {
    json j;
    j["divisor"] = s.divisor;
    j["pivot"] = s.pivot ? json(*s.pivot) : json(nullptr);
    return j;
}

inline ReductionStep reduction_step_from_json(const json& j) {
    ReductionStep s;
    s.divisor = j.at("divisor").get<std::uint64_t>();
    if (!j.at("pivot").is_null())
        s.pivot = j.at("pivot").get<std::size_t>();
    return s;
}

inline json to_json(const StratumInfo& s) {
    json j;
    j["support"] = s.support;
    j["order"] = s.order;
    j["raw_type"] = s.raw_type;
    j["reduced_type"] = s.reduced_type;
    j["label"] = s.label();
    j["local_model"] = s.local_model();
    j["faithful"] = s.faithful;
    return j;
}

inline StratumInfo stratum_from_json(const json& j) {
    StratumInfo s;
    s.support = j.at("support").get<IndexSubset>();
    s.order = j.at("order").get<std::uint64_t>();
    s.raw_type = j.at("raw_type").get<std::vector<std::uint64_t>>();
    s.reduced_type = j.at("reduced_type").get<std::vector<std::uint64_t>>();
    s.faithful = j.at("faithful").get<bool>();
    return s;
}

inline json to_json(const HyperbolicityVerdict& v) {
    json j;
    j["status"] = to_string(v.status);
    j["regime"] = v.regime;
    j["epsilon"] = v.epsilon ? to_json(*v.epsilon) : json(nullptr);
    j["citation"] = v.citation;
    return j;
}

inline HyperbolicityVerdict verdict_from_json(const json& j) {
    HyperbolicityVerdict v;
    const auto s = j.at("status").get<std::string>();
    v.status = s == "Hyperbolic"      ? Status::Hyperbolic
               : s == "NotHyperbolic" ? Status::NotHyperbolic
                                      : Status::Unknown;
    v.regime = j.at("regime").get<std::string>();
    if (!j.at("epsilon").is_null())
        v.epsilon = rational_from_json(j.at("epsilon"));
    v.citation = j.at("citation").get<std::string>();
    return v;
}

inline json to_json(const ThetaReport& r) {
    json j;
    j["theta"] = to_json(r.theta);
    j["m_min"] = r.m_min;
    j["argmax"] = r.argmax;
    json table = json::array();
    for (const auto& [I, value] : r.per_subset)
        table.push_back(json{{"subset", I}, {"value", to_json(value)}});
    j["per_subset"] = table;
    j["exceptional_subsets"] = r.exceptional_subsets;
    j["warnings"] = r.warnings;
    return j;
}

inline ThetaReport theta_report_from_json(const json& j) {
    ThetaReport r;
    r.theta = rational_from_json(j.at("theta"));
    r.m_min = j.at("m_min").get<std::int64_t>();
    r.argmax = j.at("argmax").get<std::vector<IndexSubset>>();
    for (const auto& row : j.at("per_subset"))
        r.per_subset.emplace_back(row.at("subset").get<IndexSubset>(),
                                  rational_from_json(row.at("value")));
    r.exceptional_subsets = j.at("exceptional_subsets").get<std::vector<IndexSubset>>();
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    return r;
}

inline json to_json(const Monomial& m) {
    json j;
    j["exponents"] = m.exponents;
    j["weighted_degree"] = m.weighted_degree;
    return j;
}

inline json to_json(const CorollaryBounds& b) {
    json j;
    j["general"] = to_json(b.general);
    j["with_large_weight"] =
        b.with_large_weight ? to_json(*b.with_large_weight) : json(nullptr);
    j["exact_ones_t"] = b.exact_ones_t ? to_json(*b.exact_ones_t) : json(nullptr);
    return j;
}

inline json to_json(const NormalGenerationCertificate& c) {
    json j;
    j["success"] = c.success;
    j["k"] = to_json(c.k);
    j["max_multiple"] = c.max_multiple;
    j["monomials_checked"] = c.monomials_checked;
    j["failing_multiple"] = c.failing_multiple ? json(*c.failing_multiple) : json(nullptr);
    j["counterexample"] = c.counterexample ? to_json(*c.counterexample) : json(nullptr);
    return j;
}

inline json to_json(const DominationCertificate& c) {
    json j;
    j["success"] = c.success;
    j["k"] = to_json(c.k);
    j["multiple"] = c.multiple;
    j["scope"] = c.scope;
    j["monomials_checked"] = c.monomials_checked;
    j["failing_point"] = c.failing_point ? json(*c.failing_point) : json(nullptr);
    j["counterexample"] = c.counterexample ? to_json(*c.counterexample) : json(nullptr);
    return j;
}

inline json to_json(const Violation& v) {
    json j;
    j["weights"] = v.weights;
    j["lhs"] = to_json(v.lhs);
    j["rhs"] = to_json(v.rhs);
    j["index"] = v.index ? json(*v.index) : json(nullptr);
    j["detail"] = v.detail;
    return j;
}

/// Search reports carry timing in a separate "meta" object so that the
/// payload itself is reproducible byte for byte.
inline json to_json(const SearchReport& r, bool include_meta = true) {
    json j;
    j["claim"] = r.claim_id;
    j["range"] = r.range;
    j["checked"] = r.checked_count;
    json violations = json::array();
    for (const auto& v : r.violations)
        violations.push_back(to_json(v));
    j["violations"] = violations;
    j["notes"] = r.notes;
    j["holds"] = r.holds();
    if (include_meta)
        j["meta"] = json{{"elapsed_ms",
                          std::chrono::duration_cast<std::chrono::milliseconds>(r.elapsed)
                              .count()}};
    return j;
}

// ---------------------------------------------------------------------------
// Full analysis report.
// ---------------------------------------------------------------------------

struct AnalysisReport {
    std::vector<std::uint64_t> input_weights;
    std::optional<std::int64_t> m;
    bool well_formed_input = true;
    std::vector<ReductionStep> reduction_steps;
    std::vector<std::uint64_t> weights; // reduced, the space actually analyzed
    std::size_t dim = 0;
    Integer k;
    Integer weight_sum;
    bool isolated = false;
    std::vector<StratumInfo> singular_strata;
    std::vector<std::vector<std::uint64_t>> boundary_divisors;
    std::optional<ThetaReport> theta_report;
    std::optional<Rational> canonical_coeff;
    std::vector<HyperbolicityVerdict> verdicts;
    std::vector<std::string> warnings;
    std::vector<std::string> citations;
};

/// End-to-end composition: reduce to well-formed weights, classify the
/// singular locus, and apply every hyperbolicity criterion whose hypotheses
/// the input satisfies.
inline AnalysisReport analyze(const WeightVector& input, std::optional<std::int64_t> m) {
    if (m && *m < 1)
        throw InvalidArgument("multiple must be >= 1");
    AnalysisReport r;
    r.input_weights = input.weights();
    r.m = m;
    r.well_formed_input = input.is_well_formed();

    WellFormization wf = well_formize(input);
    const WeightVector& w = wf.weights;
    r.reduction_steps = std::move(wf.steps);
    r.weights = w.weights();
    r.dim = w.dim();
    r.k = w.picard_generator_degree();
    r.weight_sum = w.canonical_weight_sum();
    r.isolated = w.has_isolated_singularities();
    r.singular_strata = singular_locus(w);
    if (w.size() >= 3)
        for (const auto& d : boundary_divisors(w))
            r.boundary_divisors.push_back(d.sub_weights.weights());

    if (!r.isolated) {
        r.warnings.push_back("weights are not pairwise coprime; the hyperbolicity criteria "
                             "require isolated singularities and were not applied");
        return r;
    }

    if (w.dim() >= 3) {
        r.theta_report = theta(w);
        for (const auto& warning : r.theta_report->warnings)
            r.warnings.push_back(warning);
    }
    if (m) {
        r.canonical_coeff = canonical_coefficient(w, *m);
        if (w.dim() >= 3) {
            r.verdicts.push_back(outside_boundary_verdict(w, *m));
            r.citations.push_back("outside-boundary-criterion");
        }
        HyperbolicityVerdict full =
            w.dim() >= 4 ? theta_verdict(w, *m, *r.theta_report) : hyperbolicity_verdict(w, *m);
        if (full.regime == "threefold-table")
            r.citations.push_back("threefold-classification");
        else
            r.citations.push_back("stratum-threshold-criterion");
        const bool has_theta_epsilon = full.epsilon.has_value() && full.regime == "full";
        r.verdicts.push_back(std::move(full));
        if (has_theta_epsilon)
            r.warnings.push_back(
                "epsilon convention: the reported constant is the margin m - Theta; the "
                "per-subset thresholds Theta_I themselves are listed in the theta table");
    }
    std::sort(r.citations.begin(), r.citations.end());
    r.citations.erase(std::unique(r.citations.begin(), r.citations.end()), r.citations.end());
    return r;
}

inline json to_json(const AnalysisReport& r) {
    json j;
    j["input_weights"] = r.input_weights;
    j["m"] = r.m ? json(*r.m) : json(nullptr);
    j["well_formed"] = r.well_formed_input;
    json steps = json::array();
    for (const auto& s : r.reduction_steps)
        steps.push_back(to_json(s));
    j["reduction_steps"] = steps;
    j["reduced_weights"] = r.weights;
    j["dim"] = r.dim;
    j["k"] = to_json(r.k);
    j["weight_sum"] = to_json(r.weight_sum);
    j["isolated"] = r.isolated;
    json strata = json::array();
    for (const auto& s : r.singular_strata)
        strata.push_back(to_json(s));
    j["singular_strata"] = strata;
    j["boundary_divisors"] = r.boundary_divisors;
    j["theta_report"] = r.theta_report ? to_json(*r.theta_report) : json(nullptr);
    j["canonical_coefficient"] = r.canonical_coeff ? to_json(*r.canonical_coeff) : json(nullptr);
    json verdicts = json::array();
    for (const auto& v : r.verdicts)
        verdicts.push_back(to_json(v));
    j["verdicts"] = verdicts;
    j["warnings"] = r.warnings;
    j["citations"] = r.citations;
    return j;
}

inline AnalysisReport analysis_report_from_json(const json& j) {
    AnalysisReport r;
    r.input_weights = j.at("input_weights").get<std::vector<std::uint64_t>>();
    if (!j.at("m").is_null())
        r.m = j.at("m").get<std::int64_t>();
    r.well_formed_input = j.at("well_formed").get<bool>();
    for (const auto& s : j.at("reduction_steps"))
        r.reduction_steps.push_back(reduction_step_from_json(s));
    r.weights = j.at("reduced_weights").get<std::vector<std::uint64_t>>();
    r.dim = j.at("dim").get<std::size_t>();
    r.k = integer_from_json(j.at("k"));
    r.weight_sum = integer_from_json(j.at("weight_sum"));
    r.isolated = j.at("isolated").get<bool>();
    for (const auto& s : j.at("singular_strata"))
        r.singular_strata.push_back(stratum_from_json(s));
    r.boundary_divisors =
        j.at("boundary_divisors").get<std::vector<std::vector<std::uint64_t>>>();
    if (!j.at("theta_report").is_null())
        r.theta_report = theta_report_from_json(j.at("theta_report"));
    if (!j.at("canonical_coefficient").is_null())
        r.canonical_coeff = rational_from_json(j.at("canonical_coefficient"));
    for (const auto& v : j.at("verdicts"))
        r.verdicts.push_back(verdict_from_json(v));
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    r.citations = j.at("citations").get<std::vector<std::string>>();
    return r;
}

// ---------------------------------------------------------------------------
// Rendering.
// ---------------------------------------------------------------------------

namespace detail {

inline std::string join_u64(const std::vector<std::uint64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

inline std::string exact_with_approx(const Rational& r) {
    if (denominator(r) == 1)
        return to_string(r);
    return to_string(r) + " (~ " + decimal_approx(r) + ")";
}

inline void kv(std::ostringstream& out, const std::string& key, const std::string& value) {
    out << "  " << key;
    for (std::size_t i = key.size(); i < 22; ++i)
        out << ' ';
    out << value << '\n';
}

} // namespace detail

inline std::string render_text(const ThetaReport& r) {
    std::ostringstream out;
    detail::kv(out, "theta:", detail::exact_with_approx(r.theta));
    detail::kv(out, "m_min:", std::to_string(r.m_min));
    std::string arg;
    for (std::size_t i = 0; i < r.argmax.size(); ++i)
        arg += (i ? " " : "") + detail::subset_to_string(r.argmax[i]);
    detail::kv(out, "argmax:", arg);
    out << "  per-subset thresholds (|I| >= 4):\n";
    for (const auto& [I, value] : r.per_subset)
        out << "    I=" << detail::subset_to_string(I) << "  " << detail::exact_with_approx(value)
            << '\n';
    for (const auto& warning : r.warnings)
        out << "  warning: " << warning << '\n';
    return out.str();
}

inline std::string render_text(const HyperbolicityVerdict& v) {
    std::ostringstream out;
    out << "  [" << v.regime << "] " << to_string(v.status);
    if (v.epsilon)
        out << "  epsilon = " << detail::exact_with_approx(*v.epsilon);
    out << "\n    criterion: " << v.citation << '\n';
    return out.str();
}

inline std::string render_text(const AnalysisReport& r) {
    std::ostringstream out;
    out << "weighted projective space analysis\n";
    detail::kv(out, "input weights:", "(" + detail::join_u64(r.input_weights) + ")");
    if (r.m)
        detail::kv(out, "multiple m:", std::to_string(*r.m));
    detail::kv(out, "well-formed input:", r.well_formed_input ? "yes" : "no");
    for (const auto& s : r.reduction_steps) {
        if (s.pivot)
            detail::kv(out, "reduction:",
                       "divided all weights except index " + std::to_string(*s.pivot) + " by " +
                           std::to_string(s.divisor));
        else
            detail::kv(out, "reduction:", "divided every weight by " + std::to_string(s.divisor));
    }
    detail::kv(out, "weights:", "(" + detail::join_u64(r.weights) + ")");
    detail::kv(out, "dimension:", std::to_string(r.dim));
    detail::kv(out, "picard degree k:", to_string(r.k));
    detail::kv(out, "weight sum:", to_string(r.weight_sum));
    detail::kv(out, "isolated:", r.isolated ? "yes" : "no");
    if (r.singular_strata.empty()) {
        detail::kv(out, "singular locus:", "empty (the space is smooth)");
    } else {
        out << "  singular strata:\n";
        for (const auto& s : r.singular_strata)
            out << "    I=" << detail::subset_to_string(s.support) << "  " << s.label()
                << "  locally " << s.local_model()
                << (s.faithful ? "" : "  (non-faithful action)") << '\n';
    }
    if (!r.boundary_divisors.empty()) {
        out << "  boundary divisors:\n";
        for (std::size_t i = 0; i < r.boundary_divisors.size(); ++i)
            out << "    D_" << i << " = P(" << detail::join_u64(r.boundary_divisors[i]) << ")\n";
    }
    if (r.canonical_coeff)
        detail::kv(out, "K_X coefficient:", detail::exact_with_approx(*r.canonical_coeff));
    if (r.theta_report) {
        out << "theta report\n";
        out << render_text(*r.theta_report);
    }
    if (!r.verdicts.empty()) {
        out << "verdicts\n";
        for (const auto& v : r.verdicts)
            out << render_text(v);
    }
    for (const auto& warning : r.warnings)
        out << "warning: " << warning << '\n';
    if (!r.citations.empty()) {
        out << "criteria used\n";
        for (const auto& c : r.citations)
            out << "  - " << c << '\n';
    }
    return out.str();
}

/// Stable byte stream for an analysis report. JSON output carries the
/// versioned "schema" field; text output appends decimal approximations,
/// clearly marked, to exact values.
inline std::string render(const AnalysisReport& r, Format format) {
    if (format == Format::json) {
        json j = to_json(r);
        j["schema"] = 1;
        return j.dump(2) + "\n";
    }
    return render_text(r);
}

inline std::string render_text(const SearchReport& r, bool expected_known,
                               std::size_t unexpected_count) {
    std::ostringstream out;
    out << "verification: " << r.claim_id << '\n';
    detail::kv(out, "range:", r.range);
    detail::kv(out, "tuples checked:", std::to_string(r.checked_count));
    detail::kv(out, "violations:", std::to_string(r.violations.size()));
    if (expected_known)
        detail::kv(out, "unexpected:", std::to_string(unexpected_count));
    for (const auto& v : r.violations) {
        out << "    (" << detail::join_u64(v.weights) << ")";
        if (v.index)
            out << " i=" << *v.index;
        out << "  " << v.detail << " [" << to_string(v.lhs) << " vs " << to_string(v.rhs)
            << "]\n";
    }
    for (const auto& note : r.notes)
        out << "  note: " << note << '\n';
    out << "  elapsed: "
        << std::chrono::duration_cast<std::chrono::milliseconds>(r.elapsed).count() << " ms\n";
    return out.str();
}

} // namespace wps
