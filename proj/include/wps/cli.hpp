#pragma once

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wps/report.hpp"

namespace wps::cli {

/// Exit code of a verification run: 2 iff violations outside the expected
/// exception set were found.
inline int verify_exit_code(const SearchReport& report) {
    for (const auto& v : report.violations) {
        if (report.claim_id == "sum-product" &&
            sum_product_expected_violation(WeightVector(v.weights)))
            continue;
        return 2;
    }
    return 0;
}

namespace detail {

inline Format parse_format(const std::string& name) {
    return name == "json" ? Format::json : Format::text;
}

inline json search_report_json(const SearchReport& report) {
    json j = to_json(report);
    j["schema"] = 1;
    if (report.claim_id == "sum-product") {
        std::size_t unexpected = 0;
        for (auto& row : j["violations"]) {
            const bool expected = sum_product_expected_violation(
                WeightVector(row.at("weights").get<std::vector<std::uint64_t>>()));
            row["expected"] = expected;
            if (!expected)
                ++unexpected;
        }
        j["unexpected_violations"] = unexpected;
    } else {
        j["unexpected_violations"] = report.violations.size();
    }
    return j;
}

} // namespace detail

/// Dispatches the command line. Returns 0 on success, 1 on invalid input,
/// 2 when a verify run finds violations outside the expected exception set.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
    CLI::App app{"weighted projective space calculator: singularities, section spaces, "
                 "and algebraic-hyperbolicity thresholds"};
    app.require_subcommand(1);

    std::vector<long long> weights;
    std::string format = "text";
    std::int64_t m = 0;
    std::int64_t max_m = 3;
    std::uint64_t max_weight = 0;
    unsigned jobs = 1;
    std::int64_t max_degree = -1;

    const auto add_weights = [&](CLI::App* cmd) {
        cmd->add_option("--weights", weights, "weights a_0,...,a_n (comma or space separated)")
            ->required()
            ->delimiter(',');
    };
    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "text"}))
            ->envname("WPS_FORMAT");
    };

    auto* analyze_cmd = app.add_subcommand("analyze", "full report for one space");
    add_weights(analyze_cmd);
    add_format(analyze_cmd);
    auto* analyze_m = analyze_cmd->add_option("--m", m, "multiple of the ample generator");

    auto* theta_cmd = app.add_subcommand("theta", "per-subset thresholds and their maximum");
    add_weights(theta_cmd);
    add_format(theta_cmd);

    auto* strata_cmd = app.add_subcommand("strata", "toric strata and singularity types");
    add_weights(strata_cmd);
    add_format(strata_cmd);

    auto* hilbert_cmd =
        app.add_subcommand("hilbert", "section space dimensions h0(d) up to a degree bound");
    add_weights(hilbert_cmd);
    add_format(hilbert_cmd);
    hilbert_cmd->add_option("--max", max_degree, "largest degree to tabulate (default 3k)");

    auto* normgen_cmd =
        app.add_subcommand("normgen", "certify degree-1 generation of the section ring of O(k)");
    add_weights(normgen_cmd);
    add_format(normgen_cmd);
    normgen_cmd->add_option("--max-m", max_m, "largest multiple to certify (default 3)")
        ->check(CLI::Range(std::int64_t{2}, std::int64_t{64}));

    auto* domination_cmd = app.add_subcommand(
        "domination", "certify section domination of O(mk) by O(k) at torus-fixed points");
    add_weights(domination_cmd);
    add_format(domination_cmd);
    domination_cmd->add_option("--m", m, "multiple of the ample generator")->required();

    auto* classify_cmd =
        app.add_subcommand("classify3", "surface classification for a weighted 3-fold");
    add_weights(classify_cmd);
    add_format(classify_cmd);
    classify_cmd->add_option("--m", m, "multiple of the ample generator")->required();

    auto* verify_cmd =
        app.add_subcommand("verify", "exhaustively check a supporting inequality on a range");
    std::string claim;
    verify_cmd
        ->add_option("claim", claim,
                     "one of: sum-product, theta-bounds, boundary-positivity")
        ->required()
        ->check(CLI::IsMember({"sum-product", "theta-bounds", "boundary-positivity"}));
    add_format(verify_cmd);
    auto* verify_max = verify_cmd->add_option("--max", max_weight, "largest weight to enumerate");
    auto* verify_m = verify_cmd->add_option("--m", m, "multiple (boundary-positivity only)");
    verify_cmd->add_option("--jobs", jobs, "worker count")->check(CLI::Range(1u, 256u));

    try {
        std::vector<std::string> argv_copy = args;
        std::reverse(argv_copy.begin(), argv_copy.end());
        app.parse(argv_copy);
    } catch (const CLI::ParseError& e) {
        // help requests exit 0; anything else is invalid input
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        const Format fmt = detail::parse_format(format);

        if (app.got_subcommand(analyze_cmd)) {
            const WeightVector w = WeightVector::validate(weights);
            const std::optional<std::int64_t> multiple =
                analyze_m->count() ? std::optional<std::int64_t>(m) : std::nullopt;
            out << render(analyze(w, multiple), fmt);
            return 0;
        }

        if (app.got_subcommand(theta_cmd)) {
            const WeightVector w = well_formize(WeightVector::validate(weights)).weights;
            const ThetaReport report = theta(w);
            const CorollaryBounds bounds = corollary_bound(w);
            if (fmt == Format::json) {
                json j = to_json(report);
                j["schema"] = 1;
                j["weights"] = w.weights();
                j["corollary_bounds"] = to_json(bounds);
                out << j.dump(2) << '\n';
            } else {
                out << "theta report for P(" << wps::detail::join_u64(w.weights()) << ")\n";
                out << render_text(report);
                out << "  uniform bound 2n-1:   " << to_string(bounds.general) << '\n';
                if (bounds.with_large_weight)
                    out << "  bound 3n/2-1:         "
                        << wps::detail::exact_with_approx(*bounds.with_large_weight) << '\n';
                if (bounds.exact_ones_t)
                    out << "  closed form l-1+l/t:  "
                        << wps::detail::exact_with_approx(*bounds.exact_ones_t) << '\n';
            }
            return 0;
        }

        if (app.got_subcommand(strata_cmd)) {
            const WeightVector w = well_formize(WeightVector::validate(weights)).weights;
            const auto strata = enumerate_strata(w);
            if (fmt == Format::json) {
                json j;
                j["schema"] = 1;
                j["weights"] = w.weights();
                json all = json::array();
                for (const auto& s : strata)
                    all.push_back(to_json(s));
                j["strata"] = all;
                json singular = json::array();
                for (const auto& s : strata)
                    if (s.singular())
                        singular.push_back(to_json(s));
                j["singular_strata"] = singular;
                if (w.size() >= 3) {
                    json divisors = json::array();
                    for (const auto& d : boundary_divisors(w))
                        divisors.push_back(d.sub_weights.weights());
                    j["boundary_divisors"] = divisors;
                }
                out << j.dump(2) << '\n';
            } else {
                out << "strata of P(" << wps::detail::join_u64(w.weights()) << ")\n";
                for (const auto& s : strata)
                    out << "  I=" << wps::detail::subset_to_string(s.support) << "  g="
                        << s.order << (s.singular() ? "  " + s.label() : "  smooth") << '\n';
            }
            return 0;
        }

        if (app.got_subcommand(hilbert_cmd)) {
            const WeightVector w = WeightVector::validate(weights);
            std::int64_t top = max_degree;
            if (top < 0) {
                // hilbert tabulates the given grading, so take the lcm of the
                // weights as entered rather than of the reduced space
                Integer k = 1;
                for (std::uint64_t a : w.weights())
                    k = boost::multiprecision::lcm(k, Integer(a));
                const Integer k3 = k * 3;
                if (k3 > 4096)
                    throw InvalidArgument("default degree bound 3k = " + k3.str() +
                                          " is too large; pass --max explicitly");
                top = k3.convert_to<std::int64_t>();
            }
            if (fmt == Format::json) {
                json j;
                j["schema"] = 1;
                j["weights"] = w.weights();
                j["max_degree"] = top;
                json dims = json::array();
                for (std::int64_t d = 0; d <= top; ++d)
                    dims.push_back(json{{"d", d}, {"h0", to_json(h0_dimension(w, d))}});
                j["dimensions"] = dims;
                out << j.dump(2) << '\n';
            } else {
                out << "h0(P(" << wps::detail::join_u64(w.weights()) << "), O(d))\n";
                for (std::int64_t d = 0; d <= top; ++d)
                    out << "  d=" << d << "  " << to_string(h0_dimension(w, d)) << '\n';
            }
            return 0;
        }

        if (app.got_subcommand(normgen_cmd)) {
            const WeightVector w = well_formize(WeightVector::validate(weights)).weights;
            const Integer k = w.picard_generator_degree();
            const auto cert = is_normally_generated_upto(w, k, max_m);
            if (fmt == Format::json) {
                json j = to_json(cert);
                j["schema"] = 1;
                j["weights"] = w.weights();
                out << j.dump(2) << '\n';
            } else {
                out << "normal generation of O(" << to_string(k) << ") on P("
                    << wps::detail::join_u64(w.weights()) << ") up to multiple " << max_m << ": "
                    << (cert.success ? "certified" : "FAILED") << '\n';
                if (!cert.success)
                    out << "  counterexample at m=" << *cert.failing_multiple << ": "
                        << cert.counterexample->to_string() << '\n';
                out << "  monomials checked: " << cert.monomials_checked << '\n';
            }
            return 0;
        }

        if (app.got_subcommand(domination_cmd)) {
            const WeightVector w = well_formize(WeightVector::validate(weights)).weights;
            const auto cert = check_section_domination_at_fixed_points(w, m);
            if (fmt == Format::json) {
                json j = to_json(cert);
                j["schema"] = 1;
                j["weights"] = w.weights();
                out << j.dump(2) << '\n';
            } else {
                out << "section domination of O(" << m << "k) by O(k) on P("
                    << wps::detail::join_u64(w.weights()) << ") (" << cert.scope
                    << "): " << (cert.success ? "certified" : "FAILED") << '\n';
                if (!cert.success)
                    out << "  counterexample at fixed point " << *cert.failing_point << ": "
                        << cert.counterexample->to_string() << '\n';
                out << "  monomials checked: " << cert.monomials_checked << '\n';
            }
            return 0;
        }

        if (app.got_subcommand(classify_cmd)) {
            const WeightVector w = WeightVector::validate(weights);
            const auto verdict = classify_threefold(w, m);
            if (fmt == Format::json) {
                json j = to_json(verdict);
                j["schema"] = 1;
                j["weights"] = w.weights();
                j["m"] = m;
                out << j.dump(2) << '\n';
            } else {
                out << "P(" << wps::detail::join_u64(w.weights()) << "), m=" << m << ":\n"
                    << render_text(verdict);
            }
            return 0;
        }

        if (app.got_subcommand(verify_cmd)) {
            SearchReport report;
            if (claim == "sum-product") {
                report = verify_sum_product_inequality(verify_max->count() ? max_weight : 30,
                                                       jobs);
            } else if (claim == "theta-bounds") {
                const std::uint64_t cap = verify_max->count() ? max_weight : 15;
                report = verify_theta_bounds(4, cap, jobs);
                for (std::size_t len : {std::size_t{5}, std::size_t{6}}) {
                    SearchReport part = verify_theta_bounds(len, cap, jobs);
                    report.range += "; " + part.range;
                    report.checked_count += part.checked_count;
                    report.violations.insert(report.violations.end(), part.violations.begin(),
                                             part.violations.end());
                    report.notes.insert(report.notes.end(), part.notes.begin(),
                                        part.notes.end());
                    report.elapsed += part.elapsed;
                }
            } else {
                report = verify_boundary_positivity(verify_max->count() ? max_weight : 20,
                                                    verify_m->count() ? m : 2, jobs);
            }
            const int code = verify_exit_code(report);
            if (fmt == Format::json) {
                out << detail::search_report_json(report).dump(2) << '\n';
            } else {
                std::size_t unexpected = 0;
                for (const auto& v : report.violations)
                    if (!(report.claim_id == "sum-product" &&
                          sum_product_expected_violation(WeightVector(v.weights))))
                        ++unexpected;
                out << render_text(report, true, unexpected);
            }
            return code;
        }
    } catch (const Error& e) {
        err << "error: " << e.name() << ": " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

} // namespace wps::cli
