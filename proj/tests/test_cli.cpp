#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <sstream>

#include "wps/cli.hpp"
#include "wps/wps.hpp"

using namespace wps;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("analyze end to end", "[cli]") {
    const auto r = run_cli({"analyze", "--weights", "1,1,2,3,5", "--m", "3", "--format", "json"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("theta_report").at("theta") == json({{"num", "12"}, {"den", "5"}}));
    CHECK(j.at("verdicts")[1].at("status") == "Hyperbolic");
    CHECK(j.at("verdicts")[1].at("epsilon") == json({{"num", "3"}, {"den", "5"}}));
}

TEST_CASE("weights accept spaces as well as commas", "[cli]") {
    const auto commas = run_cli({"analyze", "--weights", "2,2,3", "--format", "json"});
    const auto spaces = run_cli({"analyze", "--weights", "2", "2", "3", "--format", "json"});
    REQUIRE(commas.code == 0);
    REQUIRE(spaces.code == 0);
    CHECK(commas.out == spaces.out);
    const json j = json::parse(commas.out);
    CHECK(j.at("reduced_weights") == json({1, 1, 3}));
    CHECK(j.at("well_formed") == false);
}

TEST_CASE("classify3 reports the open case", "[cli]") {
    const auto r = run_cli({"classify3", "--weights", "1,1,2,3", "--m", "2", "--format", "json"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("status") == "Unknown");
    CHECK(j.at("citation").get<std::string>().find("open case") != std::string::npos);
}

TEST_CASE("theta subcommand", "[cli]") {
    const auto r = run_cli({"theta", "--weights", "1,1,1,1,2", "--format", "json"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("theta") == json({{"num", "5"}, {"den", "1"}}));
    CHECK(j.at("m_min") == 6);
    CHECK(j.at("corollary_bounds").at("general") == "7");
    CHECK(j.at("corollary_bounds").at("with_large_weight") ==
          json({{"num", "5"}, {"den", "1"}}));
    CHECK(j.at("corollary_bounds").at("exact_ones_t") == json({{"num", "5"}, {"den", "1"}}));

    const auto tail = run_cli({"theta", "--weights", "1,1,1,1,7", "--format", "json"});
    REQUIRE(tail.code == 0);
    CHECK(json::parse(tail.out).at("corollary_bounds").at("exact_ones_t") ==
          json({{"num", "25"}, {"den", "7"}}));
}

TEST_CASE("strata subcommand", "[cli]") {
    const auto r = run_cli({"strata", "--weights", "1,1,2,4", "--format", "json"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("strata").size() == 15);
    CHECK(j.at("singular_strata").size() == 3);
    CHECK(j.at("boundary_divisors").size() == 4);
}

TEST_CASE("hilbert subcommand", "[cli]") {
    const auto r = run_cli({"hilbert", "--weights", "2,3", "--max", "6", "--format", "json"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    const std::vector<std::string> expected = {"1", "0", "1", "1", "1", "1", "2"};
    REQUIRE(j.at("dimensions").size() == expected.size());
    for (std::size_t d = 0; d < expected.size(); ++d)
        CHECK(j.at("dimensions")[d].at("h0") == expected[d]);
}

TEST_CASE("normgen and domination subcommands", "[cli]") {
    const auto n = run_cli({"normgen", "--weights", "1,1,2,3", "--max-m", "3", "--format",
                            "json"});
    REQUIRE(n.code == 0);
    CHECK(json::parse(n.out).at("success") == true);

    const auto d = run_cli({"domination", "--weights", "1,1,2,3", "--m", "2", "--format",
                            "json"});
    REQUIRE(d.code == 0);
    CHECK(json::parse(d.out).at("success") == true);
}

TEST_CASE("verify sum-product exits 0 with exactly the expected families", "[cli]") {
    const auto r = run_cli({"verify", "sum-product", "--max", "30", "--format", "json"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("violations").size() == 31); // (1,1,1,t) for t <= 30 plus (1,1,2,3)
    CHECK(j.at("unexpected_violations") == 0);
    for (const auto& v : j.at("violations"))
        CHECK(v.at("expected") == true);
}

TEST_CASE("verify theta-bounds and boundary-positivity exit 0", "[cli]") {
    const auto t = run_cli({"verify", "theta-bounds", "--max", "8", "--format", "json"});
    REQUIRE(t.code == 0);
    CHECK(json::parse(t.out).at("violations").size() == 0);

    const auto b =
        run_cli({"verify", "boundary-positivity", "--max", "12", "--m", "2", "--jobs", "2"});
    REQUIRE(b.code == 0);
    CHECK(b.out.find("outside the claim") != std::string::npos); // excluded family noted

    const auto bad_m = run_cli({"verify", "boundary-positivity", "--m", "1"});
    CHECK(bad_m.code == 1);
    CHECK(bad_m.err.find("InvalidArgument") != std::string::npos);
}

TEST_CASE("hilbert default degree bound is 3k", "[cli]") {
    const auto r = run_cli({"hilbert", "--weights", "2,3", "--format", "json"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("max_degree") == 18); // k = lcm(2,3) = 6
    CHECK(j.at("dimensions").size() == 19);
}

TEST_CASE("verify exit code 2 on unexpected violations", "[cli]") {
    SearchReport fabricated;
    fabricated.claim_id = "theta-bounds";
    fabricated.violations.push_back(
        {{1, 2, 3, 5}, Rational(9), Rational(7), std::nullopt, "fabricated"});
    CHECK(cli::verify_exit_code(fabricated) == 2);

    SearchReport expected_only;
    expected_only.claim_id = "sum-product";
    expected_only.violations.push_back(
        {{1, 1, 1, 7}, Rational(10), Rational(7), std::nullopt, "sum >= product"});
    CHECK(cli::verify_exit_code(expected_only) == 0);

    SearchReport unexpected;
    unexpected.claim_id = "sum-product";
    unexpected.violations.push_back(
        {{1, 2, 3, 5}, Rational(11), Rational(30), std::nullopt, "fabricated"});
    CHECK(cli::verify_exit_code(unexpected) == 2);
}

TEST_CASE("invalid input exits 1 with the error name on stderr", "[cli]") {
    const auto bad_weight = run_cli({"analyze", "--weights", "1,0,2"});
    CHECK(bad_weight.code == 1);
    CHECK(bad_weight.err.find("NonPositiveWeight") != std::string::npos);

    const auto short_input = run_cli({"theta", "--weights", "7"});
    CHECK(short_input.code == 1);
    CHECK(short_input.err.find("EmptyInput") != std::string::npos);

    const auto not_isolated = run_cli({"theta", "--weights", "1,1,2,4"});
    CHECK(not_isolated.code == 1);
    CHECK(not_isolated.err.find("NotIsolated") != std::string::npos);

    const auto missing = run_cli({"analyze"});
    CHECK(missing.code == 1);

    const auto unknown_claim = run_cli({"verify", "nonsense"});
    CHECK(unknown_claim.code == 1);

    const auto not_numeric = run_cli({"analyze", "--weights", "1,x,2"});
    CHECK(not_numeric.code == 1);
}

TEST_CASE("help exits 0", "[cli]") {
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({"analyze", "--help"}).code == 0);
}

TEST_CASE("environment variable sets the default format", "[cli]") {
    setenv("WPS_FORMAT", "json", 1);
    const auto r = run_cli({"theta", "--weights", "1,1,2,3,5"});
    unsetenv("WPS_FORMAT");
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out); // parses iff json was emitted
    CHECK(j.at("m_min") == 3);
}

TEST_CASE("json output is byte-identical across runs", "[cli]") {
    const std::vector<std::string> args = {"analyze", "--weights", "1,1,2,3,5",
                                           "--m",     "3",         "--format", "json"};
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    CHECK(a.out == b.out);
}
