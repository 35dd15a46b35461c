#include <catch2/catch_amalgamated.hpp>

#include "oracle_helpers.hpp"
#include "wps/wps.hpp"

using namespace wps;

namespace {

// Isomorphic spaces have matching section rings at their respective Picard
// generator degrees: h0 at d*lcm(original) must equal h0 at d*lcm(reduced).
void check_reduction_preserves_sections(const WeightVector& original,
                                        const WeightVector& reduced, int steps = 10) {
    const Integer k1 = oracle::lcm_all(original.weights());
    const Integer k2 = oracle::lcm_all(reduced.weights());
    for (int d = 0; d <= steps; ++d) {
        const auto d1 = (Integer(d) * k1).convert_to<std::int64_t>();
        const auto d2 = (Integer(d) * k2).convert_to<std::int64_t>();
        REQUIRE(h0_dimension(original, d1) == h0_dimension(reduced, d2));
    }
}

} // namespace

TEST_CASE("exact rational helpers", "[weights]") {
    CHECK(floor(Rational(Integer(12), Integer(5))) == 2);
    CHECK(floor(Rational(Integer(-1), Integer(6))) == -1);
    CHECK(floor(Rational(Integer(-12), Integer(5))) == -3);
    CHECK(floor(Rational(7)) == 7);
    CHECK(strict_ceil(Rational(7)) == 8);
    CHECK(strict_ceil(Rational(Integer(12), Integer(5))) == 3);
    CHECK(to_string(Rational(Integer(12), Integer(5))) == "12/5");
    CHECK(to_string(Rational(3)) == "3");
    CHECK(decimal_approx(Rational(Integer(12), Integer(5))) == "2.4");
    // canonical form: lowest terms, sign on the numerator; the backend
    // rejects negative denominators outright
    const Rational r(Integer(-4), Integer(6));
    CHECK(numerator(r) == -2);
    CHECK(denominator(r) == 3);
    REQUIRE_THROWS(Rational(Integer(4), Integer(-6)));
}

TEST_CASE("validate builds weight vectors from positive entries", "[weights]") {
    const auto w = WeightVector::validate({1, 1, 2, 3});
    CHECK(w.weights() == std::vector<std::uint64_t>{1, 1, 2, 3});
    CHECK(w.dim() == 3);
    CHECK(w.size() == 4);
}

TEST_CASE("validate rejects bad input", "[weights]") {
    REQUIRE_THROWS_AS(WeightVector::validate({1, 0, 2}), NonPositiveWeight);
    try {
        WeightVector::validate({1, 0, 2});
        FAIL("expected NonPositiveWeight");
    } catch (const NonPositiveWeight& e) {
        CHECK(e.index == 1);
    }
    REQUIRE_THROWS_AS(WeightVector::validate({-3, 1}), NonPositiveWeight);
    REQUIRE_THROWS_AS(WeightVector::validate({7}), EmptyInput);
    REQUIRE_THROWS_AS(WeightVector::validate(std::initializer_list<long long>{}), EmptyInput);
}

TEST_CASE("gcd_excluding", "[weights]") {
    CHECK(WeightVector::validate({1, 2, 4}).gcd_excluding(0) == 2);
    CHECK(WeightVector::validate({1, 1, 2, 3}).gcd_excluding(3) == 1);
    CHECK(WeightVector::validate({2, 2, 3}).gcd_excluding(2) == 2);
    REQUIRE_THROWS_AS(WeightVector::validate({1, 2}).gcd_excluding(2), IndexOutOfRange);
}

TEST_CASE("gcd_excluding is permutation-equivariant", "[weights][property]") {
    oracle::Rng rng(101);
    for (int it = 0; it < 200; ++it) {
        const auto raw = oracle::random_weights(rng, 2, 6, 30);
        const WeightVector w{raw};
        const auto perm = oracle::random_permutation(rng, raw.size());
        std::vector<std::uint64_t> shuffled(raw.size());
        for (std::size_t i = 0; i < raw.size(); ++i)
            shuffled[i] = raw[perm[i]];
        const WeightVector v{shuffled};
        for (std::size_t i = 0; i < raw.size(); ++i)
            REQUIRE(v.gcd_excluding(i) == w.gcd_excluding(perm[i]));
    }
}

TEST_CASE("is_well_formed", "[weights]") {
    CHECK(WeightVector::validate({1, 1, 2, 3}).is_well_formed());
    CHECK_FALSE(WeightVector::validate({2, 2, 3}).is_well_formed());
    CHECK_FALSE(WeightVector::validate({1, 2, 4}).is_well_formed());
}

TEST_CASE("well_formize on already well-formed input", "[weights]") {
    const auto r = well_formize(WeightVector::validate({1, 1, 3}));
    CHECK(r.weights == WeightVector::validate({1, 1, 3}));
    CHECK(r.steps.empty());
}

TEST_CASE("well_formize single-step reductions", "[weights]") {
    const auto r = well_formize(WeightVector::validate({2, 2, 3}));
    CHECK(r.weights == WeightVector::validate({1, 1, 3}));
    REQUIRE(r.steps.size() == 1);
    CHECK(r.steps[0] == ReductionStep{2, 2});
    check_reduction_preserves_sections(WeightVector::validate({2, 2, 3}), r.weights);

    const auto s = well_formize(WeightVector::validate({1, 2, 2}));
    CHECK(s.weights == WeightVector::validate({1, 1, 1}));
    REQUIRE(s.steps.size() == 1);
    CHECK(s.steps[0] == ReductionStep{0, 2});
    check_reduction_preserves_sections(WeightVector::validate({1, 2, 2}), s.weights);
}

TEST_CASE("well_formize divides out a global common factor first", "[weights]") {
    const auto r = well_formize(WeightVector::validate({2, 2, 2}));
    CHECK(r.weights == WeightVector::validate({1, 1, 1}));
    REQUIRE(!r.steps.empty());
    CHECK(r.steps[0] == ReductionStep{std::nullopt, 2});
    check_reduction_preserves_sections(WeightVector::validate({2, 2, 2}), r.weights);

    const auto s = well_formize(WeightVector::validate({6, 10, 15}));
    CHECK(s.weights == WeightVector::validate({1, 1, 1}));
    check_reduction_preserves_sections(WeightVector::validate({6, 10, 15}), s.weights);
}

TEST_CASE("well_formize cascades through several pivots", "[weights]") {
    // each weight is the product of three of {2,3,5,7}; the space is a
    // disguised projective 3-space
    const auto input = WeightVector::validate({30, 42, 70, 105});
    const auto r = well_formize(input);
    CHECK(r.weights == WeightVector::validate({1, 1, 1, 1}));
    REQUIRE(r.steps.size() == 4);
    CHECK(r.steps[0] == ReductionStep{0, 7});
    CHECK(r.steps[1] == ReductionStep{1, 5});
    CHECK(r.steps[2] == ReductionStep{2, 3});
    CHECK(r.steps[3] == ReductionStep{3, 2});
    // sections at the respective generator degrees match: lcm(input) = 210
    CHECK(h0_dimension(input, 0) == 1);
    CHECK(h0_dimension(input, 210) == 4);
    CHECK(h0_dimension(input, 420) == 10);
    CHECK(h0_dimension(input, 630) == h0_dimension(r.weights, 3));
}

TEST_CASE("well_formize is idempotent and produces well-formed output",
          "[weights][property]") {
    oracle::Rng rng(202);
    for (int it = 0; it < 300; ++it) {
        const WeightVector w{oracle::random_weights(rng, 2, 6, 12)};
        const auto once = well_formize(w);
        CHECK(once.weights.is_well_formed());
        const auto twice = well_formize(once.weights);
        CHECK(twice.weights == once.weights);
        CHECK(twice.steps.empty());
        CHECK(once.weights.weight_product() <= w.weight_product());
        if (oracle::lcm_all(w.weights()) <= 40)
            check_reduction_preserves_sections(w, once.weights, 6);
    }
}

TEST_CASE("has_isolated_singularities", "[weights]") {
    CHECK(WeightVector::validate({1, 1, 2, 3}).has_isolated_singularities());
    CHECK_FALSE(WeightVector::validate({1, 2, 3, 4}).has_isolated_singularities());
    REQUIRE_THROWS_AS(WeightVector::validate({2, 2, 3}).has_isolated_singularities(),
                      NotWellFormed);
}

TEST_CASE("picard_generator_degree", "[weights]") {
    CHECK(WeightVector::validate({1, 1, 2, 3}).picard_generator_degree() == 6);
    CHECK(WeightVector::validate({1, 1, 1, 1}).picard_generator_degree() == 1);
    CHECK(WeightVector::validate({1, 1, 2, 3, 5}).picard_generator_degree() == 30);
    CHECK(WeightVector::validate({1, 1, 2, 4}).picard_generator_degree() == 4);
    REQUIRE_THROWS_AS(WeightVector::validate({2, 2, 3}).picard_generator_degree(),
                      NotWellFormed);
}

TEST_CASE("lcm equals product exactly in the pairwise-coprime case",
          "[weights][property]") {
    oracle::Rng rng(303);
    int coprime_seen = 0;
    for (int it = 0; it < 300; ++it) {
        const auto w = well_formize(WeightVector{oracle::random_weights(rng, 3, 6, 9)}).weights;
        const bool coprime = w.has_isolated_singularities();
        coprime_seen += coprime;
        CHECK((w.picard_generator_degree() == w.weight_product()) == coprime);
    }
    CHECK(coprime_seen > 0);
}

TEST_CASE("picard degree is permutation-invariant", "[weights][property]") {
    oracle::Rng rng(404);
    for (int it = 0; it < 100; ++it) {
        const auto w = well_formize(WeightVector{oracle::random_weights(rng, 2, 6, 10)}).weights;
        auto original = w.weights();
        const auto perm = oracle::random_permutation(rng, original.size());
        std::vector<std::uint64_t> v(original.size());
        for (std::size_t i = 0; i < original.size(); ++i)
            v[i] = original[perm[i]];
        const WeightVector p{v};
        REQUIRE(p.is_well_formed()); // permutations preserve well-formedness
        REQUIRE(p.picard_generator_degree() == w.picard_generator_degree());
    }
}

TEST_CASE("canonical_weight_sum", "[weights]") {
    CHECK(WeightVector::validate({1, 1, 2, 3, 5}).canonical_weight_sum() == 12);
    CHECK(WeightVector::validate({1, 1, 1, 1}).canonical_weight_sum() == 4);
    CHECK(WeightVector::validate({1, 1, 2, 3}).canonical_weight_sum() == 7);
}
