#include <doctest.h>

#include "fthresh/family.hpp"
#include "fthresh/newton.hpp"
#include "fthresh/test_ideal.hpp"

using namespace fthresh;

namespace {

PrimeFamily sample_family() {
    PrimeFamily fam;
    fam.name = "sample";
    fam.m = 2;
    fam.heights = {6, 2};
    fam.e_matrix = {{1, 2}, {0, 1}};
    fam.cond_a = ConditionFlag::verified();
    fam.cond_a_plus = ConditionFlag::asserted("a book");
    fam.cond_b = ConditionFlag::unknown();
    fam.containment_oracle = "gamma";
    fam.validate();
    return fam;
}

}  // namespace

TEST_CASE("PrimeFamily validation") {
    PrimeFamily fam = sample_family();
    CHECK_NOTHROW(fam.validate());
    PrimeFamily bad = fam;
    bad.heights = {0, 2};
    CHECK_THROWS_AS(bad.validate(), InvalidParameter);
    bad = fam;
    bad.e_matrix[1][1] = 0;
    CHECK_THROWS_AS(bad.validate(), InvalidParameter);
    bad = fam;
    bad.e_matrix[0] = {1};
    CHECK_THROWS_AS(bad.validate(), DimensionMismatch);
}

TEST_CASE("e_map is the matrix action") {
    PrimeFamily fam = sample_family();
    CHECK(e_map(fam, {0, 1}) == IntVec{2, 1});
    CHECK(e_map(fam, {3, 2}) == IntVec{7, 2});
    CHECK_THROWS_AS(e_map(fam, {1}), DimensionMismatch);
}

TEST_CASE("family JSON round trip is bit exact") {
    PrimeFamily fam = sample_family();
    auto j = to_json(fam);
    PrimeFamily back = family_from_json(j);
    CHECK(back == fam);
    CHECK(to_json(back) == j);
    CHECK(to_json(back).dump() == j.dump());

    fam.containment_oracle.reset();
    fam.cond_b = ConditionFlag::asserted("another source");
    auto j2 = to_json(fam);
    CHECK(j2["containment_oracle"].is_null());
    CHECK(family_from_json(j2) == fam);
}

TEST_CASE("condition flag serialization covers all statuses") {
    CHECK(condition_from_json(to_json(ConditionFlag::verified())) == ConditionFlag::verified());
    CHECK(condition_from_json(to_json(ConditionFlag::asserted("x"))) ==
          ConditionFlag::asserted("x"));
    CHECK(condition_from_json(to_json(ConditionFlag::unknown())) == ConditionFlag::unknown());
    CHECK_THROWS_AS(condition_from_json({{"status", "maybe"}}), ConfigError);
}

TEST_CASE("tau_power floor formula") {
    PrimeFamily fam = monomial_family(2);
    // tau(lambda * (x1 x2)) = (x1^floor(lambda) x2^floor(lambda))
    CHECK(tau_power(fam, {1, 1}, Rational(3, 2)) == IntVec{1, 1});
    CHECK(tau_power(fam, {1, 1}, Rational(1, 2)) == IntVec{0, 0});
    CHECK(tau_power(fam, {1, 1}, Rational(2)) == IntVec{2, 2});
    CHECK_THROWS_AS(tau_power(fam, {1, 1}, Rational(-1)), InvalidParameter);
}

TEST_CASE("fpt_power known values") {
    PrimeFamily fam = monomial_family(2);
    auto f = fpt_power(fam, {1, 1});
    REQUIRE(f);
    CHECK(*f == Rational(1));
    auto g = fpt_power(fam, {2, 3});
    REQUIRE(g);
    CHECK(*g == Rational(1, 3));
    CHECK_THROWS_AS(fpt_power(fam, {0, 0}), InvalidParameter);
}

TEST_CASE("jumping_numbers_power for the principal monomial") {
    PrimeFamily fam = monomial_family(2);
    auto jumps = jumping_numbers_power(fam, {1, 1}, Rational(3));
    REQUIRE(jumps.size() == 3);
    CHECK(jumps[0] == std::pair<Rational, IntVec>{Rational(1), {1, 1}});
    CHECK(jumps[1] == std::pair<Rational, IntVec>{Rational(2), {2, 2}});
    CHECK(jumps[2] == std::pair<Rational, IntVec>{Rational(3), {3, 3}});
}

TEST_CASE("normalize_description minimizes and prunes") {
    PrimeFamily fam = monomial_family(2);
    auto d = normalize_description({{1, 0}, {1, 1}, {0, 2}}, fam);
    CHECK(d.antichain == std::set<IntVec>{{0, 2}, {1, 0}});
    CHECK(d.level == DescriptionLevel::Representation);
    CHECK(d.family_ref == "monomial:2");

    // with the divisibility oracle (1,1) is inside (1,0) and gets dropped even
    // when listed alone with incomparable companions
    auto pruned = normalize_description({{1, 2}, {2, 1}, {2, 2}}, fam, monomial_oracle());
    CHECK(pruned.level == DescriptionLevel::OraclePruned);
    CHECK(pruned.antichain == std::set<IntVec>{{1, 2}, {2, 1}});
}

TEST_CASE("unit and zero descriptions") {
    PrimeFamily fam = monomial_family(2);
    auto d = normalize_description({{0, 0}, {1, 2}}, fam);
    CHECK(d.is_unit());
    CHECK(tau_sum(fam, {{1, 1}}, Rational(0)).is_unit());
}

TEST_CASE("singleton Sigma agrees with the power formula") {
    PrimeFamily fam = sample_family();
    for (const IntVec sigma : {IntVec{0, 1}, IntVec{1, 0}, IntVec{2, 1}}) {
        for (int t = 1; t <= 10; ++t) {
            Rational lambda(t, 3);
            auto d = tau_sum(fam, {sigma}, lambda);
            CHECK(d.antichain == std::set<IntVec>{tau_power(fam, sigma, lambda)});
        }
        auto fp = fpt_power(fam, sigma);
        auto fs = fpt_sum(fam, {sigma});
        REQUIRE(fp);
        REQUIRE(fs);
        CHECK(*fp == *fs);
    }
}

TEST_CASE("tau_sum two-generator example") {
    PrimeFamily fam = monomial_family(2);
    auto d = tau_sum(fam, {{2, 0}, {0, 2}}, Rational(3, 2));
    CHECK(d.antichain == std::set<IntVec>{{0, 2}, {1, 1}, {2, 0}});
}

TEST_CASE("fpt_sum known values") {
    PrimeFamily fam = monomial_family(2);
    auto f = fpt_sum(fam, {{2, 0}, {0, 3}});
    REQUIRE(f);
    CHECK(*f == Rational(5, 6));
    auto g = fpt_sum(fam, {{2, 0}, {0, 2}});
    REQUIRE(g);
    CHECK(*g == Rational(1));
}

TEST_CASE("jumping_numbers_sum for (x1^2, x2^2)") {
    PrimeFamily fam = monomial_family(2);
    auto jumps = jumping_numbers_sum(fam, {{2, 0}, {0, 2}}, Rational(2));
    REQUIRE(jumps.size() == 3);
    CHECK(jumps[0].first == Rational(1));
    CHECK(jumps[0].second.antichain == std::set<IntVec>{{0, 1}, {1, 0}});
    CHECK(jumps[1].first == Rational(3, 2));
    CHECK(jumps[1].second.antichain == std::set<IntVec>{{0, 2}, {1, 1}, {2, 0}});
    // tau(lambda * (x1^2, x2^2)) = m^(floor(2*lambda) - 1)
    CHECK(jumps[2].first == Rational(2));
    CHECK(jumps[2].second.antichain == std::set<IntVec>{{0, 3}, {1, 2}, {2, 1}, {3, 0}});
}

TEST_CASE("tau_sum is monotone decreasing in lambda") {
    PrimeFamily fam = monomial_family(3);
    SigmaSet Sigma = {{2, 0, 1}, {0, 3, 0}, {1, 1, 1}};
    MonomialIdeal prev = MonomialIdeal::unit(3);
    for (int t = 0; t <= 12; ++t) {
        auto d = tau_sum(fam, Sigma, Rational(t, 4));
        MonomialIdeal cur = description_to_monomial_ideal(d, 3);
        CHECK(prev.contains(cur));
        prev = cur;
    }
}
