#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "radtower/construct.hpp"
#include "radtower/primality.hpp"
#include "radtower/roots.hpp"

using namespace radtower;

TEST_CASE("house-b desk instance (2, 3 steps, seed 7)") {
    Certificate c = construct_house_spectrum(ConstructionVariant::HouseB, Rational(2), 3,
                                             Integer(7));
    REQUIRE(c.tower.size() == 3);
    CHECK(c.tower.steps[0].p == 251);
    CHECK(c.tower.steps[0].d == 7);
    CHECK(c.tower.steps[1].p == 2309);
    CHECK(c.tower.steps[1].d == 11);
    CHECK(c.tower.steps[2].p == 8293);
    CHECK(c.tower.steps[2].d == 13);
    for (const auto& s : c.per_step) {
        CHECK(*s.interval_member);
        CHECK(*s.congruence);
        CHECK(*s.monogenic);
        CHECK(*s.prime_fresh);
        CHECK(*s.eisenstein);
        CHECK(s.violation_notes.empty());
    }
    // house enclosures in (t, 2^(1/d) t), decreasing
    double expected[3] = {2.2019, 2.0220, 2.0019};
    for (std::size_t i = 0; i < 3; ++i) {
        const RealInterval& h = c.report.house_values[i];
        CHECK(std::abs(h.mid_d() - expected[i]) < 1e-3);
        CHECK(h.certainly_gt(Rational(2)));
        double d = mpz_get_d(c.tower.steps[i].d.get_mpz_t());
        CHECK(h.hi_d() < 2 * std::pow(2.0, 1.0 / d));
    }
    CHECK(c.report.house_values[0].certainly_greater(c.report.house_values[1]));
    CHECK(c.report.house_values[1].certainly_greater(c.report.house_values[2]));

    VerificationReport v = verify_certificate(c);
    CHECK(v.pass);
    CHECK(v.mismatches.empty());
}

TEST_CASE("house-b single step at t = 3/2, seed 11") {
    Certificate c = construct_house_spectrum(ConstructionVariant::HouseB,
                                             rational_from_string("3/2"), 1, Integer(11));
    REQUIRE(c.tower.size() == 1);
    CHECK(c.tower.steps[0].p == 131);
    CHECK(c.tower.steps[0].d == 11);
    CHECK(verify_certificate(c).pass);
}

TEST_CASE("house-a at small degree legitimately exhausts") {
    // (64, 128) holds no prime congruent to 6 mod 49
    CHECK_THROWS_AS(
        construct_house_spectrum(ConstructionVariant::HouseA, Rational(2), 1, Integer(7)),
        SearchExhausted);
}

TEST_CASE("house-a window when it succeeds") {
    // t = 3: window (3^5/2, 3^5) = (121.5, 243), 4 mod 25: 129? no...
    // candidates 129, 154, 179, 204, 229 -> 179 and 229 prime; 179 first
    Certificate c = construct_house_spectrum(ConstructionVariant::HouseA, Rational(3), 1,
                                             Integer(5));
    CHECK(c.tower.steps[0].p == 179);
    CHECK((c.tower.steps[0].p % 25) == 4);
    // house in (2^(-1/d) t, t)
    const RealInterval& h = c.report.house_values[0];
    CHECK(h.certainly_lt(Rational(3)));
    CHECK(h.lo_d() > 3 * std::pow(2.0, -1.0 / 5));
    CHECK(verify_certificate(c).pass);
}

TEST_CASE("house-c serves diagonal targets") {
    Certificate c = construct_house_spectrum(ConstructionVariant::HouseC, Rational(2), 3,
                                             Integer(5));
    REQUIRE(c.tower.size() == 3);
    // targets: T1, T1, T2 with T1 = 3, T2 = 5/2
    REQUIRE(c.per_step[0].target.has_value());
    CHECK(*c.per_step[0].target == Rational(3));
    CHECK(*c.per_step[1].target == Rational(3));
    CHECK(*c.per_step[2].target == rational_from_string("5/2"));
    CHECK(verify_certificate(c).pass);
}

TEST_CASE("weil window: t = log(5)/2 approx, first step lands on 127") {
    // t close to log(5)/2 puts the first window at (125.0003..., 250.0007...)
    Rational t = rational_from_string("0.80471895621705018730");
    Certificate c = construct_weil_window(t, 2, Integer(3));
    REQUIRE(c.tower.size() == 2);
    CHECK(c.tower.steps[0].p == 127);
    CHECK(c.tower.steps[0].d == 3);
    CHECK(*c.per_step[0].interval_member);
    CHECK(c.per_step[0].violation_notes.empty());
    // d2 = 5, window (e^(10t), 2 e^(10t)) ~ (3125.01, 6250.03)
    CHECK(c.tower.steps[1].d == 5);
    Integer p2 = c.tower.steps[1].p;
    CHECK(is_prime(p2));
    CHECK(p2 > 3125);
    CHECK(p2 < 6250 + 1);
    // canonical: least fresh prime above the window start
    for (Integer q = 3126; q < p2; q += 1) CHECK_FALSE(is_prime(q));
    CHECK(verify_certificate(c).pass);
    // weil heights reported per step
    REQUIRE(c.report.weil_heights.size() == 2);
    CHECK(c.report.weil_heights[0].mid_d() == doctest::Approx(std::log(127.0) / 3));
    REQUIRE(c.report.target_window.has_value());
    CHECK(c.report.target_window->second == t * 2);
}

TEST_CASE("weil window at t = 0 widens every empty interval") {
    Certificate c = construct_weil_window(Rational(0), 3, Integer(3));
    REQUIRE(c.tower.size() == 3);
    // (1, 2) holds no integer, so each step widens to the next fresh prime
    CHECK(c.tower.steps[0].p == 2);
    CHECK_FALSE(*c.per_step[0].interval_member);
    CHECK_FALSE(c.per_step[0].violation_notes.empty());
    // d-sequence 3, 5, 7 consumes those primes; p2, p3 skip them
    CHECK(c.tower.steps[1].p == 11);
    CHECK(c.tower.steps[2].p == 13);
    CHECK(verify_certificate(c).pass);
}

TEST_CASE("weighted gap desk instance gamma=0 eps=1/2 seed 3") {
    Certificate c = construct_weighted_gap(0.0, 0.5, 4, Integer(3));
    REQUIRE(c.tower.size() == 4);
    CHECK(c.tower.steps[0].p == 53);
    CHECK(c.tower.steps[0].d == 3);
    CHECK(c.tower.steps[1].d == 7);
    CHECK(c.tower.steps[2].d == 17);
    CHECK(c.tower.steps[3].d == 37);
    // reported h_{-1/2} strictly decreasing
    REQUIRE(c.report.weighted_heights.size() == 4);
    for (std::size_t i = 0; i + 1 < 4; ++i)
        CHECK(c.report.weighted_heights[i].certainly_greater(
            c.report.weighted_heights[i + 1]));
    CHECK(verify_certificate(c).pass);
}

TEST_CASE("weighted gap prefers fresh primes, flags unavoidable collisions") {
    // gamma=1, eps=1/2: d1=2 -> window [e^(2^0.25), 2 e^(2^0.25)] ~ [3.28, 6.57] -> p1 = 5
    // d2=5 -> window [4.46, 8.92]: candidates 5 (used) and 7 -> p2 = 7
    Certificate c = construct_weighted_gap(1.0, 0.5, 2, Integer(2));
    REQUIRE(c.tower.size() == 2);
    CHECK(c.tower.steps[0].p == 5);
    CHECK(c.tower.steps[0].d == 2);
    CHECK(c.tower.steps[1].p == 7);
    CHECK(c.tower.steps[1].d == 5);
    CHECK(*c.per_step[1].prime_fresh);
    CHECK(verify_certificate(c).pass);
}

TEST_CASE("certificate JSON round trip") {
    Certificate c = construct_house_spectrum(ConstructionVariant::HouseB, Rational(2), 2,
                                             Integer(7));
    std::string j = c.to_json_string();
    Certificate back = Certificate::from_json_string(j);
    CHECK(back.variant == ConstructionVariant::HouseB);
    CHECK(back.tower.steps[0].p == c.tower.steps[0].p);
    CHECK(back.per_step.size() == c.per_step.size());
    CHECK(*back.params.t == Rational(2));
    CHECK(verify_certificate(back).pass);
}

TEST_CASE("tamper detection") {
    Certificate c = construct_house_spectrum(ConstructionVariant::HouseB, Rational(2), 3,
                                             Integer(7));

    SUBCASE("prime edit breaks the congruence") {
        Certificate bad = c;
        bad.tower.steps[1].p = 2311;  // prime, in window, but 2311 = 12 mod 121
        VerificationReport v = verify_certificate(bad);
        CHECK_FALSE(v.pass);
        bool congruence_named = false;
        for (const auto& m : v.mismatches)
            if (m.find("congruence") != std::string::npos) congruence_named = true;
        CHECK(congruence_named);
    }

    SUBCASE("interval edit is caught") {
        Certificate bad = c;
        bad.tower.steps[0].interval = {Rational(100), Rational(300)};
        VerificationReport v = verify_certificate(bad);
        CHECK_FALSE(v.pass);
        bool interval_named = false;
        for (const auto& m : v.mismatches)
            if (m.find("interval") != std::string::npos) interval_named = true;
        CHECK(interval_named);
    }

    SUBCASE("checks edit is caught") {
        Certificate bad = c;
        bad.per_step[2].monogenic = false;
        VerificationReport v = verify_certificate(bad);
        CHECK_FALSE(v.pass);
    }

    SUBCASE("report edit is caught") {
        Certificate bad = c;
        bad.report.house_values[0] = RealInterval::from_endpoints(9.0, 9.5, 128);
        VerificationReport v = verify_certificate(bad);
        CHECK_FALSE(v.pass);
    }
}

TEST_CASE("root extension conditions") {
    // roots of x^7 - 251 lifted by a cube root: everything passes
    PointTuple r = complex_roots(PolyZ::pure_radical(7, 251), 1e-12);
    std::vector<std::pair<PointTuple, Integer>> data;
    data.emplace_back(r, Integer(3));
    RootExtensionReport rep = check_root_extension_conditions(data, 1e-9);
    REQUIRE(rep.verdicts.size() == 1);
    CHECK(rep.verdicts[0].discrepancy_decided);
    CHECK(rep.verdicts[0].discrepancy_ok);
    CHECK(rep.verdicts[0].min_modulus_decided);
    CHECK(rep.verdicts[0].min_modulus_ok);
    CHECK(rep.verdicts[0].ratio_decided);
    CHECK(rep.verdicts[0].ratio_near_one);

    // (1, 1): discrepancy sqrt(2) clearly violates the bound
    PointTuple ones = PointTuple::from_points({{1, 0}, {1, 0}}, 96);
    data.clear();
    data.emplace_back(ones, Integer(2));
    RootExtensionReport rep2 = check_root_extension_conditions(data, 1e-9);
    CHECK(rep2.verdicts[0].discrepancy_decided);
    CHECK_FALSE(rep2.verdicts[0].discrepancy_ok);

    // golden ratio: the conjugate 0.618... breaks s >= 1
    PointTuple golden = complex_roots(parse_polyz("x^2 - x - 1"), 1e-12);
    data.clear();
    data.emplace_back(golden, Integer(5));
    RootExtensionReport rep3 = check_root_extension_conditions(data, 1e-9);
    CHECK(rep3.verdicts[0].min_modulus_decided);
    CHECK_FALSE(rep3.verdicts[0].min_modulus_ok);
}

TEST_CASE("weil window at t = 1 with a single degree-5 step") {
    Certificate c = construct_weil_window(Rational(1), 1, Integer(5));
    REQUIRE(c.tower.size() == 1);
    Integer p = c.tower.steps[0].p;
    CHECK(is_prime(p));
    // window (e^10, 2 e^10) ~ (22026.46, 44052.93)
    CHECK(p > 22026);
    CHECK(p < 44053);
    for (Integer q = 22027; q < p; q += 1) CHECK_FALSE(is_prime(q));
    // reported height log p / 5 sits in (2, 2 + log(2)/5)
    REQUIRE(c.report.weil_heights.size() == 1);
    CHECK(c.report.weil_heights[0].lo_d() > 2.0);
    CHECK(c.report.weil_heights[0].hi_d() < 2.0 + std::log(2.0) / 5);
    CHECK(verify_certificate(c).pass);
}

TEST_CASE("strict ordering stays available for house towers") {
    Certificate c = construct_house_spectrum(ConstructionVariant::HouseB, Rational(2), 2,
                                             Integer(3), OrderingMode::Strict);
    REQUIRE(c.tower.size() == 2);
    CHECK(c.tower.steps[0].p == 11);
    CHECK(c.tower.steps[0].d == 3);
    Integer next_min = std::min(c.tower.steps[1].p, c.tower.steps[1].d);
    Integer prev_max = std::max(c.tower.steps[0].p, c.tower.steps[0].d);
    CHECK(next_min > prev_max);
    CHECK(c.tower.validate().empty());
    CHECK(verify_certificate(c).pass);
}

TEST_CASE("construction parameter validation") {
    CHECK_THROWS_AS(
        construct_house_spectrum(ConstructionVariant::HouseB, Rational(1), 1, Integer(7)),
        InvalidParams);
    CHECK_THROWS_AS(
        construct_house_spectrum(ConstructionVariant::HouseB, Rational(2), 0, Integer(7)),
        InvalidParams);
    CHECK_THROWS_AS(
        construct_house_spectrum(ConstructionVariant::HouseB, Rational(2), 1, Integer(9)),
        InvalidParams);
    CHECK_THROWS_AS(construct_weil_window(Rational(-1), 1, Integer(3)), InvalidParams);
    CHECK_THROWS_AS(construct_weighted_gap(1.5, 0.5, 1, Integer(3)), InvalidParams);
    CHECK_THROWS_AS(construct_weighted_gap(0.5, 0.0, 1, Integer(3)), InvalidParams);
}
