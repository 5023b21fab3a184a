// Acceptance suite: one test case per criterion, each printing a single
// "criterion N: PASS/FAIL" line in addition to the assertions, so the
// ctest log shows the verdict table at a glance.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "radtower/cli.hpp"
#include "radtower/arith.hpp"
#include "radtower/construct.hpp"
#include "radtower/dedekind.hpp"
#include "radtower/oracle.hpp"
#include "radtower/suites.hpp"

using namespace radtower;

namespace {

struct Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void report(int criterion, bool ok, const std::string& detail) {
    std::printf("criterion %2d: %s  (%s)\n", criterion, ok ? "PASS" : "FAIL",
                detail.c_str());
    std::fflush(stdout);
    CHECK_MESSAGE(ok, "criterion ", criterion, ": ", detail);
}

RadicalTower make_tower(std::initializer_list<std::pair<long, long>> pd) {
    RadicalTower t;
    for (auto [p, d] : pd) t.steps.push_back({Integer(p), Integer(d), std::nullopt, {}});
    return t;
}

}  // namespace

TEST_CASE("criterion 1: closed-form discrepancies for 200 random points") {
    Stopwatch sw;
    SuiteResult r = run_suite("closed-forms", 2024, 200, 1e-6);
    double secs = sw.seconds();
    bool ok = r.instances == 200 && r.violations == 0 && secs < 30.0;
    std::ostringstream os;
    os << r.instances << " instances, " << r.violations << " violations, " << secs << " s";
    report(1, ok, os.str());
}

TEST_CASE("criterion 2: roots of unity have discrepancy below 1e-6") {
    bool ok = true;
    double worst = 0;
    for (unsigned long d = 2; d <= 12; ++d) {
        PointTuple t;
        for (unsigned long j = 0; j < d; ++j)
            t.boxes.push_back(ComplexBox::root_of_unity(j, d, 128));
        DiscrepancyResult r = discrepancy(t, 1e-7);
        worst = std::max(worst, r.value.hi_d());
        if (!(r.value.hi_d() <= 1e-6)) ok = false;
    }
    std::ostringstream os;
    os << "max upper bound " << worst << " over d = 2..12";
    report(2, ok, os.str());
}

TEST_CASE("criterion 3: l2 floor property suites, 1000 instances each") {
    Stopwatch sw;
    SuiteResult a = run_suite("l2-lower-bound", 11, 1000, 1e-9);
    SuiteResult b = run_suite("l2-scaled", 12, 1000, 1e-9);
    SuiteResult c = run_suite("l2-window", 13, 1000, 1e-9);
    double secs = sw.seconds();
    bool ok = a.pass() && b.pass() && c.pass() && a.instances == 1000 &&
              b.instances == 1000 && c.instances == 1000 && secs < 120.0;
    std::ostringstream os;
    os << "violations " << a.violations << "/" << b.violations << "/" << c.violations << ", "
       << secs << " s";
    report(3, ok, os.str());
}

TEST_CASE("criterion 4: root-lift and product-tuple suites, 500 instances each") {
    SuiteResult a = run_suite("root-lift", 21, 500, 1e-9);
    SuiteResult b = run_suite("product-tuple", 22, 500, 1e-9);
    bool ok = a.pass() && b.pass() && a.instances == 500 && b.instances == 500;
    std::ostringstream os;
    os << "violations " << a.violations << "/" << b.violations;
    report(4, ok, os.str());
}

TEST_CASE("criterion 5: monogenicity chain and Dedekind agreement") {
    bool ok = true;
    std::ostringstream os;

    // (5,3) monogenic, (17,3) not (Dedekind at q = 3)
    if (!dedekind_index_coprime(PolyZ::pure_radical(3, 5), 3)) ok = false;
    if (dedekind_index_coprime(PolyZ::pure_radical(3, 17), 3)) ok = false;
    if (fermat_quotient_divides(5, 3)) ok = false;
    if (!fermat_quotient_divides(17, 3)) ok = false;

    // every prime emitted by the house constructions used in this suite
    Certificate c1 = construct_house_spectrum(ConstructionVariant::HouseB, Rational(2), 3,
                                              Integer(7));
    Certificate c2 = construct_house_spectrum(ConstructionVariant::HouseB,
                                              rational_from_string("3/2"), 1, Integer(11));
    std::vector<std::pair<Integer, Integer>> emitted;
    for (const auto& s : c1.tower.steps) emitted.emplace_back(s.p, s.d);
    for (const auto& s : c2.tower.steps) emitted.emplace_back(s.p, s.d);
    for (const auto& [p, d] : emitted) {
        if ((p % (d * d)) != d - 1) ok = false;
        if (fermat_quotient_divides(p, d)) ok = false;
        PolyZ f = PolyZ::pure_radical(d.get_ui(), p);
        if (!dedekind_index_coprime(f, d) || !dedekind_index_coprime(f, p)) ok = false;
    }

    SuiteResult agree = run_suite("dedekind-agreement", 0, 0, 1e-9);
    if (!agree.pass()) ok = false;
    os << emitted.size() << " emitted primes checked; agreement on " << agree.instances
       << " exhaustive cases, " << agree.violations << " violations";
    report(5, ok, os.str());
}

TEST_CASE("criterion 6: house-b desk instance (t=2, 3 steps, seed 7)") {
    Stopwatch sw;
    bool ok = true;
    Certificate c = construct_house_spectrum(ConstructionVariant::HouseB, Rational(2), 3,
                                             Integer(7));
    long expect[3][2] = {{251, 7}, {2309, 11}, {8293, 13}};
    for (int i = 0; i < 3; ++i) {
        if (c.tower.steps[static_cast<std::size_t>(i)].p != expect[i][0]) ok = false;
        if (c.tower.steps[static_cast<std::size_t>(i)].d != expect[i][1]) ok = false;
    }
    double approx[3] = {2.2019, 2.0220, 2.0019};
    for (std::size_t i = 0; i < 3; ++i) {
        const RealInterval& h = c.report.house_values[i];
        if (std::abs(h.mid_d() - approx[i]) > 1e-3) ok = false;
        if (!h.certainly_gt(Rational(2))) ok = false;
        double d = mpz_get_d(c.tower.steps[i].d.get_mpz_t());
        if (!(h.hi_d() < 2 * std::pow(2.0, 1.0 / d))) ok = false;
        if (i > 0 && !c.report.house_values[i - 1].certainly_greater(h)) ok = false;
    }
    VerificationReport v = verify_certificate(c);
    if (!v.pass) ok = false;
    double secs = sw.seconds();
    if (secs >= 10.0) ok = false;
    std::ostringstream os;
    os << "steps (251,7),(2309,11),(8293,13); verify "
       << (v.pass ? "passed" : "FAILED") << "; " << secs << " s";
    report(6, ok, os.str());
}

TEST_CASE("criterion 7: new-element house floor attained at the generator") {
    Stopwatch sw;
    bool ok = true;
    double tol = 1e-9;
    std::ostringstream os;

    auto check_tower = [&](std::initializer_list<std::pair<long, long>> pd,
                           long coeff_bound,
                           std::optional<std::vector<TowerElement::Exponents>> mask,
                           std::uint64_t cap) {
        RadicalTower tower = make_tower(pd);
        EnumerationSpec spec;
        spec.tower = tower;
        spec.step_index = tower.size();
        spec.coeff_bound = coeff_bound;
        spec.slot_mask = std::move(mask);
        spec.cap = cap;
        RealInterval eta = new_element_house_floor(tower, spec.step_index, tol);
        MinScanResult min = empirical_min_house(spec, tol);
        if (!(min.value.lo_d() >= eta.lo_d() - 3 * tol)) ok = false;
        if (!(std::abs(min.value.mid_d() - eta.mid_d()) <= 1e-6)) ok = false;
        os << "[" << min.scanned << " elements, min " << min.value.mid_d() << " vs eta "
           << eta.mid_d() << "] ";
    };

    check_tower({{131, 11}}, 2, std::nullopt, 100'000'000);
    check_tower({{5, 3}}, 2, std::nullopt, 10'000'000);
    check_tower({{251, 7}, {2309, 11}}, 1,
                std::vector<TowerElement::Exponents>{
                    {0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}},
                10'000'000);

    double secs = sw.seconds();
    if (secs >= 120.0) ok = false;
    os << secs << " s";
    report(7, ok, os.str());
}

TEST_CASE("criterion 8: Weil-height floor on the (101, 5) tower") {
    Stopwatch sw;
    bool ok = true;
    RadicalTower tower = make_tower({{101, 5}});
    EnumerationSpec spec;
    spec.tower = tower;
    spec.step_index = 1;
    spec.coeff_bound = 2;
    MinScanResult min = empirical_min_weil(spec, 1e-9);
    RealInterval floor = weil_height_step_floor(0.0, Integer(101), Integer(5), 1e-9);
    if (!(std::abs(floor.mid_d() - 0.2603) < 1e-3)) ok = false;
    if (!(min.value.lo_d() >= 0.2603 - 1e-6)) ok = false;
    if (!(min.value.lo_d() >= floor.lo_d() - 3e-9)) ok = false;
    double secs = sw.seconds();
    if (secs >= 60.0) ok = false;
    std::ostringstream os;
    os << min.scanned << " elements, min weil " << min.value.mid_d() << " vs floor "
       << floor.mid_d() << ", " << secs << " s";
    report(8, ok, os.str());
}

TEST_CASE("criterion 9: weighted-gap desk instance (gamma=0, eps=1/2, 4 steps)") {
    bool ok = true;
    Certificate c = construct_weighted_gap(0.0, 0.5, 4, Integer(3));
    if (c.tower.steps[0].p != 53) ok = false;
    for (const auto& s : c.per_step) {
        if (!s.interval_member || !*s.interval_member) ok = false;
        if (!s.violation_notes.empty()) ok = false;
    }
    for (std::size_t i = 0; i + 1 < c.report.weighted_heights.size(); ++i)
        if (!c.report.weighted_heights[i].certainly_greater(c.report.weighted_heights[i + 1]))
            ok = false;
    VerificationReport v = verify_certificate(c);
    if (!v.pass) ok = false;
    std::ostringstream os;
    os << "p1 = " << to_string(c.tower.steps[0].p) << ", verify "
       << (v.pass ? "passed" : "FAILED");
    report(9, ok, os.str());
}

TEST_CASE("criterion 10: certificate tamper detection via the CLI") {
    bool ok = true;
    Certificate c = construct_house_spectrum(ConstructionVariant::HouseB, Rational(2), 3,
                                             Integer(7));
    std::string good = c.to_json_string();

    auto verify_text = [&](const std::string& text) {
        std::string path = "/tmp/radtower_acceptance_cert.json";
        std::ofstream f(path);
        f << text;
        f.close();
        std::ostringstream out, err;
        return radtower::cli::run({"verify", path}, out, err);
    };

    if (verify_text(good) != 0) ok = false;

    {  // p edit
        std::string bad = good;
        auto pos = bad.find("\"2309\"");
        bad.replace(pos, 6, "\"2311\"");
        if (verify_text(bad) != 1) ok = false;
    }
    {  // interval edit
        std::string bad = good;
        auto pos = bad.find("\"128\"");
        bad.replace(pos, 5, "\"100\"");
        if (verify_text(bad) != 1) ok = false;
    }
    {  // checks edit
        std::string bad = good;
        auto pos = bad.find("\"monogenic\": true");
        bad.replace(pos, 17, "\"monogenic\": false");
        if (verify_text(bad) != 1) ok = false;
    }
    report(10, ok, "p, interval and checks edits each exit 1");
}
