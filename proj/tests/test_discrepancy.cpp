#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "radtower/discrepancy.hpp"
#include "radtower/roots.hpp"

using namespace radtower;

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
}

PointTuple single(double re, double im) { return PointTuple::from_points({{re, im}}, 96); }

}  // namespace

TEST_CASE("d_u examples") {
    PointTuple pm1 = PointTuple::from_points({{1, 0}, {-1, 0}}, 96);
    ComplexBox i_rot = ComplexBox::exact(0.0, 1.0, 96);
    RealInterval v = d_u(pm1, i_rot);
    CHECK(v.lo_d() <= std::sqrt(2.0) + 1e-12);
    CHECK(v.hi_d() >= std::sqrt(2.0) - 1e-12);
    CHECK(v.width() < 1e-10);

    // perfectly equidistributed cube roots of unity hit zero at u = 1
    PointTuple cbrt;
    for (unsigned long j = 0; j < 3; ++j)
        cbrt.boxes.push_back(ComplexBox::root_of_unity(j, 3, 96));
    RealInterval z = d_u(cbrt, ComplexBox::exact(1.0, 0.0, 96));
    CHECK(z.lo_d() == 0.0);
    CHECK(z.hi_d() < 1e-20);

    // multiplicity matters: (1, 1) against targets +-i
    PointTuple ones = PointTuple::from_points({{1, 0}, {1, 0}}, 96);
    RealInterval w = d_u(ones, i_rot);
    CHECK(w.lo_d() <= std::sqrt(2.0) + 1e-12);
    CHECK(w.hi_d() >= std::sqrt(2.0) - 1e-12);

    ComplexBox off_circle = ComplexBox::exact(2.0, 0.0, 96);
    CHECK_THROWS_AS(d_u(ones, off_circle), InvalidParams);
}

TEST_CASE("discrepancy closed forms") {
    DiscrepancyResult r3 = discrepancy(single(3, 0), 1e-8);
    CHECK(r3.value.width() <= 1e-8);
    CHECK(r3.value.lo_d() <= 2.0);
    CHECK(r3.value.hi_d() >= 2.0 - 1e-8);

    DiscrepancyResult r11 = discrepancy(PointTuple::from_points({{1, 0}, {1, 0}}, 96), 1e-8);
    CHECK(r11.value.lo_d() <= std::sqrt(2.0));
    CHECK(r11.value.hi_d() >= std::sqrt(2.0) - 1e-8);

    PointTuple fifth;
    for (unsigned long j = 0; j < 5; ++j)
        fifth.boxes.push_back(ComplexBox::root_of_unity(j, 5, 96));
    DiscrepancyResult r5 = discrepancy(fifth, 1e-8);
    CHECK(r5.value.lo_d() >= 0.0);
    CHECK(r5.value.hi_d() <= 1e-8);
}

TEST_CASE("closed form D(xi) = ||xi|-1| and D(xi,xi) = sqrt(1+|xi|^2), 200 random points") {
    std::mt19937_64 rng(101);
    for (int it = 0; it < 200; ++it) {
        double re = uniform(rng, -4, 4), im = uniform(rng, -4, 4);
        double m = std::hypot(re, im);
        if (m > 4) {
            re *= 4 / m;
            im *= 4 / m;
            m = std::hypot(re, im);
        }
        DiscrepancyResult one = discrepancy(single(re, im), 1e-6);
        CHECK(one.value.width() <= 1e-6);
        double want1 = std::abs(m - 1);
        CHECK(one.value.lo_d() <= want1 + 1e-9);
        CHECK(one.value.hi_d() >= want1 - 1e-9);

        DiscrepancyResult two =
            discrepancy(PointTuple::from_points({{re, im}, {re, im}}, 96), 1e-6);
        double want2 = std::sqrt(1 + m * m);
        CHECK(two.value.width() <= 1e-6);
        CHECK(two.value.lo_d() <= want2 + 1e-9);
        CHECK(two.value.hi_d() >= want2 - 1e-9);
    }
}

TEST_CASE("discrepancy of roots of unity is zero for d = 2..12") {
    for (unsigned long d = 2; d <= 12; ++d) {
        PointTuple t;
        for (unsigned long j = 0; j < d; ++j)
            t.boxes.push_back(ComplexBox::root_of_unity(j, d, 128));
        DiscrepancyResult r = discrepancy(t, 1e-7);
        CHECK(r.value.hi_d() <= 1e-7);
    }
}

TEST_CASE("witness rotation attains the upper bound") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 20; ++it) {
        std::vector<std::complex<double>> pts;
        std::size_t d = 1 + rng() % 5;
        for (std::size_t i = 0; i < d; ++i)
            pts.push_back({uniform(rng, -2, 2), uniform(rng, -2, 2)});
        PointTuple t = PointTuple::from_points(pts, 96);
        DiscrepancyResult r = discrepancy(t, 1e-6);
        RealInterval at_witness = d_u(t, r.argmin_u);
        CHECK(at_witness.lo_d() <= r.value.hi_d() + 1e-12);
    }
}

TEST_CASE("discrepancy is rotation invariant within 2 tol") {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 25; ++it) {
        std::vector<std::complex<double>> pts;
        std::size_t d = 1 + rng() % 5;
        for (std::size_t i = 0; i < d; ++i)
            pts.push_back({uniform(rng, -2, 2), uniform(rng, -2, 2)});
        double ang = uniform(rng, 0, M_PI);
        std::vector<std::complex<double>> rot;
        for (auto& p : pts) rot.push_back(p * std::polar(1.0, ang));
        double tol = 1e-7;
        DiscrepancyResult a = discrepancy(PointTuple::from_points(pts, 96), tol);
        DiscrepancyResult b = discrepancy(PointTuple::from_points(rot, 96), tol);
        CHECK(std::abs(a.value.mid_d() - b.value.mid_d()) <= 2 * tol + 1e-9);
    }
}

TEST_CASE("discrepancy is permutation indifferent") {
    std::vector<std::complex<double>> pts = {{1.2, 0.3}, {-0.7, 0.9}, {0.1, -1.4}};
    DiscrepancyResult a = discrepancy(PointTuple::from_points(pts, 96), 1e-8);
    std::swap(pts[0], pts[2]);
    DiscrepancyResult b = discrepancy(PointTuple::from_points(pts, 96), 1e-8);
    CHECK(std::abs(a.value.mid_d() - b.value.mid_d()) <= 1e-7);
}

TEST_CASE("normalized_tuple") {
    PointTuple t = PointTuple::from_points({{2, 0}, {-2, 0}}, 96);
    PointTuple n = normalized_tuple(t);
    RealInterval m = n.max_modulus();
    CHECK(m.lo_d() <= 1.0);
    CHECK(m.hi_d() >= 1.0);
    CHECK(m.width() < 1e-12);

    PointTuple t2 = PointTuple::from_points({{3, 0}, {1, 0}}, 96);
    PointTuple n2 = normalized_tuple(t2);
    // smallest modulus becomes 1/3
    CHECK(n2.min_modulus().lo_d() <= 1.0 / 3 + 1e-12);
    CHECK(n2.min_modulus().hi_d() >= 1.0 / 3 - 1e-12);

    PointTuple z = PointTuple::from_points({{0, 0}}, 96);
    CHECK_THROWS_AS(normalized_tuple(z), ZeroTuple);
}

TEST_CASE("eta0 examples") {
    PointTuple r5 = complex_roots(PolyZ::pure_radical(3, 5), 1e-12);
    RealInterval e = eta0(r5, 1e-8);
    double want = std::cbrt(5.0);
    CHECK(e.lo_d() <= want + 1e-8);
    CHECK(e.hi_d() >= want - 1e-8);

    PointTuple r251 = complex_roots(PolyZ::pure_radical(7, 251), 1e-12);
    RealInterval e2 = eta0(r251, 1e-6);
    double want2 = std::pow(251.0, 1.0 / 7);
    CHECK(e2.lo_d() <= want2 + 1e-6);
    CHECK(e2.hi_d() >= want2 - 1e-6);

    PointTuple ones = PointTuple::from_points({{1, 0}, {1, 0}}, 96);
    RealInterval e3 = eta0(ones, 1e-6);
    CHECK(e3.lo_d() <= -3.0 + 1e-6);
    CHECK(e3.hi_d() >= -3.0 - 1e-6);
}

TEST_CASE("eta_radical_step closed forms") {
    RadicalTower t131;
    t131.steps.push_back({Integer(131), Integer(11), std::nullopt, {}});
    RealInterval e = eta_radical_step(t131, 1, 1e-9);
    double want = std::pow(131.0, 1.0 / 11);
    CHECK(e.lo_d() <= want);
    CHECK(e.hi_d() >= want - 1e-9);

    RadicalTower two;
    two.steps.push_back({Integer(251), Integer(7), std::nullopt, {}});
    two.steps.push_back({Integer(2309), Integer(11), std::nullopt, {}});
    RealInterval e2 = eta_radical_step(two, 2, 1e-9);
    double want2 = std::pow(2309.0, 1.0 / 11);
    CHECK(e2.lo_d() <= want2);
    CHECK(e2.hi_d() >= want2 - 1e-9);

    RadicalTower t5;
    t5.steps.push_back({Integer(5), Integer(3), std::nullopt, {}});
    RealInterval e3 = eta_radical_step(t5, 1, 1e-9);
    CHECK(e3.lo_d() <= std::cbrt(5.0));
    CHECK(e3.hi_d() >= std::cbrt(5.0) - 1e-9);

    CHECK_THROWS_AS(eta_radical_step(t5, 2, 1e-9), InvalidStep);
    CHECK_THROWS_AS(eta_radical_step(t5, 0, 1e-9), InvalidStep);
}
