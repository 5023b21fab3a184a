#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "radtower/bounds.hpp"
#include "radtower/roots.hpp"

using namespace radtower;

namespace {

RadicalTower make_tower(std::initializer_list<std::pair<long, long>> pd) {
    RadicalTower t;
    for (auto [p, d] : pd) t.steps.push_back({Integer(p), Integer(d), std::nullopt, {}});
    return t;
}

std::vector<ComplexBox> coeffs_real(std::initializer_list<double> cs) {
    std::vector<ComplexBox> out;
    for (double c : cs) out.push_back(ComplexBox::exact(c, 0.0, 96));
    return out;
}

}  // namespace

TEST_CASE("l2 lower bound examples") {
    PointTuple pm = PointTuple::from_points({{1, 0}, {-1, 0}}, 96);
    RealInterval b1 = l2_lower_bound(pm, coeffs_real({1, 1}), 1e-8);
    CHECK(b1.lo_d() <= std::sqrt(2.0));
    CHECK(b1.hi_d() >= std::sqrt(2.0) - 1e-7);

    RealInterval b2 = l2_lower_bound(pm, coeffs_real({5}), 1e-8);
    CHECK(b2.lo_d() == 5.0);
    CHECK(b2.hi_d() == 5.0);

    PointTuple ones = PointTuple::from_points({{1, 0}, {1, 0}}, 96);
    RealInterval b3 = l2_lower_bound(ones, coeffs_real({1, 1}), 1e-8);
    CHECK(b3.hi_d() < 0);  // vacuous, and max|B| = 2 still dominates

    CHECK_THROWS_AS(l2_lower_bound(pm, coeffs_real({1, 1, 1}), 1e-8), DegreeTooLarge);
}

TEST_CASE("scaled l2 lower bound examples") {
    PointTuple r5 = complex_roots(PolyZ::pure_radical(3, 5), 1e-12);
    RealInterval b1 = l2_lower_bound_scaled(r5, coeffs_real({0, 0, 1}), 1e-7);
    double want = std::pow(5.0, 2.0 / 3);
    CHECK(b1.lo_d() <= want);
    CHECK(b1.hi_d() >= want - 1e-6);

    PointTuple two = PointTuple::from_points({{2, 0}, {-2, 0}}, 96);
    RealInterval b2 = l2_lower_bound_scaled(two, coeffs_real({1, 1}), 1e-7);
    CHECK(b2.lo_d() <= std::sqrt(5.0));
    CHECK(b2.hi_d() >= std::sqrt(5.0) - 1e-6);

    PointTuple r251 = complex_roots(PolyZ::pure_radical(7, 251), 1e-12);
    RealInterval b3 = l2_lower_bound_scaled(r251, coeffs_real({1}), 1e-7);
    CHECK(b3.lo_d() == 1.0);
    CHECK(b3.hi_d() == 1.0);
}

TEST_CASE("window l2 lower bound examples") {
    PointTuple fourth;
    for (unsigned long j = 0; j < 4; ++j)
        fourth.boxes.push_back(ComplexBox::root_of_unity(j, 4, 96));
    std::vector<std::size_t> all = {0, 1, 2, 3};

    RealInterval b1 =
        l2_lower_bound_window(fourth, coeffs_real({1, 1, 0}), all, {0, 1}, 1e-7);
    CHECK(b1.lo_d() <= std::sqrt(2.0));
    CHECK(b1.hi_d() >= std::sqrt(2.0) - 1e-6);

    RealInterval b2 =
        l2_lower_bound_window(fourth, coeffs_real({1, 1, 0, 1}), all, {0, 1}, 1e-7);
    CHECK(b2.lo_d() <= std::sqrt(2.0) - 1);
    CHECK(b2.hi_d() >= std::sqrt(2.0) - 1 - 1e-6);

    RealInterval b3 = l2_lower_bound_window(fourth, coeffs_real({2}), {0}, {0}, 1e-7);
    CHECK(b3.lo_d() <= 2.0);
    CHECK(b3.hi_d() >= 2.0 - 1e-6);

    // window wider than the subset
    CHECK_THROWS_AS(l2_lower_bound_window(fourth, coeffs_real({1, 1, 1}), {0}, {0, 2}, 1e-7),
                    InvalidParams);
    // off-circle points
    PointTuple off = PointTuple::from_points({{2, 0}}, 96);
    CHECK_THROWS_AS(l2_lower_bound_window(off, coeffs_real({1}), {0}, {0}, 1e-7),
                    InvalidParams);
}

TEST_CASE("house lower bound via the top coefficient") {
    RadicalTower t5 = make_tower({{5, 3}});
    RealInterval b1 = house_lower_bound_top_coeff(t5, parse_element("x1^2", t5), 1e-8);
    double want1 = std::pow(5.0, 2.0 / 3);
    CHECK(b1.lo_d() <= want1);
    CHECK(b1.hi_d() >= want1 - 1e-7);

    RadicalTower t131 = make_tower({{131, 11}});
    RealInterval b2 = house_lower_bound_top_coeff(t131, parse_element("3*x1", t131), 1e-8);
    double want2 = 3 * std::pow(131.0, 1.0 / 11);
    CHECK(b2.lo_d() <= want2);
    CHECK(b2.hi_d() >= want2 - 1e-7);

    RadicalTower t2 = make_tower({{251, 7}, {2309, 11}});
    RealInterval b3 = house_lower_bound_top_coeff(t2, parse_element("x1*x2", t2), 1e-8);
    double want3 = std::pow(251.0, 1.0 / 7) * std::pow(2309.0, 1.0 / 11);
    CHECK(b3.lo_d() <= want3);
    CHECK(b3.hi_d() >= want3 - 1e-7);

    // the bound never exceeds the true house
    double h = house(t2, parse_element("x1*x2", t2), 1e-9).value.hi_d();
    CHECK(h >= b3.lo_d() - 3e-8);

    CHECK_THROWS_AS(house_lower_bound_top_coeff(t2, parse_element("x1", t2), 1e-8),
                    NotInTopGenerator);
}

TEST_CASE("new element house floor") {
    RadicalTower t5 = make_tower({{5, 3}});
    RealInterval f0 = new_element_house_floor(t5, 1, 1e-9);
    CHECK(f0.mid_d() == doctest::Approx(std::cbrt(5.0)).epsilon(1e-9));

    RadicalTower t131 = make_tower({{131, 11}});
    RealInterval f1 = new_element_house_floor(t131, 1, 1e-9);
    CHECK(f1.mid_d() == doctest::Approx(std::pow(131.0, 1.0 / 11)).epsilon(1e-9));

    RadicalTower t2 = make_tower({{251, 7}, {2309, 11}});
    RealInterval f2 = new_element_house_floor(t2, 2, 1e-9);
    CHECK(f2.mid_d() == doctest::Approx(std::pow(2309.0, 1.0 / 11)).epsilon(1e-9));
}

TEST_CASE("northcott bounds report") {
    RadicalTower t = make_tower({{251, 7}, {2309, 11}, {8293, 13}});
    BoundsReport rep = northcott_bounds_report(t, 1e-9);
    REQUIRE(rep.eta_values.size() == 3);
    double expect[3] = {2.2019, 2.0220, 2.0019};
    for (int i = 0; i < 3; ++i) {
        CHECK(std::abs(rep.eta_values[static_cast<std::size_t>(i)].mid_d() - expect[i]) < 1e-3);
        CHECK(std::abs(rep.house_values[static_cast<std::size_t>(i)].mid_d() - expect[i]) <
              1e-3);
    }
    CHECK(rep.prefix_liminf_eta.mid_d() == doctest::Approx(expect[2]).epsilon(1e-3));
    CHECK(rep.prefix_liminf_eta.lo_d() <= rep.prefix_min_house.hi_d());

    RadicalTower single = make_tower({{5, 3}});
    BoundsReport rs = northcott_bounds_report(single, 1e-9);
    CHECK(rs.eta_values.size() == 1);
    CHECK(rs.eta_values[0].mid_d() == doctest::Approx(std::cbrt(5.0)).epsilon(1e-9));

    RadicalTower t131 = make_tower({{131, 11}});
    BoundsReport rl = northcott_bounds_report(t131, 1e-9, rational_from_string("3/2"));
    REQUIRE(rl.claimed_limit.has_value());
    CHECK(rl.house_values[0].certainly_gt(rational_from_string("3/2")));
    CHECK(rl.house_values[0].hi_d() < 1.5982);

    RadicalTower empty;
    CHECK_THROWS_AS(northcott_bounds_report(empty, 1e-9), EmptyTower);
}

TEST_CASE("weil height step floor") {
    RealInterval f1 = weil_height_step_floor(0.0, Integer(101), Integer(5), 1e-9);
    CHECK(std::abs(f1.mid_d() - 0.2603) < 1e-3);
    CHECK(f1.mid_d() == doctest::Approx(std::log(101.0) / 10 - std::log(5.0) / 8).epsilon(1e-9));

    RealInterval f2 = weil_height_step_floor(0.0, Integer(5), Integer(3), 1e-9);
    CHECK(f2.hi_d() < 0);  // vacuous but returned

    RealInterval f3 = weil_height_step_floor(1.0, Integer(53), Integer(3), 1e-9);
    CHECK(std::abs(f3.mid_d() - 1.161) < 1e-3);

    CHECK_THROWS_AS(weil_height_step_floor(0.0, Integer(10), Integer(3), 1e-9), InvalidParams);
}
