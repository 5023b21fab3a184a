#include "radtower/suites.hpp"

#include <json.hpp>

#include <cmath>
#include <complex>
#include <functional>
#include <random>

#include "radtower/arith.hpp"
#include "radtower/bounds.hpp"
#include "radtower/dedekind.hpp"
#include "radtower/oracle.hpp"
#include "radtower/primality.hpp"
#include "radtower/roots.hpp"

namespace radtower {

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
}

std::complex<double> random_disk(std::mt19937_64& rng, double radius) {
    for (;;) {
        double re = uniform(rng, -radius, radius);
        double im = uniform(rng, -radius, radius);
        if (re * re + im * im <= radius * radius) return {re, im};
    }
}

// Points near R * zeta_d^j * e^(i theta) with per-point noise <= eps.
std::vector<std::complex<double>> near_equidistributed(std::mt19937_64& rng, std::size_t d,
                                                       double radius, double eps) {
    double theta = uniform(rng, 0, 2 * M_PI);
    std::vector<std::complex<double>> pts;
    pts.reserve(d);
    for (std::size_t j = 0; j < d; ++j) {
        double ang = theta + 2 * M_PI * static_cast<double>(j) / static_cast<double>(d);
        std::complex<double> noise = random_disk(rng, eps);
        pts.push_back(std::polar(radius, ang) + noise);
    }
    return pts;
}

RealInterval max_abs_eval(const PointTuple& points, const std::vector<ComplexBox>& coeffs) {
    long prec = points.boxes[0].precision();
    RealInterval worst = RealInterval::exact(0.0, prec);
    for (const auto& b : points.boxes) {
        ComplexBox acc = ComplexBox::exact(0.0, 0.0, prec);
        for (std::size_t k = coeffs.size(); k-- > 0;) {
            acc = acc * b;
            acc = acc + coeffs[k];
        }
        worst = RealInterval::max(worst, acc.modulus());
    }
    return worst;
}

std::vector<ComplexBox> random_coeffs(std::mt19937_64& rng, std::size_t n, double bound,
                                      long prec) {
    std::vector<ComplexBox> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::complex<double> c = random_disk(rng, bound);
        out.push_back(ComplexBox::exact(c.real(), c.imag(), prec));
    }
    return out;
}

// --- l2 floor suites -------------------------------------------------

SuiteResult suite_l2(const std::string& name, std::uint64_t seed, std::uint64_t count,
                     double tol, int which) {
    SuiteResult res;
    res.name = name;
    std::mt19937_64 rng(seed);
    double suite_tol = std::max(tol, 1e-4);
    for (std::uint64_t it = 0; it < count; ++it) {
        std::size_t d = 1 + rng() % 8;
        std::vector<std::complex<double>> pts;
        if (it % 2 == 0) {
            double radius = uniform(rng, 0.3, 3.0);
            pts = near_equidistributed(rng, d, radius, uniform(rng, 0.0, 0.2));
        } else {
            for (std::size_t i = 0; i < d; ++i) pts.push_back(random_disk(rng, 3.0));
        }
        PointTuple points = PointTuple::from_points(pts, 96);
        std::size_t n = 1 + rng() % d;  // coefficient count <= d
        std::vector<ComplexBox> coeffs = random_coeffs(rng, n, 5.0, 96);

        RealInterval bound(96);
        ++res.instances;
        if (which == 0) {
            bound = l2_lower_bound(points, coeffs, suite_tol);
        } else if (which == 1) {
            bool all_zero = true;
            for (const auto& p : pts)
                if (std::abs(p) > 1e-6) all_zero = false;
            if (all_zero) {
                --res.instances;
                continue;
            }
            bound = l2_lower_bound_scaled(points, coeffs, suite_tol);
        } else {
            // unit-circle points, free polynomial degree, windowed exponents;
            // a whisker of radius covers the double rounding off the circle
            pts.clear();
            for (std::size_t i = 0; i < d; ++i)
                pts.push_back(std::polar(1.0, uniform(rng, 0, 2 * M_PI)));
            points = PointTuple::from_points(pts, 96);
            for (auto& b : points.boxes) b.inflate(1e-14);
            std::size_t deg = 1 + rng() % 10;
            coeffs = random_coeffs(rng, deg + 1, 5.0, 96);
            std::vector<std::size_t> subset;
            for (std::size_t i = 0; i < d; ++i)
                if (rng() % 2 == 0) subset.push_back(i);
            if (subset.empty()) subset.push_back(rng() % d);
            unsigned width = static_cast<unsigned>(
                std::min<std::size_t>(subset.size() - 1, deg));
            unsigned j_min = static_cast<unsigned>(rng() % (deg + 1 - width));
            std::set<unsigned> window;
            for (unsigned j = j_min; j <= j_min + width; ++j)
                if (window.empty() || rng() % 2 == 0) window.insert(j);
            bound = l2_lower_bound_window(points, coeffs, subset, window, suite_tol);
        }
        RealInterval max_b = max_abs_eval(points, coeffs);
        if (max_b.hi_d() < bound.lo_d() - 3 * suite_tol) {
            ++res.violations;
            res.notes.push_back("instance " + std::to_string(it) + ": max|B| " +
                                max_b.hi_string() + " below floor " + bound.lo_string());
        }
    }
    return res;
}

// --- discrepancy estimate suites --------------------------------------

SuiteResult suite_root_lift(std::uint64_t seed, std::uint64_t count, double tol) {
    SuiteResult res;
    res.name = "root-lift";
    std::mt19937_64 rng(seed);
    double suite_tol = std::max(tol, 1e-6);
    while (res.instances < count) {
        std::size_t m = 1 + rng() % 5;
        std::size_t n = 2 + rng() % 6;  // n <= 7
        double eps = uniform(rng, 0.0, 0.4);
        std::vector<std::complex<double>> alpha = near_equidistributed(rng, m, 1.0, eps);
        PointTuple at = PointTuple::from_points(alpha, 96);
        RealInterval Da = discrepancy(at, suite_tol).value;
        if (!(Da.hi_d() <= 0.5)) continue;  // outside the hypothesis

        std::vector<std::complex<double>> lifted;
        lifted.reserve(m * n);
        for (std::size_t k = 0; k < m; ++k) {
            std::complex<double> root =
                std::polar(std::pow(std::abs(alpha[k]), 1.0 / static_cast<double>(n)),
                           std::arg(alpha[k]) / static_cast<double>(n));
            for (std::size_t l = 0; l < n; ++l)
                lifted.push_back(root * std::polar(1.0, 2 * M_PI * static_cast<double>(l) /
                                                            static_cast<double>(n)));
        }
        RealInterval Dl = discrepancy(PointTuple::from_points(lifted, 96), suite_tol).value;
        ++res.instances;
        double rhs = 2.0 / static_cast<double>(n) * Da.hi_d() + 3 * suite_tol;
        if (Dl.lo_d() > rhs) {
            ++res.violations;
            res.notes.push_back("instance " + std::to_string(res.instances) +
                                ": lifted discrepancy " + Dl.lo_string() + " above " +
                                std::to_string(rhs));
        }
    }
    return res;
}

SuiteResult suite_product_tuple(std::uint64_t seed, std::uint64_t count, double tol) {
    SuiteResult res;
    res.name = "product-tuple";
    std::mt19937_64 rng(seed);
    double suite_tol = std::max(tol, 1e-6);
    while (res.instances < count) {
        std::size_t m = 1 + rng() % 5;
        std::size_t n = 1 + rng() % 5;
        if (std::gcd(m, n) != 1) continue;
        std::vector<std::complex<double>> alpha, beta;
        for (std::size_t i = 0; i < m; ++i) alpha.push_back(random_disk(rng, 2.0));
        for (std::size_t i = 0; i < n; ++i) beta.push_back(random_disk(rng, 2.0));
        RealInterval Da = discrepancy(PointTuple::from_points(alpha, 96), suite_tol).value;
        RealInterval Db = discrepancy(PointTuple::from_points(beta, 96), suite_tol).value;
        std::vector<std::complex<double>> prod;
        prod.reserve(m * n);
        for (const auto& a : alpha)
            for (const auto& b : beta) prod.push_back(a * b);
        RealInterval Dp = discrepancy(PointTuple::from_points(prod, 96), suite_tol).value;
        ++res.instances;
        double rhs = (1 + Da.hi_d()) * (1 + Db.hi_d()) - 1 + 3 * suite_tol;
        if (Dp.lo_d() > rhs) {
            ++res.violations;
            res.notes.push_back("instance " + std::to_string(res.instances) +
                                ": product discrepancy " + Dp.lo_string() + " above " +
                                std::to_string(rhs));
        }
    }
    return res;
}

SuiteResult suite_closed_forms(std::uint64_t seed, std::uint64_t count, double tol) {
    SuiteResult res;
    res.name = "closed-forms";
    std::mt19937_64 rng(seed);
    double suite_tol = std::min(std::max(tol, 1e-9), 1e-6);
    for (std::uint64_t it = 0; it < count; ++it) {
        std::complex<double> xi = random_disk(rng, 4.0);
        double m = std::abs(xi);
        PointTuple single = PointTuple::from_points({xi}, 96);
        RealInterval D1 = discrepancy(single, suite_tol).value;
        PointTuple twice = PointTuple::from_points({xi, xi}, 96);
        RealInterval D2 = discrepancy(twice, suite_tol).value;
        ++res.instances;
        bool ok1 = D1.width() <= suite_tol && std::abs(D1.mid_d() - std::abs(m - 1)) <=
                                                  suite_tol + 1e-9;
        bool ok2 = D2.width() <= suite_tol &&
                   std::abs(D2.mid_d() - std::sqrt(1 + m * m)) <= suite_tol + 1e-9;
        if (!ok1 || !ok2) {
            ++res.violations;
            res.notes.push_back("instance " + std::to_string(it) + ": closed form missed");
        }
    }
    return res;
}

// --- arithmetic suites -------------------------------------------------

SuiteResult suite_fermat_quotient(std::uint64_t, std::uint64_t, double) {
    SuiteResult res;
    res.name = "fermat-quotient-residue";
    for (Integer d = 3; d <= 200; d += 2) {
        if (!is_prime(d)) continue;
        ++res.instances;
        if (fermat_quotient_minus_one_residue(d) != 1) {
            ++res.violations;
            res.notes.push_back("d = " + to_string(d));
        }
    }
    return res;
}

SuiteResult suite_disc_resultant(std::uint64_t, std::uint64_t, double) {
    SuiteResult res;
    res.name = "disc-resultant";
    for (unsigned long d = 2; d <= 6; ++d) {
        for (long n = 2; n <= 30; ++n) {
            bool irreducible = true;
            for (unsigned long p : {2ul, 3ul, 5ul}) {
                if (d % p != 0) continue;
                Integer root;
                if (mpz_root(root.get_mpz_t(), Integer(n).get_mpz_t(), p) != 0)
                    irreducible = false;
            }
            if (!irreducible) continue;
            ++res.instances;
            if (discriminant_via_resultant(PolyZ::pure_radical(d, Integer(n))) !=
                pure_radical_discriminant(Integer(d), Integer(n))) {
                ++res.violations;
                res.notes.push_back("d = " + std::to_string(d) + ", n = " + std::to_string(n));
            }
        }
    }
    return res;
}

bool irreducible_small(const PolyZ& f) {
    long d = f.degree();
    if (d <= 1) return d == 1;
    if (f[0] == 0) return false;
    long bound = 0;
    for (long i = 0; i < d; ++i)
        bound = std::max(bound, std::labs(f[static_cast<std::size_t>(i)].get_si()));
    long rb = 1 + bound;
    for (long r = -rb; r <= rb; ++r)
        if (f.eval(Integer(r)) == 0) return false;
    if (d <= 3) return true;
    for (long b = -2 * rb; b <= 2 * rb; ++b)
        for (long c = -rb * rb; c <= rb * rb; ++c) {
            PolyZ div({Integer(c), Integer(b), Integer(1)});
            if (f.divmod_monic(div).second.is_zero()) return false;
        }
    return true;
}

SuiteResult suite_dedekind_agreement(std::uint64_t, std::uint64_t, double) {
    SuiteResult res;
    res.name = "dedekind-agreement";
    for (int deg = 2; deg <= 5; ++deg) {
        std::vector<long> c(static_cast<std::size_t>(deg), -3);
        for (;;) {
            std::vector<Integer> coeffs;
            for (long x : c) coeffs.emplace_back(x);
            coeffs.emplace_back(1);
            PolyZ f(std::move(coeffs));
            if (irreducible_small(f)) {
                for (unsigned long q : {2ul, 3ul, 5ul}) {
                    ++res.instances;
                    if (dedekind_index_coprime(f, q) != dedekind_index_coprime_factored(f, q)) {
                        ++res.violations;
                        res.notes.push_back(f.to_string() + " at q = " + std::to_string(q));
                    }
                }
            }
            std::size_t pos = 0;
            while (pos < c.size() && ++c[pos] > 3) c[pos++] = -3;
            if (pos == c.size()) break;
        }
    }
    return res;
}

// --- enumeration-backed height suites ----------------------------------

SuiteResult suite_house_top_coeff(std::uint64_t, std::uint64_t, double tol) {
    SuiteResult res;
    res.name = "house-top-coeff";
    double t = std::max(tol, 1e-9);

    auto run_tower = [&](const RadicalTower& tower, const EnumerationSpec& spec) {
        ElementEnumerator en(spec);
        TowerElement e;
        while (en.next(e)) {
            ++res.instances;
            RealInterval floor = house_lower_bound_top_coeff(tower, e, t);
            RealInterval h = house(tower, e, t).value;
            if (h.hi_d() < floor.lo_d() - 3 * t) {
                ++res.violations;
                res.notes.push_back(e.to_string());
            }
        }
    };

    RadicalTower t5;
    t5.steps.push_back({Integer(5), Integer(3), std::nullopt, {}});
    EnumerationSpec s1;
    s1.tower = t5;
    s1.step_index = 1;
    s1.coeff_bound = 2;
    run_tower(t5, s1);

    RadicalTower t2;
    t2.steps.push_back({Integer(251), Integer(7), std::nullopt, {}});
    t2.steps.push_back({Integer(2309), Integer(11), std::nullopt, {}});
    EnumerationSpec s2;
    s2.tower = t2;
    s2.step_index = 2;
    s2.coeff_bound = 1;
    s2.slot_mask = std::vector<TowerElement::Exponents>{
        {0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}};
    run_tower(t2, s2);
    return res;
}

SuiteResult suite_house_floor(std::uint64_t, std::uint64_t, double tol) {
    SuiteResult res;
    res.name = "house-floor";
    double t = std::max(tol, 1e-9);

    auto run_tower = [&](std::initializer_list<std::pair<long, long>> pd,
                         const EnumerationSpec& partial) {
        RadicalTower tower;
        for (auto [p, d] : pd)
            tower.steps.push_back({Integer(p), Integer(d), std::nullopt, {}});
        EnumerationSpec spec = partial;
        spec.tower = tower;
        RealInterval eta = new_element_house_floor(tower, spec.step_index, t);
        ElementEnumerator en(spec);
        TowerElement e;
        while (en.next(e)) {
            ++res.instances;
            RealInterval h = house(tower.prefix(spec.step_index), e, t).value;
            if (h.hi_d() < eta.lo_d() - 3 * t) {
                ++res.violations;
                res.notes.push_back(e.to_string());
            }
        }
        // the minimum is attained at the generator, with equality
        MinScanResult min = empirical_min_house(spec, t);
        if (std::abs(min.value.mid_d() - eta.mid_d()) > 1e-6) {
            ++res.violations;
            res.notes.push_back("minimum not at the generator: " + min.witness.to_string());
        }
    };

    EnumerationSpec small;
    small.step_index = 1;
    small.coeff_bound = 2;
    run_tower({{5, 3}}, small);

    EnumerationSpec masked;
    masked.step_index = 2;
    masked.coeff_bound = 1;
    masked.slot_mask = std::vector<TowerElement::Exponents>{
        {0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}};
    run_tower({{251, 7}, {2309, 11}}, masked);
    return res;
}

SuiteResult suite_weil_floor(std::uint64_t, std::uint64_t count, double tol) {
    SuiteResult res;
    res.name = "weil-floor";
    double t = std::max(tol, 1e-9);
    std::uint64_t towers = 0;
    for (unsigned long d : {2ul, 3ul, 5ul, 7ul}) {
        for (Integer p = 2; p * Integer(d) <= 5000; p = next_prime_above(Rational(p))) {
            if (!is_prime(p) || p == d) continue;
            RealInterval floor = weil_height_step_floor(0.0, p, Integer(d), t);
            if (!(floor.lo_d() > 0)) continue;  // vacuous bound: nothing to test
            if (count > 0 && towers >= count) break;
            ++towers;
            RadicalTower tower;
            tower.steps.push_back({p, Integer(d), std::nullopt, {}});
            EnumerationSpec spec;
            spec.tower = tower;
            spec.step_index = 1;
            spec.coeff_bound = 2;
            MinScanResult min = empirical_min_weil(spec, t);
            ++res.instances;
            if (min.value.lo_d() < floor.lo_d() - 3 * t) {
                ++res.violations;
                res.notes.push_back("tower (" + to_string(p) + ", " + std::to_string(d) +
                                    "): min weil " + min.value.lo_string() + " below floor " +
                                    floor.lo_string());
            }
        }
    }
    return res;
}

SuiteResult suite_linear_form_house(std::uint64_t, std::uint64_t, double tol) {
    SuiteResult res;
    res.name = "linear-form-house";
    double t = std::max(tol, 1e-9);
    RadicalTower tower;
    tower.steps.push_back({Integer(251), Integer(7), std::nullopt, {}});
    tower.steps.push_back({Integer(2309), Integer(11), std::nullopt, {}});
    RadicalTower sub = tower.prefix(1);
    RealInterval xi_house =
        RealInterval::exact_int(Integer(2309), 128).rootn(11);  // house of the top generator

    EnumerationSpec spec;
    spec.tower = tower;
    spec.step_index = 2;
    spec.coeff_bound = 1;
    spec.slot_mask = std::vector<TowerElement::Exponents>{
        {0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}};
    ElementEnumerator en(spec);
    TowerElement e;
    while (en.next(e)) {
        if (e.top_degree(1) != 1) continue;
        TowerElement a1 = e.top_coefficient(1);
        if (a1.is_zero()) continue;
        ++res.instances;
        RealInterval h = house(tower, e, t).value;
        RealInterval rhs = house(sub, a1, t).value * xi_house;
        if (h.hi_d() < rhs.lo_d() - 3 * t) {
            ++res.violations;
            res.notes.push_back(e.to_string());
        }
    }
    return res;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"l2-lower-bound",  "l2-scaled",         "l2-window",
            "root-lift",       "product-tuple",     "fermat-quotient-residue",
            "house-top-coeff", "house-floor",       "weil-floor",
            "linear-form-house", "dedekind-agreement", "disc-resultant",
            "closed-forms"};
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::uint64_t count,
                      double tol) {
    if (name == "l2-lower-bound") return suite_l2(name, seed, count ? count : 1000, tol, 0);
    if (name == "l2-scaled") return suite_l2(name, seed, count ? count : 1000, tol, 1);
    if (name == "l2-window") return suite_l2(name, seed, count ? count : 1000, tol, 2);
    if (name == "root-lift") return suite_root_lift(seed, count ? count : 500, tol);
    if (name == "product-tuple") return suite_product_tuple(seed, count ? count : 500, tol);
    if (name == "fermat-quotient-residue") return suite_fermat_quotient(seed, count, tol);
    if (name == "house-top-coeff") return suite_house_top_coeff(seed, count, tol);
    if (name == "house-floor") return suite_house_floor(seed, count, tol);
    if (name == "weil-floor") return suite_weil_floor(seed, count, tol);
    if (name == "linear-form-house") return suite_linear_form_house(seed, count, tol);
    if (name == "dedekind-agreement") return suite_dedekind_agreement(seed, count, tol);
    if (name == "disc-resultant") return suite_disc_resultant(seed, count, tol);
    if (name == "closed-forms") return suite_closed_forms(seed, count ? count : 200, tol);
    throw InvalidParams("unknown suite \"" + name + "\"; see suite_names()");
}

std::string SuiteResult::to_json_string() const {
    nlohmann::ordered_json j;
    j["suite"] = name;
    j["instances"] = instances;
    j["violations"] = violations;
    j["pass"] = pass();
    j["notes"] = notes;
    return j.dump(2);
}

}  // namespace radtower
