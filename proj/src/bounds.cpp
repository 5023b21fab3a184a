#include "radtower/bounds.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>

#include "radtower/errors.hpp"
#include "radtower/primality.hpp"

namespace radtower {

namespace {

RealInterval d_three_halves(std::size_t d, long prec) {
    return RealInterval::exact_int(Integer(static_cast<unsigned long>(d)), prec)
        .pow_ui(3)
        .sqrt();
}

RealInterval l2_norm(const std::vector<RealInterval>& terms, long prec) {
    RealInterval sum = RealInterval::exact(0.0, prec);
    for (const auto& t : terms) sum = sum + t * t;
    return sum.sqrt();
}

}  // namespace

RealInterval l2_lower_bound(const PointTuple& points, const std::vector<ComplexBox>& coeffs,
                            double tol, const NumericBudget& budget) {
    if (points.empty()) throw ZeroTuple("l2_lower_bound: empty tuple");
    if (coeffs.empty()) throw InvalidParams("l2_lower_bound: no coefficients");
    std::size_t d = points.size();
    if (coeffs.size() > d)
        throw DegreeTooLarge("l2_lower_bound: polynomial degree must be below the tuple size");
    long prec = precision_for_tolerance(tol, budget);

    std::vector<RealInterval> mods;
    mods.reserve(coeffs.size());
    for (const auto& c : coeffs) mods.push_back(c.modulus());
    RealInterval l2 = l2_norm(mods, prec);
    if (coeffs.size() == 1) return l2;

    double inner = tol / (4 * std::pow(static_cast<double>(d), 1.5) *
                          std::max(1.0, points.max_modulus().hi_d()) *
                          std::max(1.0, l2.hi_d()));
    for (;;) {
        RealInterval D = discrepancy(points, std::max(inner, 1e-14), budget).value;
        RealInterval m = points.max_modulus().max_one().pow_ui(d - 2);
        RealInterval factor = RealInterval::exact(1.0, prec) - d_three_halves(d, prec) * D * m;
        RealInterval val = factor * l2;
        if (val.width() <= tol || inner <= 1e-14) return val;
        inner /= 8;
    }
}

RealInterval l2_lower_bound_scaled(const PointTuple& points,
                                   const std::vector<ComplexBox>& coeffs, double tol,
                                   const NumericBudget& budget) {
    if (points.empty()) throw ZeroTuple("l2_lower_bound_scaled: empty tuple");
    if (coeffs.empty()) throw InvalidParams("l2_lower_bound_scaled: no coefficients");
    std::size_t d = points.size();
    if (coeffs.size() > d) throw DegreeTooLarge("l2_lower_bound_scaled: degree too large");
    RealInterval norm = points.max_modulus();
    if (!norm.certainly_positive())
        throw ZeroTuple("l2_lower_bound_scaled: tuple indistinguishable from zero");
    long prec = precision_for_tolerance(tol, budget);

    std::vector<RealInterval> terms;
    terms.reserve(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        terms.push_back(coeffs[i].modulus() * norm.pow_ui(i));
    RealInterval l2 = l2_norm(terms, prec);
    if (coeffs.size() == 1) return l2;

    double inner = tol / (4 * std::pow(static_cast<double>(d), 1.5) *
                          std::max(1.0, l2.hi_d()));
    for (;;) {
        RealInterval D = discrepancy(normalized_tuple(points), std::max(inner, 1e-14), budget).value;
        RealInterval factor = RealInterval::exact(1.0, prec) - d_three_halves(d, prec) * D;
        RealInterval val = factor * l2;
        if (val.width() <= tol || inner <= 1e-14) return val;
        inner /= 8;
    }
}

RealInterval l2_lower_bound_window(const PointTuple& points,
                                   const std::vector<ComplexBox>& coeffs,
                                   const std::vector<std::size_t>& subset,
                                   const std::set<unsigned>& window, double tol,
                                   const NumericBudget& budget) {
    if (points.empty()) throw ZeroTuple("l2_lower_bound_window: empty tuple");
    if (subset.empty()) throw InvalidParams("l2_lower_bound_window: empty index subset");
    if (window.empty()) throw InvalidParams("l2_lower_bound_window: empty exponent window");
    if (coeffs.empty()) throw InvalidParams("l2_lower_bound_window: no coefficients");
    for (std::size_t idx : subset)
        if (idx >= points.size())
            throw InvalidParams("l2_lower_bound_window: index out of range");
    for (unsigned j : window)
        if (j >= coeffs.size())
            throw InvalidParams("l2_lower_bound_window: window exponent out of range");
    for (const auto& b : points.boxes) {
        RealInterval m = b.modulus();
        if (m.certainly_gt(Rational(1)) || m.certainly_lt(Rational(1)))
            throw InvalidParams("l2_lower_bound_window: points must lie on the unit circle");
    }
    unsigned j_min = *window.begin();
    unsigned j_max = *window.rbegin();
    if (!(static_cast<std::size_t>(j_max - j_min) < subset.size()))
        throw InvalidParams("l2_lower_bound_window: window wider than the index subset");

    long prec = precision_for_tolerance(tol, budget);
    PointTuple sub;
    sub.boxes.reserve(subset.size());
    for (std::size_t idx : subset) sub.boxes.push_back(points.boxes[idx]);

    std::vector<RealInterval> in_terms;
    RealInterval out_sum = RealInterval::exact(0.0, prec);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (window.count(static_cast<unsigned>(k)))
            in_terms.push_back(coeffs[k].modulus());
        else
            out_sum = out_sum + coeffs[k].modulus();
    }
    RealInterval l2 = l2_norm(in_terms, prec);

    double inner = tol / (4 * std::pow(static_cast<double>(subset.size()), 1.5) *
                          std::max(1.0, l2.hi_d()));
    for (;;) {
        RealInterval D = discrepancy(sub, std::max(inner, 1e-14), budget).value;
        RealInterval factor =
            RealInterval::exact(1.0, prec) - d_three_halves(subset.size(), prec) * D;
        RealInterval val = factor * l2 - out_sum;
        if (val.width() <= tol || inner <= 1e-14) return val;
        inner /= 8;
    }
}

RealInterval house_lower_bound_top_coeff(const RadicalTower& tower, const TowerElement& elt,
                                         double tol, const NumericBudget& budget) {
    tower.require_valid();
    if (tower.size() == 0) throw EmptyTower("house_lower_bound_top_coeff: empty tower");
    if (elt.arity() != tower.size())
        throw InvalidParams("element arity does not match the tower");
    std::size_t k = tower.size();
    unsigned n = elt.top_degree(k - 1);
    if (n == 0)
        throw NotInTopGenerator(
            "house_lower_bound_top_coeff: element is constant in the top generator");

    TowerElement top_coeff = elt.top_coefficient(n);
    RadicalTower sub = tower.prefix(k - 1);
    const RadicalStep& s = tower.steps[k - 1];
    unsigned long d = s.d.get_ui();

    long prec = precision_for_tolerance(tol, budget);
    for (; prec <= budget.precision_ceiling; prec *= 2) {
        NumericBudget b = budget;
        b.start_precision = prec;
        // Every sigma sends x^d - p to itself: the conjugate tuple of the
        // top step is perfectly equidistributed, discrepancy exactly 0.
        RealInterval coeff_house = house(sub, top_coeff, tol / 2, b).value;
        RealInterval step_norm =
            RealInterval::exact_int(pow_int(s.p, n), prec).rootn(d);  // p^(n/d)
        RealInterval val = coeff_house * step_norm;
        if (val.width() <= tol) return val;
    }
    throw PrecisionFailure("house_lower_bound_top_coeff: tolerance not reached");
}

RealInterval new_element_house_floor(const RadicalTower& tower, std::size_t step, double tol,
                                     const NumericBudget& budget) {
    return eta_radical_step(tower, step, tol, budget);
}

RealInterval weil_height_step_floor(double gamma, const Integer& p, const Integer& d,
                                    double tol, const NumericBudget& budget) {
    if (!is_prime(p) || !is_prime(d) || d < 2)
        throw InvalidParams("weil_height_step_floor: p and d must be prime, d >= 2");
    long prec = precision_for_tolerance(tol, budget);
    RealInterval pl = RealInterval::exact_int(p, prec).log();
    RealInterval dl = RealInterval::exact_int(d, prec).log();
    RealInterval two_d = RealInterval::exact_int(2 * d, prec);
    RealInterval two_d1 = RealInterval::exact_int(2 * (d - 1), prec);
    RealInterval base = pl / two_d - dl / two_d1;
    return RealInterval::exact_int(d, prec).pow_real(gamma) * base;
}

BoundsReport northcott_bounds_report(const RadicalTower& tower, double tol,
                                     std::optional<Rational> claimed_limit,
                                     const NumericBudget& budget) {
    if (tower.size() == 0) throw EmptyTower("northcott_bounds_report: empty tower");
    tower.require_valid();
    long prec = precision_for_tolerance(tol, budget);

    BoundsReport rep;
    rep.claimed_limit = std::move(claimed_limit);
    for (std::size_t i = 1; i <= tower.size(); ++i) {
        rep.eta_values.push_back(eta_radical_step(tower, i, tol, budget));
        // all conjugates of the generator share the modulus p^(1/d)
        const RadicalStep& s = tower.steps[i - 1];
        rep.house_values.push_back(
            RealInterval::exact_int(s.p, prec).rootn(s.d.get_ui()));
    }
    rep.prefix_liminf_eta = rep.eta_values[0];
    rep.prefix_min_house = rep.house_values[0];
    for (std::size_t i = 1; i < rep.eta_values.size(); ++i) {
        rep.prefix_liminf_eta = RealInterval::min(rep.prefix_liminf_eta, rep.eta_values[i]);
        rep.prefix_min_house = RealInterval::min(rep.prefix_min_house, rep.house_values[i]);
    }
    return rep;
}

std::string BoundsReport::to_json_string() const {
    using nlohmann::ordered_json;
    ordered_json j;
    auto iv = [](const RealInterval& r) {
        return ordered_json{{"lo", r.lo_string()}, {"hi", r.hi_string()}};
    };
    auto list = [&](const std::vector<RealInterval>& v) {
        ordered_json a = ordered_json::array();
        for (const auto& r : v) a.push_back(iv(r));
        return a;
    };
    j["eta_values"] = list(eta_values);
    j["house_values"] = list(house_values);
    ordered_json informative = ordered_json::array();
    for (const auto& e : eta_values) informative.push_back(e.certainly_positive());
    j["eta_informative"] = informative;
    j["prefix_liminf_eta"] = iv(prefix_liminf_eta);
    j["prefix_min_house"] = iv(prefix_min_house);
    j["claimed_limit"] =
        claimed_limit ? ordered_json(to_string(*claimed_limit)) : ordered_json(nullptr);
    j["finite_prefix_evidence"] = true;
    if (!weil_heights.empty()) j["weil_heights"] = list(weil_heights);
    if (!weighted_heights.empty()) {
        j["weighted_heights"] = list(weighted_heights);
        j["weighted_gamma"] = weighted_gamma ? *weighted_gamma : 0.0;
    }
    if (!step_height_floors.empty()) j["step_height_floors"] = list(step_height_floors);
    if (target_window)
        j["target_window"] = {to_string(target_window->first),
                              to_string(target_window->second)};
    if (!documentation.empty()) j["documentation"] = documentation;
    return j.dump();
}

}  // namespace radtower
