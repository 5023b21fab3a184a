#pragma once

#include <optional>
#include <set>
#include <vector>

#include "radtower/discrepancy.hpp"
#include "radtower/heights.hpp"

namespace radtower {

/// Lower bound for max_i |B(xi_i)| with deg B < d = tuple size:
/// (1 - d^(3/2) D(xi) max(1,|xi_i|)^(d-2)) * l2-norm of the coefficients.
/// With a constant B the first factor is omitted (the mean-square argument
/// needs no rotation control there).  May be negative (vacuous but valid).
RealInterval l2_lower_bound(const PointTuple& points,
                            const std::vector<ComplexBox>& coeffs, double tol,
                            const NumericBudget& budget = {});

/// Scaled variant: the discrepancy is taken of the normalized tuple and
/// the l2-norm of the coefficients b_i ||xi||^i.
RealInterval l2_lower_bound_scaled(const PointTuple& points,
                                   const std::vector<ComplexBox>& coeffs, double tol,
                                   const NumericBudget& budget = {});

/// Window variant for points on the unit circle: for an index subset I of
/// the tuple and an exponent window J with max J - min J < |I|,
/// (1 - |I|^(3/2) D_I) * sqrt(sum_{j in J} |b_j|^2) - sum_{k not in J} |b_k|.
RealInterval l2_lower_bound_window(const PointTuple& points,
                                   const std::vector<ComplexBox>& coeffs,
                                   const std::vector<std::size_t>& subset,
                                   const std::set<unsigned>& window, double tol,
                                   const NumericBudget& budget = {});

/// House floor for an element written in the top generator with sub-tower
/// coefficients: max over sub-tower embeddings sigma of
/// |sigma(a_n)| * ||roots of x^(d_k) - p_k||^n, n the top degree.  For a
/// radical step the conjugate tuple is perfectly equidistributed for every
/// sigma, so the discrepancy factor is exactly 1.
RealInterval house_lower_bound_top_coeff(const RadicalTower& tower,
                                         const TowerElement& elt, double tol,
                                         const NumericBudget& budget = {});

/// Floor for the house of every element in O_i \ O_{i-1}: eta of step i.
RealInterval new_element_house_floor(const RadicalTower& tower, std::size_t step,
                                     double tol, const NumericBudget& budget = {});

/// d^gamma * (log(p)/(2d) - log(d)/(2(d-1))): the Weil-height floor for
/// new elements of a radical step whose prime is fresh.  May be negative
/// for small steps (vacuous but still returned).
RealInterval weil_height_step_floor(double gamma, const Integer& p, const Integer& d,
                                    double tol, const NumericBudget& budget = {});

/// Per-step evidence for the Northcott-number sandwich: eta values below,
/// houses above, with finite-prefix aggregates.  The aggregates are
/// evidence about the computed prefix only; no asymptotic claim is made.
struct BoundsReport {
    std::vector<RealInterval> eta_values;
    std::vector<RealInterval> house_values;
    RealInterval prefix_liminf_eta;
    RealInterval prefix_min_house;
    std::optional<Rational> claimed_limit;

    // Construction-specific extras (empty when not applicable).
    std::vector<RealInterval> weil_heights;        // log p_i / d_i
    std::vector<RealInterval> weighted_heights;    // d_i^gamma' * log p_i / d_i
    std::optional<double> weighted_gamma;          // the gamma' used above
    std::vector<RealInterval> step_height_floors;  // weil_height_step_floor per step
    std::optional<std::pair<Rational, Rational>> target_window;
    std::vector<std::string> documentation;        // free-form notes, none load-bearing

    std::string to_json_string() const;
};

BoundsReport northcott_bounds_report(const RadicalTower& tower, double tol,
                                     std::optional<Rational> claimed_limit = {},
                                     const NumericBudget& budget = {});

}  // namespace radtower
