#pragma once

#include "radtower/complex_box.hpp"
#include "radtower/real_interval.hpp"
#include "radtower/tower.hpp"

namespace radtower {

/// D_u: the largest gap max_j min_i |xi_i - u zeta_d^j| between the tuple
/// and the rotated d-th roots of unity, d = tuple size.  u must enclose a
/// point of the unit circle.
RealInterval d_u(const PointTuple& points, const ComplexBox& u);

struct DiscrepancyResult {
    RealInterval value;
    ComplexBox argmin_u;  // witness rotation: D_{argmin_u} <= value.hi
    double grid_step = 0;  // width of the rotation-angle cell at the witness
};

/// The finite discrepancy inf_u D_u, minimized over the rotation angle by
/// branch-and-bound on [0, 2pi/d] (D_u is 2pi/d-periodic: rotating by one
/// root of unity permutes the targets).  Subinterval bounds come from
/// exact cosine ranges over the angle cell, so flat regions prune in one
/// step and the enclosure narrows to width <= tol.
DiscrepancyResult discrepancy(const PointTuple& points, double tol,
                              const NumericBudget& budget = {});

/// Tuple scaled by 1/max|xi_i|; the resulting max modulus encloses 1.
PointTuple normalized_tuple(const PointTuple& points);

/// min(||a||, ||a||^(d-1)) * (1 - d^(3/2) D(a/||a||)) for the root tuple a
/// of a monic polynomial.  May be negative; negative values mean every
/// bound derived from it is vacuous but still correct.
RealInterval eta0(const PointTuple& points, double tol, const NumericBudget& budget = {});

/// eta of step i (1-based) of a radical tower.  Every embedding of the
/// subfield maps the step's minimal polynomial to x^d - p, whose roots are
/// perfectly equidistributed with modulus p^(1/d), so the discrepancy term
/// vanishes and the value is min(p^(1/d), p^((d-1)/d)) exactly enclosed.
RealInterval eta_radical_step(const RadicalTower& tower, std::size_t step, double tol,
                              const NumericBudget& budget = {});

}  // namespace radtower
