#pragma once

#include "radtower/complex_box.hpp"
#include "radtower/real_interval.hpp"
#include "radtower/tower.hpp"

namespace radtower {

enum class HeightKind { House, Weil, Weighted };

struct HeightValue {
    RealInterval value;
    HeightKind kind = HeightKind::House;
    double gamma = 0.0;  // only meaningful for Weighted
};

/// All prod(d_i) embedding values of the element, indexed by the branch
/// tuple (j_1, ..., j_k) with sigma(x_i) = p_i^(1/d_i) * zeta_{d_i}^{j_i};
/// each value enclosed within tol.  `branch_offsets`, when given, rotates
/// the branch labelling of each generator; the multiset of values is the
/// same, which is what the branch-invariance property checks.
PointTuple embeddings(const RadicalTower& tower, const TowerElement& elt, double tol,
                      const NumericBudget& budget = {},
                      const std::vector<unsigned>& branch_offsets = {});

/// Max modulus over all embeddings (the house), width <= tol.  Lower
/// endpoint clamped at 1 (every nonzero algebraic integer has house >= 1).
HeightValue house(const RadicalTower& tower, const TowerElement& elt, double tol,
                  const NumericBudget& budget = {});

/// Weil height of an integral tower element: the average of log^+ of the
/// conjugate moduli over all embeddings of the top field (finite places
/// contribute nothing for algebraic integers).
HeightValue weil_height_integral(const RadicalTower& tower, const TowerElement& elt,
                                 double tol, const NumericBudget& budget = {});

/// degree^gamma * h, outward-rounded; gamma may be negative.
RealInterval weighted_height(double gamma, const Integer& degree, const RealInterval& h);

/// Degree of the minimal polynomial over Q, computed by separating the
/// embedding values: the multiset of values covers each conjugate exactly
/// deg(tower)/deg(elt) times, so the degree is the number of distinct
/// values.  Clusters are formed by box overlap with internal refinement;
/// throws Indeterminate if values never separate below the ceiling.
Integer element_degree_over_Q(const RadicalTower& tower, const TowerElement& elt,
                              double tol = 1e-9, const NumericBudget& budget = {});

}  // namespace radtower
