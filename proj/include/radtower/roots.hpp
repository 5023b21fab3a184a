#pragma once

#include "radtower/complex_box.hpp"
#include "radtower/polyz.hpp"
#include "radtower/real_interval.hpp"

namespace radtower {

/// All complex roots of a squarefree integer polynomial, each enclosed in
/// a disk of radius <= tol, disks pairwise disjoint (one simple root per
/// disk).  Simultaneous Weierstrass iteration refines midpoint
/// approximations; the a-posteriori disks deg*|W_i| around them provably
/// capture the roots, and pairwise disjointness pins one root per disk.
/// Pure radicals x^d - n short-circuit to the closed form n^(1/d) times a
/// root of unity so the moduli enclosures are as tight as the precision.
PointTuple complex_roots(const PolyZ& f, double tol, const NumericBudget& budget = {});

/// Enclosure of |lead(f)| * prod max(1, |root|) with width <= tol.
/// Repeated factors are split off exactly (Yun) first, so the root solver
/// only ever sees squarefree polynomials.
RealInterval mahler_measure(const PolyZ& f, double tol, const NumericBudget& budget = {});

}  // namespace radtower
