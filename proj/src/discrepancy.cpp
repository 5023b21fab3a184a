#include "radtower/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "radtower/errors.hpp"

namespace radtower {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// ---------------------------------------------------------------------
// Double intervals with conservative inflation.  Inputs are moderate
// (|x| <= 1e12) so a relative fudge of 1e-13 plus a tiny absolute term
// dominates every rounding and libm error involved.
// ---------------------------------------------------------------------

struct DI {
    double lo, hi;
};

DI di_widen(DI x) {
    double s = 1e-13 * std::max(std::abs(x.lo), std::abs(x.hi)) + 1e-290;
    return {x.lo - s, x.hi + s};
}

DI di_add(DI a, DI b) { return di_widen({a.lo + b.lo, a.hi + b.hi}); }
DI di_sub(DI a, DI b) { return di_widen({a.lo - b.hi, a.hi - b.lo}); }

DI di_mul(DI a, DI b) {
    double p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return di_widen({std::min(std::min(p[0], p[1]), std::min(p[2], p[3])),
                     std::max(std::max(p[0], p[1]), std::max(p[2], p[3]))});
}

DI di_sqrt_nonneg(DI a) {
    double lo = a.lo > 0 ? std::sqrt(a.lo) : 0.0;
    double hi = a.hi > 0 ? std::sqrt(a.hi) : 0.0;
    return di_widen({lo, hi});
}

// Range of |sin| over [a, b]; |sin| has period pi with peaks at pi/2 + k pi
// and zeros at k pi.
DI di_abs_sin_range(double a, double b) {
    if (!(b >= a)) std::swap(a, b);
    if (b - a >= M_PI) return {0.0, 1.0};
    double sa = std::abs(std::sin(a)), sb = std::abs(std::sin(b));
    double lo = std::min(sa, sb), hi = std::max(sa, sb);
    if (std::ceil(a / M_PI) <= std::floor(b / M_PI)) lo = 0.0;  // k pi inside
    if (std::ceil(a / M_PI - 0.5) <= std::floor(b / M_PI - 0.5)) hi = 1.0;
    lo = std::max(0.0, lo * (1 - 1e-13) - 1e-290);
    hi = std::min(1.0, hi * (1 + 1e-13) + 1e-290);
    return {lo, hi};
}

// Square of an interval (result is the range of x^2, never negative).
DI di_square(DI x) {
    double alo = std::abs(x.lo), ahi = std::abs(x.hi);
    double mx = std::max(alo, ahi);
    double mn = (x.lo <= 0 && x.hi >= 0) ? 0.0 : std::min(alo, ahi);
    return di_widen({mn * mn, mx * mx});
}

// Polar view of one point for the rotation search: modulus range and an
// angle sector wide enough to contain the whole disk.
struct PolarPoint {
    DI mod;        // [max(0,|c|-r), |c|+r]
    double arg;    // atan2 of the center
    double aslack; // angular halfwidth of the disk sector (pi if it holds 0)
};

bool make_polar(const PointTuple& points, std::vector<PolarPoint>& out) {
    out.clear();
    out.reserve(points.size());
    for (const auto& b : points.boxes) {
        double re = b.re_d(), im = b.im_d(), r = b.rad();
        if (!std::isfinite(re) || !std::isfinite(im) || !(r < 1e12)) return false;
        double m = std::hypot(re, im);
        if (!(m < 1e12)) return false;
        PolarPoint p;
        double conv = 1e-13 * (std::abs(re) + std::abs(im) + m) + 1e-290;
        p.mod = {std::max(0.0, m - r - conv), m + r + conv};
        p.arg = std::atan2(im, re);
        if (r + conv < 0.99 * m) {
            p.aslack = std::asin((r + conv) / m) * 1.000001 + 1e-12;
        } else {
            p.aslack = M_PI;  // disk reaches near or past the origin
        }
        out.push_back(p);
    }
    return true;
}

// Range of |p - e^(i phi)| over phi in [a, b], in the cancellation-free
// form |p - e^(i phi)|^2 = (m - 1)^2 + 4 m sin^2(delta/2), delta = arg - phi.
// Both terms are nonnegative, so the error stays relative even at zero.
DI dist_to_arc(const PolarPoint& p, double a, double b) {
    double dlo = (p.arg - b - p.aslack) / 2;
    double dhi = (p.arg - a + p.aslack) / 2;
    DI s2 = di_square(di_abs_sin_range(dlo, dhi));
    DI md2 = di_square(di_sub(p.mod, {1.0, 1.0}));
    DI term = di_mul({4 * p.mod.lo, 4 * p.mod.hi}, s2);
    DI d2 = di_add(md2, term);
    if (d2.lo < 0) d2.lo = 0;
    return di_sqrt_nonneg(d2);
}

// Range of D over the rotation-angle cell [a, b]: interval evaluation of
// max_j min_i of the point-to-arc distances.
DI d_over_cell(const std::vector<PolarPoint>& pts, double a, double b) {
    std::size_t d = pts.size();
    DI worst{0.0, 0.0};
    for (std::size_t j = 0; j < d; ++j) {
        double shift = kTwoPi * static_cast<double>(j) / static_cast<double>(d);
        DI best{1e308, 1e308};
        for (std::size_t i = 0; i < d; ++i) {
            DI dist = dist_to_arc(pts[i], a + shift, b + shift);
            best.lo = std::min(best.lo, dist.lo);
            best.hi = std::min(best.hi, dist.hi);
        }
        worst.lo = std::max(worst.lo, best.lo);
        worst.hi = std::max(worst.hi, best.hi);
    }
    return worst;
}

struct Cell {
    double a, b, lb;
};
struct CellOrder {
    bool operator()(const Cell& x, const Cell& y) const { return x.lb > y.lb; }
};

struct SearchResult {
    double lb = 0, ub = 0, theta = 0, step = 0;
    bool ok = false;
};

SearchResult rotation_search(const std::vector<PolarPoint>& pts, double tol) {
    std::size_t d = pts.size();
    double period = kTwoPi / static_cast<double>(d) * (1 + 1e-15);

    double ub = 1e308, theta = 0, step = period;
    auto consider = [&](double t, double width) {
        DI v = d_over_cell(pts, t, t);
        if (v.hi < ub) {
            ub = v.hi;
            theta = t;
            step = width;
        }
    };
    consider(0.0, period);
    for (const auto& p : pts) {
        double t = std::fmod(p.arg, period);
        if (t < 0) t += period;
        if (t >= 0 && t <= period) consider(t, period);
    }

    std::priority_queue<Cell, std::vector<Cell>, CellOrder> heap;
    double pruned_min = 1e308;
    DI root = d_over_cell(pts, 0.0, period);
    heap.push({0.0, period, std::max(0.0, root.lo)});

    SearchResult res;
    for (long evals = 0; evals < 2000000;) {
        if (heap.empty()) {
            res.lb = std::max(0.0, std::min(pruned_min, ub));
            res.ub = ub;
            res.theta = theta;
            res.step = step;
            res.ok = true;
            return res;
        }
        Cell c = heap.top();
        double lb = std::max(0.0, std::min(c.lb, pruned_min));
        if (ub - lb <= tol) {
            res.lb = lb;
            res.ub = ub;
            res.theta = theta;
            res.step = step;
            res.ok = true;
            return res;
        }
        heap.pop();
        double mid = c.a + (c.b - c.a) / 2;
        consider(mid, c.b - c.a);
        for (int half = 0; half < 2; ++half) {
            double a = half == 0 ? c.a : mid;
            double b = half == 0 ? mid : c.b;
            DI v = d_over_cell(pts, a, b);
            evals += 1;
            double child_lb = std::max(0.0, v.lo);
            if (child_lb >= ub) {
                pruned_min = std::min(pruned_min, child_lb);
            } else {
                heap.push({a, b, child_lb});
            }
        }
    }
    return res;  // eval budget exhausted
}

}  // namespace

RealInterval d_u(const PointTuple& points, const ComplexBox& u) {
    if (points.empty()) throw ZeroTuple("d_u of an empty tuple");
    RealInterval um = u.modulus();
    if (um.certainly_gt(Rational(1)) || um.certainly_lt(Rational(1)))
        throw InvalidParams("d_u: rotation enclosure excludes the unit circle");
    std::size_t d = points.size();
    long prec = std::max<long>(u.precision(), points.boxes[0].precision());
    RealInterval worst = RealInterval::exact(0.0, prec);
    for (std::size_t j = 0; j < d; ++j) {
        ComplexBox target = u * ComplexBox::root_of_unity(j, static_cast<unsigned long>(d), prec);
        RealInterval best = distance(points.boxes[0], target);
        for (std::size_t i = 1; i < d; ++i)
            best = RealInterval::min(best, distance(points.boxes[i], target));
        worst = RealInterval::max(worst, best);
    }
    return worst;
}

DiscrepancyResult discrepancy(const PointTuple& points, double tol,
                              const NumericBudget& budget) {
    if (points.empty()) throw ZeroTuple("discrepancy of an empty tuple");
    if (!(tol > 0)) throw InvalidParams("discrepancy: tol must be positive");

    std::vector<PolarPoint> pts;
    if (!make_polar(points, pts))
        throw PrecisionFailure("discrepancy: points outside the supported range");

    // Interval data noise (point radii) caps how tight the answer can get;
    // ask the search for a slightly tighter gap and report what it found.
    SearchResult s = rotation_search(pts, tol * 0.9);
    if (!s.ok) throw PrecisionFailure("discrepancy: rotation search budget exhausted");
    if (s.ub - s.lb > tol)
        throw PrecisionFailure(
            "discrepancy: enclosure width limited by the input point radii");

    long prec = precision_for_tolerance(tol, budget);
    DiscrepancyResult out{RealInterval::from_endpoints(s.lb, s.ub, prec),
                          ComplexBox::unit(s.theta, prec), s.step};
    return out;
}

PointTuple normalized_tuple(const PointTuple& points) {
    if (points.empty()) throw ZeroTuple("normalized_tuple of an empty tuple");
    RealInterval norm = points.max_modulus();
    if (!norm.certainly_positive())
        throw ZeroTuple("normalized_tuple: tuple indistinguishable from zero");
    PointTuple out;
    out.boxes.reserve(points.size());
    for (const auto& b : points.boxes) out.boxes.push_back(b.div_pos(norm));
    return out;
}

RealInterval eta0(const PointTuple& points, double tol, const NumericBudget& budget) {
    if (points.empty()) throw ZeroTuple("eta0 of an empty tuple");
    if (!(tol > 0)) throw InvalidParams("eta0: tol must be positive");
    std::size_t d = points.size();
    long prec = precision_for_tolerance(tol, budget);

    RealInterval norm = points.max_modulus();
    if (!norm.certainly_positive())
        throw ZeroTuple("eta0: tuple indistinguishable from zero");

    double d32 = std::pow(static_cast<double>(d), 1.5) * 1.01;
    double scale_hi = std::max(1.0, norm.pow_ui(d > 0 ? d - 1 : 0).hi_d());
    double inner_tol = tol / (4.0 * d32 * std::max(1.0, scale_hi));
    inner_tol = std::max(inner_tol, 1e-14);

    for (;;) {
        DiscrepancyResult D = discrepancy(normalized_tuple(points), inner_tol, budget);
        RealInterval d_pow =
            RealInterval::exact_int(Integer(static_cast<unsigned long>(d)), prec)
                .pow_ui(3)
                .sqrt();
        RealInterval factor = RealInterval::exact(1.0, prec) - d_pow * D.value;
        RealInterval lead =
            RealInterval::min(norm, norm.pow_ui(static_cast<unsigned long>(d - 1)));
        RealInterval val = lead * factor;
        if (val.width() <= tol) return val;
        if (inner_tol <= 1e-14)
            throw PrecisionFailure("eta0: enclosure width limited by the input point radii");
        inner_tol /= 8;
    }
}

RealInterval eta_radical_step(const RadicalTower& tower, std::size_t step, double tol,
                              const NumericBudget& budget) {
    if (step < 1 || step > tower.size()) throw InvalidStep("eta_radical_step: bad index");
    tower.require_valid_through(step);
    if (!(tol > 0)) throw InvalidParams("eta_radical_step: tol must be positive");
    const RadicalStep& s = tower.steps[step - 1];
    unsigned long d = s.d.get_ui();
    long prec = precision_for_tolerance(tol, budget);
    for (; prec <= budget.precision_ceiling; prec *= 2) {
        RealInterval base = RealInterval::exact_int(s.p, prec);
        RealInterval lo_root = base.rootn(d);                           // p^(1/d)
        RealInterval hi_root = base.pow_ui(d - 1).rootn(d);             // p^((d-1)/d)
        RealInterval val = RealInterval::min(lo_root, hi_root);
        if (val.width() <= tol) return val;
    }
    throw PrecisionFailure("eta_radical_step: tolerance not reached below the ceiling");
}

}  // namespace radtower
