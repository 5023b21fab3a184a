#include "radtower/heights.hpp"

#include <algorithm>
#include <numeric>

#include "radtower/errors.hpp"

namespace radtower {

namespace {

// sigma(x_i)^m for sigma(x_i) = p^(1/d) zeta_d^j is p^(m/d) zeta_d^(jm),
// built directly from rootn(p^m, d) so every table entry is ulp-tight
// instead of accumulating box-product error.
struct ConjugateTable {
    // pow[i][j][m]
    std::vector<std::vector<std::vector<ComplexBox>>> pow;
};

ConjugateTable build_table(const RadicalTower& tower, long prec,
                           const std::vector<unsigned>& branch_offsets) {
    ConjugateTable t;
    t.pow.resize(tower.size());
    for (std::size_t i = 0; i < tower.size(); ++i) {
        unsigned long d = tower.steps[i].d.get_ui();
        unsigned off = branch_offsets.empty() ? 0u : branch_offsets[i];
        t.pow[i].resize(d);
        std::vector<RealInterval> mods;
        mods.reserve(d);
        for (unsigned long m = 0; m < d; ++m)
            mods.push_back(RealInterval::exact_int(pow_int(tower.steps[i].p, m), prec).rootn(d));
        for (unsigned long j = 0; j < d; ++j) {
            t.pow[i][j].reserve(d);
            for (unsigned long m = 0; m < d; ++m) {
                ComplexBox zeta =
                    ComplexBox::root_of_unity(((j + off) % d) * m % d, d, prec);
                ComplexBox mod =
                    ComplexBox::from_intervals(mods[m], RealInterval::exact(0.0, prec));
                t.pow[i][j].push_back(mod * zeta);
            }
        }
    }
    return t;
}

PointTuple embeddings_at(const RadicalTower& tower, const TowerElement& elt, long prec,
                         const std::vector<unsigned>& branch_offsets) {
    unsigned long total = tower.degree_ul();
    ConjugateTable table = build_table(tower, prec, branch_offsets);

    PointTuple out;
    out.boxes.reserve(total);
    std::vector<unsigned long> branch(tower.size(), 0);
    for (unsigned long e = 0; e < total; ++e) {
        ComplexBox val = ComplexBox::exact(0.0, 0.0, prec);
        for (const auto& [exps, coeff] : elt.terms()) {
            ComplexBox term = ComplexBox::exact_int(coeff, prec);
            for (std::size_t i = 0; i < tower.size(); ++i) {
                if (exps[i] == 0) continue;
                term = term * table.pow[i][branch[i]][exps[i]];
            }
            val = val + term;
        }
        out.boxes.push_back(std::move(val));
        // odometer over the branch tuple
        for (std::size_t i = 0; i < tower.size(); ++i) {
            if (++branch[i] < tower.steps[i].d.get_ui()) break;
            branch[i] = 0;
        }
    }
    return out;
}

double max_box_width(const PointTuple& t) {
    double w = 0;
    for (const auto& b : t.boxes) w = std::max(w, 2 * b.rad());
    return w;
}

}  // namespace

PointTuple embeddings(const RadicalTower& tower, const TowerElement& elt, double tol,
                      const NumericBudget& budget,
                      const std::vector<unsigned>& branch_offsets) {
    tower.require_valid();
    if (elt.arity() != tower.size())
        throw InvalidParams("element arity does not match the tower");
    if (!branch_offsets.empty() && branch_offsets.size() != tower.size())
        throw InvalidParams("branch offsets must cover every tower step");
    if (!(tol > 0)) throw InvalidParams("embeddings: tol must be positive");
    long prec = precision_for_tolerance(tol, budget);
    for (; prec <= budget.precision_ceiling; prec *= 2) {
        PointTuple t = embeddings_at(tower, elt, prec, branch_offsets);
        if (max_box_width(t) <= tol) return t;
    }
    throw PrecisionFailure("embeddings: tolerance not reached below the precision ceiling");
}

HeightValue house(const RadicalTower& tower, const TowerElement& elt, double tol,
                  const NumericBudget& budget) {
    if (elt.is_zero()) throw ZeroElement("house of the zero element");
    tower.require_valid();
    if (elt.arity() != tower.size())
        throw InvalidParams("element arity does not match the tower");
    long prec = precision_for_tolerance(tol, budget);
    for (; prec <= budget.precision_ceiling; prec *= 2) {
        PointTuple t = embeddings_at(tower, elt, prec, {});
        RealInterval m = t.max_modulus().clamp_floor(1.0);
        if (m.width() <= tol) return {std::move(m), HeightKind::House, 0.0};
    }
    throw PrecisionFailure("house: tolerance not reached below the precision ceiling");
}

HeightValue weil_height_integral(const RadicalTower& tower, const TowerElement& elt,
                                 double tol, const NumericBudget& budget) {
    if (elt.is_zero()) throw ZeroElement("weil height of the zero element");
    tower.require_valid();
    if (elt.arity() != tower.size())
        throw InvalidParams("element arity does not match the tower");
    long prec = precision_for_tolerance(tol, budget);
    for (; prec <= budget.precision_ceiling; prec *= 2) {
        PointTuple t = embeddings_at(tower, elt, prec, {});
        RealInterval sum = RealInterval::exact(0.0, prec);
        for (const auto& box : t.boxes) {
            RealInterval m = box.modulus();
            // log^+ |sigma| with the interval split at 1
            if (m.certainly_ge(Rational(1))) {
                sum = sum + m.log();
            } else if (m.certainly_le(Rational(1))) {
                // contributes zero
            } else {
                RealInterval upper = m.max_one().log();
                RealInterval piece(prec);
                mpfr_set_zero(piece.lo_mut(), 1);
                mpfr_set(piece.hi_mut(), upper.hi(), MPFR_RNDU);
                sum = sum + piece;
            }
        }
        RealInterval h =
            (sum / RealInterval::exact_int(tower.degree(), prec)).clamp_floor(0.0);
        if (h.width() <= tol) return {std::move(h), HeightKind::Weil, 0.0};
    }
    throw PrecisionFailure("weil height: tolerance not reached below the precision ceiling");
}

RealInterval weighted_height(double gamma, const Integer& degree, const RealInterval& h) {
    if (degree < 1) throw InvalidParams("weighted_height: degree must be >= 1");
    RealInterval deg = RealInterval::exact_int(degree, h.precision());
    return deg.pow_real(gamma) * h;
}

Integer element_degree_over_Q(const RadicalTower& tower, const TowerElement& elt,
                              double tol, const NumericBudget& budget) {
    if (elt.is_zero()) throw ZeroElement("degree of the zero element");
    tower.require_valid();
    if (elt.arity() != tower.size())
        throw InvalidParams("element arity does not match the tower");

    // Generators have Eisenstein minimal polynomials of known degree.
    for (std::size_t i = 0; i < tower.size(); ++i)
        if (elt == TowerElement::generator(tower, i + 1)) return tower.steps[i].d;

    std::size_t agreed = 0;  // consecutive precision levels with the same answer
    std::size_t last_clusters = 0;
    long prec = precision_for_tolerance(tol, budget);
    for (; prec <= budget.precision_ceiling; prec *= 2) {
        PointTuple t = embeddings_at(tower, elt, prec, {});
        std::size_t n = t.size();
        // union-find over overlapping boxes
        std::vector<std::size_t> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                RealInterval gap = distance(t.boxes[i], t.boxes[j]);
                if (!(gap.lo_d() > 0)) {
                    std::size_t a = find(i), b = find(j);
                    if (a != b) parent[a] = b;
                }
            }
        std::vector<std::size_t> count(n, 0);
        for (std::size_t i = 0; i < n; ++i) ++count[find(i)];
        std::size_t cluster_size = 0;
        bool uniform = true;
        std::size_t clusters = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (count[i] == 0) continue;
            ++clusters;
            if (cluster_size == 0)
                cluster_size = count[i];
            else if (count[i] != cluster_size)
                uniform = false;
        }
        if (uniform && cluster_size > 0 && n % cluster_size == 0) {
            // accept once two consecutive precision levels agree, so a
            // coarse accidental merge does not slip through
            if (agreed > 0 && last_clusters == clusters)
                return Integer(static_cast<unsigned long>(clusters));
            last_clusters = clusters;
            agreed = 1;
        } else {
            agreed = 0;  // unequal clusters: boxes too coarse, refine
        }
    }
    throw Indeterminate(
        "element degree: embedding values did not separate below the precision ceiling");
}

}  // namespace radtower
