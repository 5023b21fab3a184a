#include "radtower/roots.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "radtower/errors.hpp"

namespace radtower {

namespace {

// Midpoint complex arithmetic at a fixed precision, for the iteration
// itself; certification happens separately in disk arithmetic.
struct MpC {
    mpfr_t re, im;
    explicit MpC(long prec) {
        mpfr_init2(re, prec);
        mpfr_init2(im, prec);
        mpfr_set_zero(re, 1);
        mpfr_set_zero(im, 1);
    }
    MpC(MpC&& o) noexcept {
        re[0] = o.re[0];
        im[0] = o.im[0];
        mpfr_init2(o.re, 24);
        mpfr_init2(o.im, 24);
        mpfr_set_zero(o.re, 1);
        mpfr_set_zero(o.im, 1);
    }
    MpC(const MpC&) = delete;
    MpC& operator=(const MpC&) = delete;
    ~MpC() {
        mpfr_clear(re);
        mpfr_clear(im);
    }
};

class Workspace {
  public:
    explicit Workspace(long prec) {
        mpfr_inits2(prec, t1_, t2_, t3_, static_cast<mpfr_ptr>(nullptr));
    }
    ~Workspace() { mpfr_clears(t1_, t2_, t3_, static_cast<mpfr_ptr>(nullptr)); }

    static void set(MpC& z, double re, double im) {
        mpfr_set_d(z.re, re, MPFR_RNDN);
        mpfr_set_d(z.im, im, MPFR_RNDN);
    }
    static void sub(MpC& out, const MpC& a, const MpC& b) {
        mpfr_sub(out.re, a.re, b.re, MPFR_RNDN);
        mpfr_sub(out.im, a.im, b.im, MPFR_RNDN);
    }
    void mul(MpC& out, const MpC& a, const MpC& b) {
        mpfr_fmms(t1_, a.re, b.re, a.im, b.im, MPFR_RNDN);
        mpfr_fmma(t2_, a.re, b.im, a.im, b.re, MPFR_RNDN);
        mpfr_set(out.re, t1_, MPFR_RNDN);
        mpfr_set(out.im, t2_, MPFR_RNDN);
    }
    void div(MpC& out, const MpC& a, const MpC& b) {
        mpfr_fmma(t3_, b.re, b.re, b.im, b.im, MPFR_RNDN);  // |b|^2
        mpfr_fmma(t1_, a.re, b.re, a.im, b.im, MPFR_RNDN);
        mpfr_fmms(t2_, a.im, b.re, a.re, b.im, MPFR_RNDN);
        mpfr_div(out.re, t1_, t3_, MPFR_RNDN);
        mpfr_div(out.im, t2_, t3_, MPFR_RNDN);
    }
    static void mul_z(MpC& out, const Integer& k) {
        mpfr_mul_z(out.re, out.re, k.get_mpz_t(), MPFR_RNDN);
        mpfr_mul_z(out.im, out.im, k.get_mpz_t(), MPFR_RNDN);
    }
    static void add_z(MpC& out, const Integer& k) {
        mpfr_add_z(out.re, out.re, k.get_mpz_t(), MPFR_RNDN);
    }
    double abs2(const MpC& a) {
        mpfr_fmma(t3_, a.re, a.re, a.im, a.im, MPFR_RNDN);
        return mpfr_get_d(t3_, MPFR_RNDN);
    }

  private:
    mpfr_t t1_, t2_, t3_;
};

void eval_poly(Workspace& ws, MpC& out, const PolyZ& f, const MpC& z, MpC& tmp) {
    Workspace::set(out, 0.0, 0.0);
    for (long i = f.degree(); i >= 0; --i) {
        ws.mul(tmp, out, z);
        mpfr_set(out.re, tmp.re, MPFR_RNDN);
        mpfr_set(out.im, tmp.im, MPFR_RNDN);
        Workspace::add_z(out, f[static_cast<std::size_t>(i)]);
    }
}

bool is_pure_radical(const PolyZ& f, Integer& n_out) {
    long d = f.degree();
    if (d < 1 || !f.is_monic()) return false;
    if (f[0] >= 0) return false;
    for (long i = 1; i < d; ++i)
        if (f[static_cast<std::size_t>(i)] != 0) return false;
    n_out = -f[0];
    return true;
}

PointTuple pure_radical_roots(unsigned long d, const Integer& n, long prec) {
    RealInterval mod = RealInterval::exact_int(n, prec).rootn(d);
    PointTuple out;
    out.boxes.reserve(d);
    for (unsigned long j = 0; j < d; ++j) {
        ComplexBox zeta = ComplexBox::root_of_unity(j, d, prec);
        ComplexBox m = ComplexBox::from_intervals(mod, RealInterval::exact(0.0, prec));
        out.boxes.push_back(m * zeta);
    }
    return out;
}

struct Certified {
    PointTuple tuple;
    double max_rad = 0.0;
    bool ok = false;
};

// Weierstrass disks: with W_i = f(z_i) / (lead * prod_{j != i} (z_i - z_j))
// every root of f lies in the union of the disks D(z_i, deg * |W_i|), and a
// disk disjoint from all others contains exactly one root.
Certified certify(const PolyZ& f, const std::vector<ComplexBox>& centers, long prec) {
    std::size_t d = centers.size();
    Certified out;
    out.tuple.boxes.reserve(d);
    std::vector<double> radii(d);
    for (std::size_t i = 0; i < d; ++i) {
        ComplexBox acc = ComplexBox::exact(0.0, 0.0, prec);
        for (long k = f.degree(); k >= 0; --k) {
            acc = acc * centers[i];
            acc = acc + ComplexBox::exact_int(f[static_cast<std::size_t>(k)], prec);
        }
        RealInterval denom = RealInterval::exact_int(abs(f.leading()), prec);
        for (std::size_t j = 0; j < d; ++j) {
            if (j == i) continue;
            denom = denom * distance(centers[i], centers[j]);
        }
        if (!denom.certainly_positive()) return out;  // collision; caller refines
        RealInterval w = acc.modulus() / denom;
        radii[i] = w.hi_d() * static_cast<double>(d) * (1 + 1e-14);
        ComplexBox disk = centers[i];
        disk.inflate(radii[i]);
        out.tuple.boxes.push_back(std::move(disk));
        out.max_rad = std::max(out.max_rad, radii[i]);
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            RealInterval gap = distance(centers[i], centers[j]);
            double need = (radii[i] + radii[j]) * (1 + 1e-14);
            if (!(gap.lo_d() > need)) return out;
        }
    out.ok = true;
    return out;
}

}  // namespace

PointTuple complex_roots(const PolyZ& f, double tol, const NumericBudget& budget) {
    if (f.is_zero() || f.degree() < 1)
        throw InvalidParams("complex_roots: need a nonconstant polynomial");
    if (!(tol > 0)) throw InvalidParams("complex_roots: tol must be positive");

    Integer n;
    if (is_pure_radical(f, n) && n > 0) {
        long prec = precision_for_tolerance(tol, budget);
        for (; prec <= budget.precision_ceiling; prec *= 2) {
            PointTuple t = pure_radical_roots(static_cast<unsigned long>(f.degree()), n, prec);
            double worst = 0.0;
            for (const auto& b : t.boxes) worst = std::max(worst, b.rad());
            if (worst <= tol) return t;
        }
        throw NonConvergence("complex_roots: radical form did not reach tol");
    }

    std::size_t d = static_cast<std::size_t>(f.degree());
    double lead = std::abs(f.leading().get_d());
    double maxc = 0.0;
    for (long i = 0; i < f.degree(); ++i)
        maxc = std::max(maxc, std::abs(f[static_cast<std::size_t>(i)].get_d()));
    double radius = 1.0 + maxc / lead;  // Cauchy bound on root moduli

    std::vector<std::complex<double>> seed(d);
    for (std::size_t i = 0; i < d; ++i) {
        double ang =
            2 * M_PI * (static_cast<double>(i) + 0.25) / static_cast<double>(d) + 0.4;
        seed[i] = std::polar(radius * 0.8, ang);
    }

    long prec = std::max(precision_for_tolerance(tol, budget), 128l);
    for (; prec <= budget.precision_ceiling; prec *= 2) {
        Workspace ws(prec);
        std::vector<MpC> z;
        z.reserve(d);
        for (std::size_t i = 0; i < d; ++i) {
            z.emplace_back(prec);
            Workspace::set(z[i], seed[i].real(), seed[i].imag());
        }
        MpC fz(prec), tmp(prec), diff(prec), prod(prec), corr(prec);
        double target = std::ldexp(1.0, static_cast<int>(-(prec / 2)));
        for (int iter = 0; iter < 400; ++iter) {
            double worst = 0.0;
            for (std::size_t i = 0; i < d; ++i) {
                eval_poly(ws, fz, f, z[i], tmp);
                Workspace::set(prod, 1.0, 0.0);
                for (std::size_t j = 0; j < d; ++j) {
                    if (j == i) continue;
                    Workspace::sub(diff, z[i], z[j]);
                    ws.mul(prod, prod, diff);
                }
                Workspace::mul_z(prod, f.leading());
                ws.div(corr, fz, prod);
                mpfr_sub(z[i].re, z[i].re, corr.re, MPFR_RNDN);
                mpfr_sub(z[i].im, z[i].im, corr.im, MPFR_RNDN);
                worst = std::max(worst, ws.abs2(corr));
            }
            if (worst < target * target * radius * radius) break;
        }

        std::vector<ComplexBox> centers;
        centers.reserve(d);
        for (std::size_t i = 0; i < d; ++i) {
            double cr = mpfr_get_d(z[i].re, MPFR_RNDN);
            double ci = mpfr_get_d(z[i].im, MPFR_RNDN);
            seed[i] = {cr, ci};  // carry refinement to the next level
            RealInterval re_i(prec), im_i(prec);
            mpfr_set(re_i.lo_mut(), z[i].re, MPFR_RNDD);
            mpfr_set(re_i.hi_mut(), z[i].re, MPFR_RNDU);
            mpfr_set(im_i.lo_mut(), z[i].im, MPFR_RNDD);
            mpfr_set(im_i.hi_mut(), z[i].im, MPFR_RNDU);
            centers.push_back(ComplexBox::from_intervals(re_i, im_i));
        }
        Certified cert = certify(f, centers, prec);
        if (cert.ok && cert.max_rad <= tol) return std::move(cert.tuple);
    }
    throw NonConvergence("complex_roots: certification failed below the precision ceiling");
}

RealInterval mahler_measure(const PolyZ& f, double tol, const NumericBudget& budget) {
    if (f.is_zero()) throw InvalidParams("mahler_measure of the zero polynomial");
    if (!(tol > 0)) throw InvalidParams("mahler_measure: tol must be positive");

    SquarefreeDecomposition dec = squarefree_decomposition(f);
    double root_tol = tol / (4.0 * static_cast<double>(f.degree() + 1));
    long prec = precision_for_tolerance(tol, budget);
    for (; prec <= budget.precision_ceiling; prec *= 2, root_tol /= 16) {
        NumericBudget b = budget;
        b.start_precision = prec;
        RealInterval m = RealInterval::exact_int(abs(dec.unit), prec);
        for (std::size_t part = 0; part < dec.parts.size(); ++part) {
            const PolyZ& g = dec.parts[part];
            if (g.degree() < 1) continue;  // parts are primitive, so this is the constant 1
            PointTuple roots = complex_roots(g, root_tol, b);
            RealInterval mg = RealInterval::exact_int(abs(g.leading()), prec);
            for (const auto& box : roots.boxes) mg = mg * box.modulus().max_one();
            m = m * mg.pow_ui(part + 1);
        }
        if (m.width() <= tol) return m;
    }
    throw NonConvergence("mahler_measure: tolerance not reached below the precision ceiling");
}

}  // namespace radtower
