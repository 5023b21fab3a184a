#include "radtower/complex_box.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "radtower/errors.hpp"

namespace radtower {

namespace {

// Upper bound on the absolute rounding error of a round-to-nearest mpfr
// result: one full ulp (half would do).
double ulp_bound(mpfr_srcptr x, long prec) {
    if (mpfr_zero_p(x)) return 0.0;
    long e = mpfr_get_exp(x);
    return std::ldexp(1.0, static_cast<int>(e - prec + 1));
}

double up(double x) { return x * (1 + 4e-16) + 1e-290; }

void check_rad(double r) {
    if (!(r >= 0) || !(r < 1e280)) throw PrecisionFailure("complex radius blew up");
}

}  // namespace

void ComplexBox::init(long prec) {
    prec_ = std::max(prec, 24l);
    mpfr_init2(re_, prec_);
    mpfr_init2(im_, prec_);
    mpfr_set_zero(re_, 1);
    mpfr_set_zero(im_, 1);
    rad_ = 0.0;
}

ComplexBox::ComplexBox() { init(64); }
ComplexBox::ComplexBox(long prec) { init(prec); }

ComplexBox::ComplexBox(const ComplexBox& o) {
    init(o.prec_);
    mpfr_set(re_, o.re_, MPFR_RNDN);
    mpfr_set(im_, o.im_, MPFR_RNDN);
    rad_ = o.rad_;
}

ComplexBox::ComplexBox(ComplexBox&& o) noexcept : prec_(o.prec_), rad_(o.rad_) {
    re_[0] = o.re_[0];
    im_[0] = o.im_[0];
    mpfr_init2(o.re_, 24);
    mpfr_init2(o.im_, 24);
    mpfr_set_zero(o.re_, 1);
    mpfr_set_zero(o.im_, 1);
    o.prec_ = 24;
    o.rad_ = 0.0;
}

ComplexBox& ComplexBox::operator=(const ComplexBox& o) {
    if (this == &o) return *this;
    mpfr_set_prec(re_, o.prec_);
    mpfr_set_prec(im_, o.prec_);
    prec_ = o.prec_;
    mpfr_set(re_, o.re_, MPFR_RNDN);
    mpfr_set(im_, o.im_, MPFR_RNDN);
    rad_ = o.rad_;
    return *this;
}

ComplexBox& ComplexBox::operator=(ComplexBox&& o) noexcept {
    mpfr_swap(re_, o.re_);
    mpfr_swap(im_, o.im_);
    std::swap(prec_, o.prec_);
    std::swap(rad_, o.rad_);
    return *this;
}

ComplexBox::~ComplexBox() {
    mpfr_clear(re_);
    mpfr_clear(im_);
}

void ComplexBox::bump_center_rounding() {
    rad_ = up(rad_ + ulp_bound(re_, prec_) + ulp_bound(im_, prec_));
    check_rad(rad_);
}

void ComplexBox::inflate(double extra) {
    rad_ = up(rad_ + extra);
    check_rad(rad_);
}

ComplexBox ComplexBox::exact(double re, double im, long prec) {
    ComplexBox z(prec);
    mpfr_set_d(z.re_, re, MPFR_RNDN);  // doubles fit exactly at prec >= 53
    mpfr_set_d(z.im_, im, MPFR_RNDN);
    if (prec < 53) z.bump_center_rounding();
    return z;
}

ComplexBox ComplexBox::exact_int(const Integer& re, long prec) {
    ComplexBox z(prec);
    mpfr_set_z(z.re_, re.get_mpz_t(), MPFR_RNDN);
    z.bump_center_rounding();
    return z;
}

ComplexBox ComplexBox::root_of_unity(unsigned long j, unsigned long d, long prec) {
    if (d == 0) throw InvalidParams("root_of_unity: d = 0");
    ComplexBox z(prec);
    mpfr_t theta;
    mpfr_init2(theta, prec);
    mpfr_const_pi(theta, MPFR_RNDN);
    mpfr_mul_ui(theta, theta, 2 * (j % d), MPFR_RNDN);
    mpfr_div_ui(theta, theta, d, MPFR_RNDN);
    mpfr_sin_cos(z.im_, z.re_, theta, MPFR_RNDN);
    // sin/cos are 1-Lipschitz, so the angle rounding feeds straight in.
    z.rad_ = up(4 * ulp_bound(theta, prec));
    mpfr_clear(theta);
    z.bump_center_rounding();
    return z;
}

ComplexBox ComplexBox::unit(double theta, long prec) {
    ComplexBox z(prec);
    mpfr_t t;
    mpfr_init2(t, prec);
    mpfr_set_d(t, theta, MPFR_RNDN);
    mpfr_sin_cos(z.im_, z.re_, t, MPFR_RNDN);
    mpfr_clear(t);
    z.bump_center_rounding();
    return z;
}

ComplexBox ComplexBox::from_intervals(const RealInterval& re, const RealInterval& im) {
    long prec = std::max(re.precision(), im.precision());
    ComplexBox z(prec);
    mpfr_t half;
    mpfr_init2(half, prec);
    mpfr_add(half, re.lo(), re.hi(), MPFR_RNDN);
    mpfr_div_ui(z.re_, half, 2, MPFR_RNDN);
    mpfr_add(half, im.lo(), im.hi(), MPFR_RNDN);
    mpfr_div_ui(z.im_, half, 2, MPFR_RNDN);
    mpfr_clear(half);
    z.rad_ = up(re.width() + im.width());
    z.bump_center_rounding();
    return z;
}

ComplexBox operator+(const ComplexBox& a, const ComplexBox& b) {
    ComplexBox z(std::max(a.prec_, b.prec_));
    mpfr_add(z.re_, a.re_, b.re_, MPFR_RNDN);
    mpfr_add(z.im_, a.im_, b.im_, MPFR_RNDN);
    z.rad_ = up(a.rad_ + b.rad_);
    z.bump_center_rounding();
    return z;
}

ComplexBox operator-(const ComplexBox& a, const ComplexBox& b) {
    ComplexBox z(std::max(a.prec_, b.prec_));
    mpfr_sub(z.re_, a.re_, b.re_, MPFR_RNDN);
    mpfr_sub(z.im_, a.im_, b.im_, MPFR_RNDN);
    z.rad_ = up(a.rad_ + b.rad_);
    z.bump_center_rounding();
    return z;
}

ComplexBox operator*(const ComplexBox& a, const ComplexBox& b) {
    ComplexBox z(std::max(a.prec_, b.prec_));
    // fmms/fmma keep the center error at one rounding each.
    mpfr_fmms(z.re_, a.re_, b.re_, a.im_, b.im_, MPFR_RNDN);
    mpfr_fmma(z.im_, a.re_, b.im_, a.im_, b.re_, MPFR_RNDN);
    double ma = a.modulus_ub();
    double mb = b.modulus_ub();
    z.rad_ = up(up(ma * b.rad_) + up(mb * a.rad_) + up(a.rad_ * b.rad_));
    z.bump_center_rounding();
    return z;
}

ComplexBox ComplexBox::operator-() const {
    ComplexBox z(prec_);
    mpfr_neg(z.re_, re_, MPFR_RNDN);
    mpfr_neg(z.im_, im_, MPFR_RNDN);
    z.rad_ = rad_;
    return z;
}

ComplexBox ComplexBox::conj() const {
    ComplexBox z(prec_);
    mpfr_set(z.re_, re_, MPFR_RNDN);
    mpfr_neg(z.im_, im_, MPFR_RNDN);
    z.rad_ = rad_;
    return z;
}

ComplexBox ComplexBox::pow_ui(unsigned long e) const {
    ComplexBox z = exact(1.0, 0.0, prec_);
    for (unsigned long k = 0; k < e; ++k) z = z * *this;
    return z;
}

ComplexBox ComplexBox::scale_int(const Integer& k) const {
    ComplexBox z(prec_);
    mpfr_mul_z(z.re_, re_, k.get_mpz_t(), MPFR_RNDN);
    mpfr_mul_z(z.im_, im_, k.get_mpz_t(), MPFR_RNDN);
    double mk = std::abs(mpz_get_d(k.get_mpz_t())) * (1 + 1e-15);
    z.rad_ = up(mk * rad_);
    z.bump_center_rounding();
    return z;
}

ComplexBox ComplexBox::div_pos(const RealInterval& s) const {
    if (!s.certainly_positive()) throw InvalidParams("div_pos: divisor must be positive");
    ComplexBox z(std::max<long>(prec_, s.precision()));
    mpfr_t m;
    mpfr_init2(m, z.prec_);
    mpfr_add(m, s.lo(), s.hi(), MPFR_RNDN);
    mpfr_div_ui(m, m, 2, MPFR_RNDN);
    mpfr_div(z.re_, re_, m, MPFR_RNDN);
    mpfr_div(z.im_, im_, m, MPFR_RNDN);
    // center shift over the divisor range plus the scaled input radius
    double a = s.lo_d();
    double mid = mpfr_get_d(m, MPFR_RNDD);
    double b = s.hi_d();
    mpfr_clear(m);
    if (!(a > 0)) throw InvalidParams("div_pos: divisor must be positive");
    double dev = std::max(up(mid - a), up(b - mid));
    double cm = modulus_ub();
    z.rad_ = up(up(rad_ / a) + up(cm * dev / (a * mid)));
    z.bump_center_rounding();
    return z;
}

RealInterval ComplexBox::modulus() const {
    RealInterval res(prec_);
    mpfr_hypot(res.lo_mut(), re_, im_, MPFR_RNDD);
    mpfr_hypot(res.hi_mut(), re_, im_, MPFR_RNDU);
    mpfr_sub_d(res.lo_mut(), res.lo(), rad_, MPFR_RNDD);
    mpfr_add_d(res.hi_mut(), res.hi(), rad_, MPFR_RNDU);
    if (mpfr_sgn(res.lo()) < 0) mpfr_set_zero(res.lo_mut(), 1);
    return res;
}

double ComplexBox::modulus_ub() const {
    mpfr_t h;
    mpfr_init2(h, 64);
    mpfr_hypot(h, re_, im_, MPFR_RNDU);
    double d = mpfr_get_d(h, MPFR_RNDU);
    mpfr_clear(h);
    return up(d + rad_);
}

RealInterval distance(const ComplexBox& a, const ComplexBox& b) {
    long prec = std::max(a.prec_, b.prec_);
    // Center distance at round-to-nearest, then a conservative slack for the
    // three roundings (each contributes at most one ulp; hypot is monotone
    // in |dx|, |dy|) plus both disk radii.
    RealInterval res(prec);
    mpfr_t dx, dy, h;
    mpfr_inits2(prec, dx, dy, h, static_cast<mpfr_ptr>(nullptr));
    mpfr_sub(dx, a.re_, b.re_, MPFR_RNDN);
    mpfr_sub(dy, a.im_, b.im_, MPFR_RNDN);
    mpfr_hypot(h, dx, dy, MPFR_RNDN);
    double slack =
        up(ulp_bound(dx, prec) + ulp_bound(dy, prec) + 2 * ulp_bound(h, prec) + a.rad_ + b.rad_);
    mpfr_sub_d(res.lo_mut(), h, slack, MPFR_RNDD);
    mpfr_add_d(res.hi_mut(), h, slack, MPFR_RNDU);
    if (mpfr_sgn(res.lo()) < 0) mpfr_set_zero(res.lo_mut(), 1);
    mpfr_clears(dx, dy, h, static_cast<mpfr_ptr>(nullptr));
    return res;
}

RealInterval PointTuple::max_modulus() const {
    if (boxes.empty()) throw ZeroTuple("max_modulus of an empty tuple");
    RealInterval m = boxes[0].modulus();
    for (std::size_t i = 1; i < boxes.size(); ++i)
        m = RealInterval::max(m, boxes[i].modulus());
    return m;
}

RealInterval PointTuple::min_modulus() const {
    if (boxes.empty()) throw ZeroTuple("min_modulus of an empty tuple");
    RealInterval m = boxes[0].modulus();
    for (std::size_t i = 1; i < boxes.size(); ++i)
        m = RealInterval::min(m, boxes[i].modulus());
    return m;
}

PointTuple PointTuple::from_points(const std::vector<std::complex<double>>& pts, long prec) {
    PointTuple t;
    t.boxes.reserve(pts.size());
    for (const auto& p : pts) t.boxes.push_back(ComplexBox::exact(p.real(), p.imag(), prec));
    return t;
}

PointTuple PointTuple::parse_csv(std::istream& in, long prec) {
    PointTuple t;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::size_t h = line.find_first_not_of(" \t\r");
        if (h == std::string::npos || line[h] == '#') continue;
        std::istringstream row(line);
        std::string re_s, im_s, rad_s;
        if (!std::getline(row, re_s, ',') || !std::getline(row, im_s, ','))
            throw InvalidParams("points CSV: need \"re,im[,rad]\" rows");
        std::getline(row, rad_s, ',');
        RealInterval re_i = RealInterval::from_strings(re_s, re_s, prec);
        RealInterval im_i = RealInterval::from_strings(im_s, im_s, prec);
        ComplexBox z = ComplexBox::from_intervals(re_i, im_i);
        if (!rad_s.empty()) {
            double r = std::stod(rad_s);
            if (!(r >= 0)) throw InvalidParams("points CSV: negative radius");
            z.inflate(up(r));
        }
        t.boxes.push_back(std::move(z));
    }
    if (t.boxes.empty()) throw InvalidParams("points CSV: no rows");
    return t;
}

void PointTuple::write_csv(std::ostream& out) const {
    for (const auto& b : boxes) {
        char* re_s = nullptr;
        char* im_s = nullptr;
        mpfr_asprintf(&re_s, "%.24R*e", MPFR_RNDN, b.re());
        mpfr_asprintf(&im_s, "%.24R*e", MPFR_RNDN, b.im());
        out << re_s << "," << im_s << "," << b.rad() << "\n";
        mpfr_free_str(re_s);
        mpfr_free_str(im_s);
    }
}

std::string ComplexBox::to_string() const {
    std::ostringstream os;
    char* re_s = nullptr;
    char* im_s = nullptr;
    mpfr_asprintf(&re_s, "%.24R*e", MPFR_RNDN, re_);
    mpfr_asprintf(&im_s, "%.24R*e", MPFR_RNDN, im_);
    os << "(" << re_s << ", " << im_s << ") +- " << rad_;
    mpfr_free_str(re_s);
    mpfr_free_str(im_s);
    return os.str();
}

}  // namespace radtower
