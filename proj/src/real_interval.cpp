#include "radtower/real_interval.hpp"

#include <algorithm>
#include <cmath>

#include "radtower/errors.hpp"

namespace radtower {

long precision_for_tolerance(double tol, const NumericBudget& budget) {
    if (budget.start_precision > 0) return budget.start_precision;
    if (!(tol > 0)) throw InvalidParams("tolerance must be positive");
    long bits = 64;
    if (tol < 1) bits += static_cast<long>(std::ceil(-std::log2(tol)));
    return std::min(std::max(bits, 64l), budget.precision_ceiling);
}

void RealInterval::init(long prec) {
    prec_ = std::max(prec, 24l);
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

RealInterval::RealInterval() { init(64); }
RealInterval::RealInterval(long prec) { init(prec); }

RealInterval::RealInterval(const RealInterval& o) {
    init(o.prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

RealInterval::RealInterval(RealInterval&& o) noexcept : prec_(o.prec_) {
    lo_[0] = o.lo_[0];
    hi_[0] = o.hi_[0];
    mpfr_init2(o.lo_, 24);
    mpfr_init2(o.hi_, 24);
    o.prec_ = 24;
    mpfr_set_zero(o.lo_, 1);
    mpfr_set_zero(o.hi_, 1);
}

RealInterval& RealInterval::operator=(const RealInterval& o) {
    if (this == &o) return *this;
    mpfr_set_prec(lo_, o.prec_);
    mpfr_set_prec(hi_, o.prec_);
    prec_ = o.prec_;
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
    return *this;
}

RealInterval& RealInterval::operator=(RealInterval&& o) noexcept {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    std::swap(prec_, o.prec_);
    return *this;
}

RealInterval::~RealInterval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

RealInterval RealInterval::exact(double x, long prec) {
    RealInterval r(prec);
    mpfr_set_d(r.lo_, x, MPFR_RNDD);
    mpfr_set_d(r.hi_, x, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::exact_int(const Integer& n, long prec) {
    RealInterval r(prec);
    mpfr_set_z(r.lo_, n.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, n.get_mpz_t(), MPFR_RNDU);
    return r;
}

RealInterval RealInterval::from_rational(const Rational& q, long prec) {
    RealInterval r(prec);
    mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
}

RealInterval RealInterval::from_endpoints(double lo, double hi, long prec) {
    if (!(lo <= hi)) throw InvalidParams("interval endpoints out of order");
    RealInterval r(prec);
    mpfr_set_d(r.lo_, lo, MPFR_RNDD);
    mpfr_set_d(r.hi_, hi, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::from_strings(const std::string& lo, const std::string& hi,
                                        long prec) {
    RealInterval r(prec);
    if (mpfr_set_str(r.lo_, lo.c_str(), 10, MPFR_RNDD) != 0)
        throw InvalidParams("bad interval endpoint: \"" + lo + "\"");
    if (mpfr_set_str(r.hi_, hi.c_str(), 10, MPFR_RNDU) != 0)
        throw InvalidParams("bad interval endpoint: \"" + hi + "\"");
    if (mpfr_cmp(r.lo_, r.hi_) > 0) throw InvalidParams("interval endpoints out of order");
    return r;
}

RealInterval RealInterval::pi(long prec) {
    RealInterval r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

double RealInterval::mid_d() const {
    double a = mpfr_get_d(lo_, MPFR_RNDN);
    double b = mpfr_get_d(hi_, MPFR_RNDN);
    return a + (b - a) / 2;
}

double RealInterval::width() const {
    mpfr_t w;
    mpfr_init2(w, 64);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

bool RealInterval::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool RealInterval::contains(const Rational& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool RealInterval::contains(const RealInterval& o) const {
    return mpfr_cmp(lo_, o.lo_) <= 0 && mpfr_cmp(hi_, o.hi_) >= 0;
}

bool RealInterval::certainly_ge(const Rational& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) >= 0;
}
bool RealInterval::certainly_le(const Rational& q) const {
    return mpfr_cmp_q(hi_, q.get_mpq_t()) <= 0;
}
bool RealInterval::certainly_gt(const Rational& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) > 0;
}
bool RealInterval::certainly_lt(const Rational& q) const {
    return mpfr_cmp_q(hi_, q.get_mpq_t()) < 0;
}

RealInterval operator+(const RealInterval& a, const RealInterval& b) {
    RealInterval r(std::max(a.prec_, b.prec_));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

RealInterval operator-(const RealInterval& a, const RealInterval& b) {
    RealInterval r(std::max(a.prec_, b.prec_));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::operator-() const {
    RealInterval r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

RealInterval operator*(const RealInterval& a, const RealInterval& b) {
    RealInterval r(std::max(a.prec_, b.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    // lo = min of the four products rounded down.
    bool first = true;
    for (int i = 0; i < 4; ++i) {
        mpfr_srcptr x = (i & 1) ? a.hi_ : a.lo_;
        mpfr_srcptr y = (i & 2) ? b.hi_ : b.lo_;
        mpfr_mul(t, x, y, MPFR_RNDD);
        if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
        mpfr_mul(t, x, y, MPFR_RNDU);
        if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
        first = false;
    }
    mpfr_clear(t);
    return r;
}

RealInterval operator/(const RealInterval& a, const RealInterval& b) {
    if (b.contains_zero()) throw InvalidParams("interval division by an interval containing 0");
    RealInterval r(std::max(a.prec_, b.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    bool first = true;
    for (int i = 0; i < 4; ++i) {
        mpfr_srcptr x = (i & 1) ? a.hi_ : a.lo_;
        mpfr_srcptr y = (i & 2) ? b.hi_ : b.lo_;
        mpfr_div(t, x, y, MPFR_RNDD);
        if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
        mpfr_div(t, x, y, MPFR_RNDU);
        if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
        first = false;
    }
    mpfr_clear(t);
    return r;
}

RealInterval RealInterval::add_d(double x) const {
    RealInterval r(prec_);
    mpfr_add_d(r.lo_, lo_, x, MPFR_RNDD);
    mpfr_add_d(r.hi_, hi_, x, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::sub_d(double x) const { return add_d(-x); }

RealInterval RealInterval::abs() const {
    RealInterval r(prec_);
    if (mpfr_sgn(lo_) >= 0) return *this;
    if (mpfr_sgn(hi_) <= 0) return -*this;
    mpfr_set_zero(r.lo_, 1);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    if (mpfr_cmp(hi_, r.hi_) > 0) mpfr_set(r.hi_, hi_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::sqrt() const {
    RealInterval r(prec_);
    if (mpfr_sgn(lo_) < 0) {
        if (mpfr_sgn(hi_) < 0) throw InvalidParams("sqrt of a negative interval");
        mpfr_set_zero(r.lo_, 1);  // clamp tiny negative slop
    } else {
        mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    }
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::rootn(unsigned long n) const {
    if (mpfr_sgn(lo_) < 0) throw InvalidParams("rootn of a negative interval");
    RealInterval r(prec_);
    mpfr_rootn_ui(r.lo_, lo_, n, MPFR_RNDD);
    mpfr_rootn_ui(r.hi_, hi_, n, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::log() const {
    if (mpfr_sgn(lo_) <= 0) throw InvalidParams("log of a non-positive interval");
    RealInterval r(prec_);
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::exp() const {
    RealInterval r(prec_);
    mpfr_exp(r.lo_, lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, hi_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::pow_ui(unsigned long e) const {
    RealInterval r = exact(1.0, prec_);
    for (unsigned long k = 0; k < e; ++k) r = r * *this;
    return r;
}

RealInterval RealInterval::pow_real(double gamma) const {
    if (mpfr_sgn(lo_) <= 0) throw InvalidParams("pow_real needs a positive base");
    RealInterval r(prec_);
    mpfr_t g;
    mpfr_init2(g, 64);
    mpfr_set_d(g, gamma, MPFR_RNDN);  // doubles are exact in mpfr
    if (gamma >= 0) {
        mpfr_pow(r.lo_, lo_, g, MPFR_RNDD);
        mpfr_pow(r.hi_, hi_, g, MPFR_RNDU);
    } else {
        mpfr_pow(r.lo_, hi_, g, MPFR_RNDD);
        mpfr_pow(r.hi_, lo_, g, MPFR_RNDU);
    }
    mpfr_clear(g);
    return r;
}

RealInterval RealInterval::max_one() const {
    RealInterval one = exact(1.0, prec_);
    return max(*this, one);
}

RealInterval RealInterval::clamp_floor(double floor) const {
    RealInterval r(*this);
    if (mpfr_cmp_d(r.lo_, floor) < 0) mpfr_set_d(r.lo_, floor, MPFR_RNDD);
    if (mpfr_cmp_d(r.hi_, floor) < 0) mpfr_set_d(r.hi_, floor, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::min(const RealInterval& a, const RealInterval& b) {
    RealInterval r(std::max(a.prec_, b.prec_));
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::max(const RealInterval& a, const RealInterval& b) {
    RealInterval r(std::max(a.prec_, b.prec_));
    mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::hull(const RealInterval& a, const RealInterval& b) {
    RealInterval r(std::max(a.prec_, b.prec_));
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

namespace {

std::string mpfr_to_decimal(mpfr_srcptr x, mpfr_rnd_t rnd) {
    char* s = nullptr;
    // 25 significant digits round-trips a few hundred bits of interval
    // width comfortably and keeps output deterministic.
    if (mpfr_asprintf(&s, "%.24R*e", rnd, x) < 0)
        throw PrecisionFailure("mpfr_asprintf failed");
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

}  // namespace

std::string RealInterval::lo_string() const { return mpfr_to_decimal(lo_, MPFR_RNDD); }
std::string RealInterval::hi_string() const { return mpfr_to_decimal(hi_, MPFR_RNDU); }

}  // namespace radtower
