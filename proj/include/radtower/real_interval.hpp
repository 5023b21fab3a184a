#pragma once

#include <mpfr.h>

#include <string>

#include "radtower/integer.hpp"

namespace radtower {

/// Precision policy for certified computations: start precision is derived
/// from the tolerance and doubled on failure up to the ceiling.
struct NumericBudget {
    long precision_ceiling = 4096;  // bits
    long start_precision = 0;       // 0 = derive from tolerance
};

long precision_for_tolerance(double tol, const NumericBudget& budget = {});

/// Closed interval [lo, hi] of mpfr values; every operation rounds lo down
/// and hi up, so intervals only ever widen past the true value.
class RealInterval {
  public:
    RealInterval();
    explicit RealInterval(long prec);
    RealInterval(const RealInterval& o);
    RealInterval(RealInterval&& o) noexcept;
    RealInterval& operator=(const RealInterval& o);
    RealInterval& operator=(RealInterval&& o) noexcept;
    ~RealInterval();

    static RealInterval exact(double x, long prec);
    static RealInterval exact_int(const Integer& n, long prec);
    static RealInterval from_rational(const Rational& q, long prec);
    static RealInterval from_endpoints(double lo, double hi, long prec);
    /// Parses decimal endpoint strings, rounding lo down and hi up.
    static RealInterval from_strings(const std::string& lo, const std::string& hi, long prec);
    static RealInterval pi(long prec);

    long precision() const { return prec_; }
    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }
    /// Raw endpoint access for the numerics layer; keep lo <= hi.
    mpfr_ptr lo_mut() { return lo_; }
    mpfr_ptr hi_mut() { return hi_; }
    double lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }
    double mid_d() const;
    double width() const;  // upper bound
    bool is_point() const { return mpfr_equal_p(lo_, hi_); }

    bool contains_zero() const;
    bool contains(const Rational& q) const;
    bool contains(const RealInterval& o) const;  // o subset of *this

    // Certain (set-wise) comparisons; false means "not certain".
    bool certainly_less(const RealInterval& o) const { return mpfr_cmp(hi_, o.lo_) < 0; }
    bool certainly_greater(const RealInterval& o) const { return mpfr_cmp(lo_, o.hi_) > 0; }
    bool certainly_positive() const { return mpfr_sgn(lo_) > 0; }
    bool certainly_negative() const { return mpfr_sgn(hi_) < 0; }
    bool certainly_ge(const Rational& q) const;
    bool certainly_le(const Rational& q) const;
    bool certainly_gt(const Rational& q) const;
    bool certainly_lt(const Rational& q) const;

    friend RealInterval operator+(const RealInterval& a, const RealInterval& b);
    friend RealInterval operator-(const RealInterval& a, const RealInterval& b);
    friend RealInterval operator*(const RealInterval& a, const RealInterval& b);
    friend RealInterval operator/(const RealInterval& a, const RealInterval& b);
    RealInterval operator-() const;

    RealInterval add_d(double x) const;
    RealInterval sub_d(double x) const;
    RealInterval abs() const;
    RealInterval sqrt() const;        // lo >= 0 required (clamped at 0)
    RealInterval rootn(unsigned long n) const;  // lo >= 0 required
    RealInterval log() const;         // lo > 0 required
    RealInterval exp() const;
    RealInterval pow_ui(unsigned long e) const;
    /// x^gamma for positive x; gamma is an exact double of either sign.
    RealInterval pow_real(double gamma) const;
    /// max(1, x).
    RealInterval max_one() const;
    RealInterval clamp_floor(double floor) const;

    static RealInterval min(const RealInterval& a, const RealInterval& b);
    static RealInterval max(const RealInterval& a, const RealInterval& b);
    static RealInterval hull(const RealInterval& a, const RealInterval& b);

    /// Decimal serialization: lo rounded down, hi rounded up, so parsing
    /// the strings back yields an enclosure of this enclosure.
    std::string lo_string() const;
    std::string hi_string() const;

  private:
    void init(long prec);
    long prec_;
    mpfr_t lo_;
    mpfr_t hi_;
};

}  // namespace radtower
