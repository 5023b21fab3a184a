#pragma once

#include <mpfr.h>

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "radtower/real_interval.hpp"

namespace radtower {

/// Complex disk: an mpfr midpoint plus an error radius.  Center arithmetic
/// rounds to nearest; the rounding slack and all input radii are folded
/// into the radius, so the disk always contains the exact result.
class ComplexBox {
  public:
    ComplexBox();
    explicit ComplexBox(long prec);
    ComplexBox(const ComplexBox& o);
    ComplexBox(ComplexBox&& o) noexcept;
    ComplexBox& operator=(const ComplexBox& o);
    ComplexBox& operator=(ComplexBox&& o) noexcept;
    ~ComplexBox();

    static ComplexBox exact(double re, double im, long prec);
    static ComplexBox exact_int(const Integer& re, long prec);
    /// exp(2*pi*i*j/d).
    static ComplexBox root_of_unity(unsigned long j, unsigned long d, long prec);
    /// exp(i*theta) for an exact double theta.
    static ComplexBox unit(double theta, long prec);
    /// Center from midpoints of two intervals; radius covers both widths.
    static ComplexBox from_intervals(const RealInterval& re, const RealInterval& im);

    long precision() const { return prec_; }
    mpfr_srcptr re() const { return re_; }
    mpfr_srcptr im() const { return im_; }
    double rad() const { return rad_; }
    double re_d() const { return mpfr_get_d(re_, MPFR_RNDN); }
    double im_d() const { return mpfr_get_d(im_, MPFR_RNDN); }
    std::complex<double> mid() const { return {re_d(), im_d()}; }

    void inflate(double extra);

    friend ComplexBox operator+(const ComplexBox& a, const ComplexBox& b);
    friend ComplexBox operator-(const ComplexBox& a, const ComplexBox& b);
    friend ComplexBox operator*(const ComplexBox& a, const ComplexBox& b);
    ComplexBox operator-() const;
    ComplexBox conj() const;
    ComplexBox pow_ui(unsigned long e) const;

    /// Scale by an integer constant.
    ComplexBox scale_int(const Integer& k) const;
    /// Divide by a positive real interval.
    ComplexBox div_pos(const RealInterval& s) const;

    /// Enclosure of |z| over the disk (lower endpoint clamped at 0).
    RealInterval modulus() const;
    /// Upper bound on |z| as a double.
    double modulus_ub() const;

    friend RealInterval distance(const ComplexBox& a, const ComplexBox& b);

    std::string to_string() const;

  private:
    void init(long prec);
    void bump_center_rounding();
    long prec_;
    mpfr_t re_;
    mpfr_t im_;
    double rad_;
};

/// Enclosure of |a - b| between two disks.
RealInterval distance(const ComplexBox& a, const ComplexBox& b);

/// Unordered tuple of complex disks; multiplicity matters, order does not.
struct PointTuple {
    std::vector<ComplexBox> boxes;

    std::size_t size() const { return boxes.size(); }
    bool empty() const { return boxes.empty(); }

    /// max_i |z_i| as an interval (the max norm of the tuple).
    RealInterval max_modulus() const;
    /// min_i |z_i| as an interval.
    RealInterval min_modulus() const;

    static PointTuple from_points(const std::vector<std::complex<double>>& pts, long prec);

    /// CSV rows "re,im[,rad]".
    static PointTuple parse_csv(std::istream& in, long prec);
    void write_csv(std::ostream& out) const;
};

}  // namespace radtower
