#pragma once

#include <string>
#include <utility>
#include <vector>

#include "radtower/integer.hpp"

namespace radtower {

/// Dense univariate polynomial over Z, coefficients ascending by degree.
/// Canonical form: no trailing zero coefficients; the zero polynomial has
/// an empty coefficient vector and degree -1.
class PolyZ {
  public:
    PolyZ() = default;
    explicit PolyZ(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }
    static PolyZ constant(const Integer& a) { return PolyZ({a}); }
    /// x^d - n.
    static PolyZ pure_radical(unsigned long d, const Integer& n);

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const Integer& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<Integer>& coeffs() const { return c_; }
    const Integer& leading() const;

    friend bool operator==(const PolyZ& a, const PolyZ& b) { return a.c_ == b.c_; }

    friend PolyZ operator+(const PolyZ& a, const PolyZ& b);
    friend PolyZ operator-(const PolyZ& a, const PolyZ& b);
    friend PolyZ operator*(const PolyZ& a, const PolyZ& b);
    PolyZ operator-() const;

    PolyZ derivative() const;
    Integer eval(const Integer& x) const;
    Rational eval(const Rational& x) const;

    /// Quotient of an exact division; throws InvalidParams on a nonzero
    /// remainder or division by zero.
    PolyZ divide_exact(const PolyZ& d) const;

    /// Division when the divisor is monic: (quotient, remainder) over Z.
    std::pair<PolyZ, PolyZ> divmod_monic(const PolyZ& d) const;

    /// gcd of the coefficients (>= 0); 0 for the zero polynomial.
    Integer content() const;
    PolyZ primitive_part() const;

    std::string to_string(const std::string& var = "x") const;

    /// Wire form: ascending coefficients as decimal strings.
    std::vector<std::string> to_coefficient_strings() const;
    static PolyZ from_coefficient_strings(const std::vector<std::string>& coeffs);

  private:
    void trim();
    std::vector<Integer> c_;
};

/// Primitive gcd over Z (monic-normalized sign: positive leading coeff).
PolyZ poly_gcd(const PolyZ& a, const PolyZ& b);

/// Squarefree decomposition f = content * prod_i part[i]^(i+1) with the
/// parts primitive, squarefree and pairwise coprime (Yun).  Parts may be
/// the constant 1.
struct SquarefreeDecomposition {
    Integer unit;               // signed content of f
    std::vector<PolyZ> parts;   // part[i] has multiplicity i+1
};
SquarefreeDecomposition squarefree_decomposition(const PolyZ& f);

/// Parses expressions like "x^3 - 17" or "2*x^2 + x - 1" (single variable
/// named x, integer coefficients).
PolyZ parse_polyz(const std::string& text);

}  // namespace radtower
