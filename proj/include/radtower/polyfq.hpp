#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "radtower/integer.hpp"
#include "radtower/polyz.hpp"

namespace radtower {

/// Dense univariate polynomial over the prime field F_q, q < 2^31.
/// Coefficients live in [0, q); no trailing zeros are stored.
class PolyFq {
  public:
    PolyFq(std::uint64_t q, std::vector<std::uint64_t> coeffs);
    static PolyFq zero(std::uint64_t q) { return PolyFq(q, {}); }
    static PolyFq one(std::uint64_t q) { return PolyFq(q, {1}); }
    static PolyFq reduce(const PolyZ& f, const Integer& q);

    std::uint64_t modulus() const { return q_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    std::uint64_t operator[](std::size_t i) const { return c_[i]; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }

    friend bool operator==(const PolyFq& a, const PolyFq& b) {
        return a.q_ == b.q_ && a.c_ == b.c_;
    }
    friend bool operator<(const PolyFq& a, const PolyFq& b);  // by degree, then coeffs

    friend PolyFq operator+(const PolyFq& a, const PolyFq& b);
    friend PolyFq operator-(const PolyFq& a, const PolyFq& b);
    friend PolyFq operator*(const PolyFq& a, const PolyFq& b);

    PolyFq derivative() const;
    PolyFq monic() const;
    std::uint64_t eval(std::uint64_t x) const;
    std::pair<PolyFq, PolyFq> divmod(const PolyFq& d) const;

    /// Least-nonnegative-residue lift to Z[x].
    PolyZ lift() const;

    std::string to_string(const std::string& var = "x") const;

  private:
    void trim();
    std::uint64_t q_;
    std::vector<std::uint64_t> c_;
};

/// Monic gcd.
PolyFq fq_gcd(PolyFq a, PolyFq b);

/// Product of the distinct monic irreducible factors of f (the radical).
/// Handles multiplicities divisible by q via repeated q-th-root descent,
/// which gcd(f, f') alone misses.
PolyFq fq_radical(const PolyFq& f);

/// Complete factorization into monic irreducibles with multiplicities, by
/// trial division over all monic polynomials of ascending degree.  Meant
/// as an independent oracle; requires q <= 50 and deg f <= 12.
std::vector<std::pair<PolyFq, int>> factor_fq_naive(const PolyFq& f);

}  // namespace radtower
