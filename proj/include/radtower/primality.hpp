#pragma once

#include <optional>
#include <set>

#include "radtower/integer.hpp"

namespace radtower {

/// Primality test.  Deterministic Miller-Rabin witness battery below 2^64;
/// above that, GMP's probable-prime test (trial division, a Baillie-PSW
/// style strong+Lucas round, then extra Miller-Rabin rounds).
bool is_prime(const Integer& n);

/// Smallest prime p with lo < p < hi, p == a (mod m), p not in `exclude`.
/// Scans the progression upward from the least candidate > lo, so the
/// result is canonical.  Empty optional when the interval holds no such
/// prime, which is a legitimate outcome: the underlying existence results are
/// asymptotic in the modulus.
///
/// Requires 0 < lo < hi, 0 <= a < m, gcd(a, m) = 1.
std::optional<Integer> find_prime_in_ap(const Rational& lo, const Rational& hi,
                                        const Integer& a, const Integer& m,
                                        const std::set<Integer>& exclude = {});

/// Smallest prime strictly above `lo` not in `exclude` (no upper limit).
Integer next_prime_above(const Rational& lo, const std::set<Integer>& exclude = {});

}  // namespace radtower
