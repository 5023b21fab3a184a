#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "radtower/errors.hpp"

namespace radtower {

// Exact arithmetic kernel.  GMP supplies the representation (canonical
// sign+magnitude integers, gcd-reduced rationals with positive
// denominator); everything domain-specific is a free function on top.
using Integer = mpz_class;
using Rational = mpq_class;

inline Integer int_from_string(const std::string& s) {
    try {
        return Integer(s, 10);  // explicit base: "010" must stay decimal
    } catch (const std::invalid_argument&) {
        throw InvalidParams("not an integer literal: \"" + s + "\"");
    }
}

inline std::string to_string(const Integer& n) { return n.get_str(); }

// "num/den" with den > 0 and gcd(num, den) = 1; plain "num" when den = 1.
std::string to_string(const Rational& q);

Rational rational_from_parts(const Integer& num, const Integer& den);

// Accepts "3/2", "-7", "86.49", "1.5e3".  Decimal input is converted to an
// exact rational (digits over a power of ten), never rounded.
Rational rational_from_string(const std::string& s);

// n^e for e >= 0.
Integer pow_int(const Integer& n, unsigned long e);
Rational pow_rat(const Rational& q, unsigned long e);

// base^e mod m, m > 0.
Integer powmod(const Integer& base, const Integer& e, const Integer& m);

}  // namespace radtower
