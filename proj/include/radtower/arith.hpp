#pragma once

#include "radtower/integer.hpp"

namespace radtower {

/// |disc Z[n^(1/d)]| = d^d * n^(d-1), valid when x^d - n is irreducible
/// over the rationals (caller-checked, e.g. via eisenstein_applicable).
Integer pure_radical_discriminant(const Integer& d, const Integer& n);

/// True iff d^2 divides p^d - p, for distinct odd primes p, d.  Decided as
/// p^(d-1) == 1 (mod d^2); the false case is the monogenicity hypothesis
/// for Q(p^(1/d)).
bool fermat_quotient_divides(const Integer& p, const Integer& d);

/// ((d-1)^(d-1) - 1)/d mod d for an odd prime d.  Always equals 1, which is
/// what makes the congruence p == d-1 (mod d^2) force a nonvanishing
/// Fermat quotient.
Integer fermat_quotient_minus_one_residue(const Integer& d);

/// True iff some prime divides n to exactly the first power, i.e. x^d - n
/// is Eisenstein at that prime and hence irreducible.
bool eisenstein_applicable(const Integer& d, const Integer& n);

}  // namespace radtower
