#pragma once

#include "radtower/polyfq.hpp"
#include "radtower/polyz.hpp"

namespace radtower {

/// Dedekind's criterion for q not dividing [O_K : Z[theta]], where theta
/// has monic minimal polynomial f.  Uses the gcd form: with fbar = f mod q,
/// gbar = radical(fbar), hbar = fbar/gbar, monic lifts g, h to Z[x] and
/// F = (g*h - f)/q, the index is coprime to q iff gcd(Fbar, gbar, hbar) = 1.
///
/// Requires f monic and q prime; f is assumed irreducible over Q.
bool dedekind_index_coprime(const PolyZ& f, const Integer& q);

/// Same criterion decided through the complete naive factorization of
/// f mod q: writing fbar = prod phi_i^(e_i), f = prod mu_i^(e_i) + q*g
/// with mu_i the lifts, the index is coprime to q iff for every i either
/// e_i = 1 or phi_i does not divide gbar.  Independent cross-check of the
/// gcd form.
bool dedekind_index_coprime_factored(const PolyZ& f, const Integer& q);

}  // namespace radtower
