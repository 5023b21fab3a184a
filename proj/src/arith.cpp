#include "radtower/arith.hpp"

#include "radtower/primality.hpp"

namespace radtower {

Integer pure_radical_discriminant(const Integer& d, const Integer& n) {
    if (d < 1 || n < 1) throw InvalidParams("pure_radical_discriminant: need d, n >= 1");
    if (!d.fits_ulong_p()) throw InvalidParams("pure_radical_discriminant: d too large");
    unsigned long du = d.get_ui();
    return pow_int(d, du) * pow_int(n, du - 1);
}

bool fermat_quotient_divides(const Integer& p, const Integer& d) {
    if (p == d) throw InvalidParams("fermat_quotient_divides: need p != d");
    if (mpz_even_p(p.get_mpz_t()) || mpz_even_p(d.get_mpz_t()) || !is_prime(p) || !is_prime(d))
        throw InvalidParams("fermat_quotient_divides: p, d must be odd primes");
    // d^2 | p^d - p = p(p^(d-1) - 1) and gcd(p, d) = 1.
    return powmod(p, d - 1, d * d) == 1;
}

Integer fermat_quotient_minus_one_residue(const Integer& d) {
    if (mpz_even_p(d.get_mpz_t()) || !is_prime(d))
        throw InvalidParams("fermat_quotient_minus_one_residue: d must be an odd prime");
    if (!d.fits_ulong_p())
        throw InvalidParams("fermat_quotient_minus_one_residue: d too large");
    Integer t = pow_int(d - 1, d.get_ui() - 1) - 1;
    Integer q = t / d;      // exact: (d-1)^(d-1) == 1 (mod d) by Fermat
    return ((q % d) + d) % d;
}

bool eisenstein_applicable(const Integer& d, const Integer& n) {
    if (d < 2 || n < 2) throw InvalidParams("eisenstein_applicable: need d, n >= 2");
    Integer rest = n;
    // Trial division; covers rest < 10^12 completely.
    for (Integer q = 2; q * q <= rest && q < 1000000; q += (q == 2 ? 1 : 2)) {
        if (!mpz_divisible_p(rest.get_mpz_t(), q.get_mpz_t())) continue;
        unsigned e = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), q.get_mpz_t())) {
            rest /= q;
            ++e;
        }
        if (e == 1) return true;
    }
    if (rest == 1) return false;
    if (is_prime(rest)) return true;  // cofactor to the first power
    // Perfect power => every exponent in the cofactor is a multiple of k >= 2.
    if (mpz_perfect_power_p(rest.get_mpz_t())) return false;
    throw InvalidParams("eisenstein_applicable: n beyond the supported factoring range");
}

}  // namespace radtower
