#include "radtower/primality.hpp"

#include <array>

namespace radtower {

namespace {

constexpr std::array<unsigned long, 12> kWitnesses = {2,  3,  5,  7,  11, 13,
                                                      17, 19, 23, 29, 31, 37};

// Strong-probable-prime test to base a for odd n > 2.
bool sprp(const Integer& n, unsigned long a) {
    Integer n1 = n - 1;
    unsigned long r = mpz_scan1(n1.get_mpz_t(), 0);
    Integer d = n1 >> r;
    Integer x = powmod(Integer(a), d, n);
    if (x == 1 || x == n1) return true;
    for (unsigned long i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(const Integer& n) {
    if (n < 0) throw InvalidParams("is_prime: negative input");
    if (n < 2) return false;
    if (n < 4) return true;
    if (mpz_even_p(n.get_mpz_t())) return false;
    for (unsigned long p : {3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
        // The 12-prime witness set is a proven deterministic battery for
        // all n < 3.3e24, which covers the whole 64-bit range.
        for (unsigned long a : kWitnesses)
            if (!sprp(n, a)) return false;
        return true;
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::optional<Integer> find_prime_in_ap(const Rational& lo, const Rational& hi,
                                        const Integer& a, const Integer& m,
                                        const std::set<Integer>& exclude) {
    if (!(lo > 0 && lo < hi)) throw InvalidParams("find_prime_in_ap: need 0 < lo < hi");
    if (m < 1 || a < 0 || a >= m) throw InvalidParams("find_prime_in_ap: need 0 <= a < m");
    if (gcd(a, m) != 1) throw InvalidParams("find_prime_in_ap: need gcd(a, m) = 1");

    // Least integer > lo, then bumped up to the residue class a mod m.
    Integer p;
    mpz_fdiv_q(p.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
    p += 1;
    Integer shift = ((a - p) % m + m) % m;
    p += shift;
    for (; Rational(p) < hi; p += m) {
        if (exclude.count(p)) continue;
        if (is_prime(p)) return p;
    }
    return std::nullopt;
}

Integer next_prime_above(const Rational& lo, const std::set<Integer>& exclude) {
    Integer p;
    mpz_fdiv_q(p.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
    p += 1;
    if (p < 2) p = 2;
    while (exclude.count(p) || !is_prime(p)) p += 1;
    return p;
}

}  // namespace radtower
