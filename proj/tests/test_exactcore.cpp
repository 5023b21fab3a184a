#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <set>

#include "radtower/arith.hpp"
#include "radtower/dedekind.hpp"
#include "radtower/polyfq.hpp"
#include "radtower/polyz.hpp"
#include "radtower/primality.hpp"

using namespace radtower;

TEST_CASE("is_prime basics") {
    CHECK(is_prime(131));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2309));
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(2047));  // 23 * 89, strong pseudoprime base 2
    CHECK(is_prime(Integer("170141183460469231731687303715884105727")));  // 2^127 - 1
    CHECK_FALSE(is_prime(Integer("170141183460469231731687303715884105725")));
    // small exhaustive cross-check against a sieve
    std::vector<bool> sieve(10000, true);
    sieve[0] = sieve[1] = false;
    for (std::size_t i = 2; i < sieve.size(); ++i)
        if (sieve[i])
            for (std::size_t j = 2 * i; j < sieve.size(); j += i) sieve[j] = false;
    for (std::size_t i = 0; i < sieve.size(); ++i) CHECK(is_prime(Integer(static_cast<unsigned long>(i))) == sieve[i]);
}

TEST_CASE("find_prime_in_ap examples") {
    // (1.5^11, 2*1.5^11), a=10 mod 121
    Rational lo = pow_rat(rational_from_string("3/2"), 11);
    Rational hi = lo * 2;
    auto p = find_prime_in_ap(lo, hi, 10, 121);
    REQUIRE(p.has_value());
    CHECK(*p == 131);

    auto p2 = find_prime_in_ap(Rational(128), Rational(256), 6, 49);
    REQUIRE(p2.has_value());
    CHECK(*p2 == 251);

    auto p3 = find_prime_in_ap(Rational(2), Rational(3), 1, 2);
    CHECK_FALSE(p3.has_value());
}

TEST_CASE("find_prime_in_ap result satisfies all membership predicates") {
    std::set<Integer> excl = {251};
    auto p = find_prime_in_ap(Rational(100), Rational(1000), 6, 49, excl);
    REQUIRE(p.has_value());
    CHECK(is_prime(*p));
    CHECK(Rational(*p) > Rational(100));
    CHECK(Rational(*p) < Rational(1000));
    CHECK((*p % 49) == 6);
    CHECK_FALSE(excl.count(*p));
    // canonical: nothing smaller qualifies
    for (Integer q = 104; q < *p; q += 49)
        CHECK((excl.count(q) || !is_prime(q)));
}

TEST_CASE("find_prime_in_ap rejects bad arguments") {
    CHECK_THROWS_AS(find_prime_in_ap(Rational(10), Rational(5), 1, 2), InvalidParams);
    CHECK_THROWS_AS(find_prime_in_ap(Rational(1), Rational(5), 2, 4), InvalidParams);
    CHECK_THROWS_AS(find_prime_in_ap(Rational(1), Rational(5), 5, 4), InvalidParams);
}

TEST_CASE("pure_radical_discriminant") {
    CHECK(pure_radical_discriminant(3, 2) == 108);
    CHECK(pure_radical_discriminant(2, 3) == 12);
    CHECK(pure_radical_discriminant(3, 5) == 675);
    CHECK_THROWS_AS(pure_radical_discriminant(0, 5), InvalidParams);
    CHECK_THROWS_AS(pure_radical_discriminant(3, 0), InvalidParams);
}

TEST_CASE("fermat_quotient_divides") {
    CHECK_FALSE(fermat_quotient_divides(5, 3));   // 9 does not divide 120
    CHECK(fermat_quotient_divides(17, 3));        // 4896 = 9 * 544
    CHECK_FALSE(fermat_quotient_divides(131, 11));
    CHECK_THROWS_AS(fermat_quotient_divides(4, 3), InvalidParams);
    CHECK_THROWS_AS(fermat_quotient_divides(5, 9), InvalidParams);
    CHECK_THROWS_AS(fermat_quotient_divides(3, 3), InvalidParams);
    CHECK_THROWS_AS(fermat_quotient_divides(2, 7), InvalidParams);
}

TEST_CASE("fermat_quotient_minus_one_residue small cases and exhaustive to 200") {
    CHECK(fermat_quotient_minus_one_residue(3) == 1);
    CHECK(fermat_quotient_minus_one_residue(5) == 1);
    CHECK(fermat_quotient_minus_one_residue(7) == 1);
    for (Integer d = 3; d <= 200; d += 2)
        if (is_prime(d)) CHECK(fermat_quotient_minus_one_residue(d) == 1);
    CHECK_THROWS_AS(fermat_quotient_minus_one_residue(9), InvalidParams);
    CHECK_THROWS_AS(fermat_quotient_minus_one_residue(4), InvalidParams);
}

TEST_CASE("congruence class implies nonvanishing Fermat quotient") {
    // For primes found with a = d-1, m = d^2 the quotient must not vanish.
    for (unsigned long d : {3ul, 5ul, 7ul, 11ul, 13ul}) {
        Integer dz(d);
        Integer m = dz * dz;
        auto p = find_prime_in_ap(Rational(2), Rational(m * 200), dz - 1, m);
        REQUIRE(p.has_value());
        CHECK_FALSE(fermat_quotient_divides(*p, dz));
    }
}

TEST_CASE("eisenstein_applicable") {
    CHECK(eisenstein_applicable(7, 251));
    CHECK_FALSE(eisenstein_applicable(3, 4));
    CHECK(eisenstein_applicable(5, 12));
    CHECK_FALSE(eisenstein_applicable(2, 36));   // 2^2 * 3^2
    CHECK(eisenstein_applicable(2, 24));         // 3 divides exactly once
}

TEST_CASE("PolyZ arithmetic and parsing") {
    PolyZ f = parse_polyz("x^3 - 17");
    CHECK(f.degree() == 3);
    CHECK(f[0] == -17);
    CHECK(f.is_monic());
    CHECK(f.to_string() == "x^3 - 17");

    PolyZ g = parse_polyz("2*x^2 + x - 1");
    CHECK((f * g).degree() == 5);
    CHECK((f + g).eval(Integer(2)) == f.eval(Integer(2)) + g.eval(Integer(2)));
    CHECK(f.eval(Integer(3)) == 10);

    auto [q, r] = (f * g + PolyZ::constant(5)).divmod_monic(f);
    CHECK(q == g);
    CHECK(r == PolyZ::constant(5));

    CHECK_THROWS_AS(parse_polyz("x +"), SyntaxError);
    CHECK_THROWS_AS(parse_polyz("y"), SyntaxError);
}

TEST_CASE("PolyZ wire form round trips") {
    PolyZ f = parse_polyz("3*x^4 - x + 12");
    auto wire = f.to_coefficient_strings();
    REQUIRE(wire.size() == 5);
    CHECK(wire[0] == "12");
    CHECK(wire[1] == "-1");
    CHECK(wire[4] == "3");
    CHECK(PolyZ::from_coefficient_strings(wire) == f);
    CHECK(PolyZ::from_coefficient_strings({"0", "0"}).is_zero());
}

TEST_CASE("PolyZ gcd and squarefree decomposition") {
    PolyZ a = parse_polyz("x^2 - 1");
    PolyZ b = parse_polyz("x^2 - 2*x + 1");
    CHECK(poly_gcd(a, b) == parse_polyz("x - 1"));

    PolyZ f = parse_polyz("x - 1") * parse_polyz("x - 1") * parse_polyz("x + 2");
    auto dec = squarefree_decomposition(f);
    REQUIRE(dec.parts.size() == 2);
    CHECK(dec.parts[0] == parse_polyz("x + 2"));
    CHECK(dec.parts[1] == parse_polyz("x - 1"));
    CHECK(dec.unit == 1);

    // f = unit * prod parts^(i+1)
    PolyZ rebuilt = PolyZ::constant(dec.unit);
    for (std::size_t i = 0; i < dec.parts.size(); ++i)
        for (std::size_t k = 0; k <= i; ++k) rebuilt = rebuilt * dec.parts[i];
    CHECK(rebuilt == f);
}

TEST_CASE("PolyFq factorization examples") {
    // x^3 mod 5 -> (x)^3
    PolyFq f = PolyFq::reduce(PolyZ::pure_radical(3, 0), 5);
    auto fac = factor_fq_naive(f);
    REQUIRE(fac.size() == 1);
    CHECK(fac[0].first == PolyFq(5, {0, 1}));
    CHECK(fac[0].second == 3);

    // x^3 - 17 mod 3 = (x+1)^3
    auto fac2 = factor_fq_naive(PolyFq::reduce(parse_polyz("x^3 - 17"), 3));
    REQUIRE(fac2.size() == 1);
    CHECK(fac2[0].first == PolyFq(3, {1, 1}));
    CHECK(fac2[0].second == 3);

    // x^2 + 1 mod 5 = (x+2)(x+3)
    auto fac3 = factor_fq_naive(PolyFq::reduce(parse_polyz("x^2 + 1"), 5));
    REQUIRE(fac3.size() == 2);
    CHECK(fac3[0].first == PolyFq(5, {2, 1}));
    CHECK(fac3[1].first == PolyFq(5, {3, 1}));
    CHECK(fac3[0].second == 1);
    CHECK(fac3[1].second == 1);
}

TEST_CASE("fq_radical handles q-th powers") {
    // (x+1)^3 mod 3 has zero derivative; the radical must still be x+1.
    PolyFq f = PolyFq::reduce(parse_polyz("x^3 + 1"), 3);
    CHECK(fq_radical(f) == PolyFq(3, {1, 1}));
    // x^3 mod 5
    CHECK(fq_radical(PolyFq::reduce(PolyZ::pure_radical(3, 0), 5)) == PolyFq(5, {0, 1}));
}

TEST_CASE("dedekind_index_coprime examples") {
    CHECK(dedekind_index_coprime(parse_polyz("x^3 - 5"), 3));
    CHECK_FALSE(dedekind_index_coprime(parse_polyz("x^3 - 17"), 3));
    CHECK(dedekind_index_coprime(parse_polyz("x^3 - 5"), 5));
    CHECK_THROWS_AS(dedekind_index_coprime(parse_polyz("2*x^3 - 5"), 3), InvalidParams);
    CHECK_THROWS_AS(dedekind_index_coprime(parse_polyz("x^3 - 5"), 4), InvalidParams);
}

namespace {

// Irreducibility over Q for monic f of degree <= 5 with small coefficients:
// no monic integer factor of degree 1 or 2 (degree 4 and 5 splits always
// contain one).  Divisor coefficient bounds come from the Cauchy bound.
bool irreducible_small(const PolyZ& f) {
    long d = f.degree();
    if (d <= 1) return d == 1;
    if (f[0] == 0) return false;
    long bound = 0;
    for (long i = 0; i < d; ++i) {
        long c = std::labs(f[static_cast<std::size_t>(i)].get_si());
        bound = std::max(bound, c);
    }
    long root_bound = 1 + bound;
    for (long r = -root_bound; r <= root_bound; ++r)
        if (f.eval(Integer(r)) == 0) return false;
    if (d <= 3) return true;
    for (long b = -2 * root_bound; b <= 2 * root_bound; ++b)
        for (long c = -root_bound * root_bound; c <= root_bound * root_bound; ++c) {
            PolyZ div({Integer(c), Integer(b), Integer(1)});
            if (f.divmod_monic(div).second.is_zero()) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("dedekind gcd form agrees with the factorization form exhaustively") {
    // all monic f, deg <= 5, coefficients in [-3, 3], irreducible over Q
    long checked = 0;
    for (int deg = 2; deg <= 5; ++deg) {
        std::vector<long> c(static_cast<std::size_t>(deg), -3);
        for (;;) {
            std::vector<Integer> coeffs;
            coeffs.reserve(static_cast<std::size_t>(deg) + 1);
            for (long x : c) coeffs.emplace_back(x);
            coeffs.emplace_back(1);
            PolyZ f(std::move(coeffs));
            if (irreducible_small(f)) {
                for (unsigned long q : {2ul, 3ul, 5ul}) {
                    bool gcd_form = dedekind_index_coprime(f, q);
                    bool fac_form = dedekind_index_coprime_factored(f, q);
                    if (gcd_form != fac_form) {
                        CAPTURE(f.to_string());
                        CAPTURE(q);
                        REQUIRE(gcd_form == fac_form);
                    }
                    ++checked;
                }
            }
            std::size_t pos = 0;
            while (pos < c.size() && ++c[pos] > 3) c[pos++] = -3;
            if (pos == c.size()) break;
        }
    }
    CHECK(checked > 1000);
}
