#include "radtower/dedekind.hpp"

#include "radtower/primality.hpp"

namespace radtower {

bool dedekind_index_coprime(const PolyZ& f, const Integer& q) {
    if (!f.is_monic()) throw InvalidParams("dedekind_index_coprime: f must be monic");
    if (!is_prime(q)) throw InvalidParams("dedekind_index_coprime: q must be prime");

    PolyFq fbar = PolyFq::reduce(f, q);
    PolyFq gbar = fq_radical(fbar);
    PolyFq hbar = fbar.divmod(gbar).first;

    PolyZ g = gbar.lift();
    PolyZ h = hbar.lift();
    PolyZ num = g * h - f;  // == 0 mod q by construction
    std::vector<Integer> fc(num.coeffs());
    for (auto& x : fc) {
        if (!mpz_divisible_p(x.get_mpz_t(), q.get_mpz_t()))
            throw InvalidParams("dedekind_index_coprime: internal lift mismatch");
        x /= q;
    }
    PolyFq Fbar = PolyFq::reduce(PolyZ(std::move(fc)), q);

    PolyFq common = fq_gcd(fq_gcd(Fbar, gbar), hbar);
    return common.degree() == 0;
}

bool dedekind_index_coprime_factored(const PolyZ& f, const Integer& q) {
    if (!f.is_monic()) throw InvalidParams("dedekind_index_coprime_factored: f must be monic");
    if (!is_prime(q)) throw InvalidParams("dedekind_index_coprime_factored: q must be prime");

    PolyFq fbar = PolyFq::reduce(f, q);
    auto factors = factor_fq_naive(fbar);

    PolyZ prod = PolyZ::constant(1);
    for (const auto& [phi, e] : factors) {
        PolyZ mu = phi.lift();
        for (int k = 0; k < e; ++k) prod = prod * mu;
    }
    PolyZ num = f - prod;
    std::vector<Integer> gc(num.coeffs());
    for (auto& x : gc) {
        if (!mpz_divisible_p(x.get_mpz_t(), q.get_mpz_t()))
            throw InvalidParams("dedekind_index_coprime_factored: internal lift mismatch");
        x /= q;
    }
    PolyFq gbar = PolyFq::reduce(PolyZ(std::move(gc)), q);

    for (const auto& [phi, e] : factors) {
        if (e == 1) continue;
        if (gbar.divmod(phi).second.is_zero()) return false;
    }
    return true;
}

}  // namespace radtower
