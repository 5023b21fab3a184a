#include "radtower/polyfq.hpp"

#include <algorithm>
#include <sstream>

#include "radtower/primality.hpp"

namespace radtower {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
    return (a * b) % q;  // q < 2^31, so the product fits in 64 bits
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t q) {
    // Extended Euclid; q prime and a != 0 mod q.
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(q), newr = static_cast<std::int64_t>(a % q);
    while (newr != 0) {
        std::int64_t quo = r / newr;
        std::swap(t -= quo * newt, newt);
        std::swap(r -= quo * newr, newr);
    }
    if (r != 1) throw InvalidParams("invmod: not invertible");
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(q) : t);
}

}  // namespace

PolyFq::PolyFq(std::uint64_t q, std::vector<std::uint64_t> coeffs)
    : q_(q), c_(std::move(coeffs)) {
    if (q_ < 2 || q_ >= (1ull << 31)) throw InvalidParams("PolyFq: modulus out of range");
    for (auto& x : c_) x %= q_;
    trim();
}

void PolyFq::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyFq PolyFq::reduce(const PolyZ& f, const Integer& q) {
    if (!q.fits_ulong_p() || q >= (1l << 31) || !is_prime(q))
        throw InvalidParams("PolyFq::reduce: modulus must be a prime < 2^31");
    std::uint64_t qu = q.get_ui();
    std::vector<std::uint64_t> c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        Integer r = ((f[i] % q) + q) % q;
        c[i] = r.get_ui();
    }
    return PolyFq(qu, std::move(c));
}

bool operator<(const PolyFq& a, const PolyFq& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.c_.size(); i-- > 0;)
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    return false;
}

PolyFq operator+(const PolyFq& a, const PolyFq& b) {
    if (a.q_ != b.q_) throw InvalidParams("PolyFq: modulus mismatch");
    std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = (c[i] + b.c_[i]) % a.q_;
    return PolyFq(a.q_, std::move(c));
}

PolyFq operator-(const PolyFq& a, const PolyFq& b) {
    if (a.q_ != b.q_) throw InvalidParams("PolyFq: modulus mismatch");
    std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = (c[i] + a.q_ - b.c_[i]) % a.q_;
    return PolyFq(a.q_, std::move(c));
}

PolyFq operator*(const PolyFq& a, const PolyFq& b) {
    if (a.q_ != b.q_) throw InvalidParams("PolyFq: modulus mismatch");
    if (a.is_zero() || b.is_zero()) return PolyFq::zero(a.q_);
    std::vector<std::uint64_t> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] = (c[i + j] + a.c_[i] * b.c_[j]) % a.q_;
    return PolyFq(a.q_, std::move(c));
}

PolyFq PolyFq::derivative() const {
    if (c_.size() <= 1) return zero(q_);
    std::vector<std::uint64_t> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = mulmod(c_[i], i % q_, q_);
    return PolyFq(q_, std::move(c));
}

PolyFq PolyFq::monic() const {
    if (is_zero()) return *this;
    std::uint64_t inv = invmod(c_.back(), q_);
    std::vector<std::uint64_t> c(c_);
    for (auto& x : c) x = mulmod(x, inv, q_);
    return PolyFq(q_, std::move(c));
}

std::uint64_t PolyFq::eval(std::uint64_t x) const {
    std::uint64_t r = 0;
    x %= q_;
    for (std::size_t i = c_.size(); i-- > 0;) r = (mulmod(r, x, q_) + c_[i]) % q_;
    return r;
}

std::pair<PolyFq, PolyFq> PolyFq::divmod(const PolyFq& d) const {
    if (d.q_ != q_) throw InvalidParams("PolyFq: modulus mismatch");
    if (d.is_zero()) throw InvalidParams("PolyFq: division by zero");
    std::vector<std::uint64_t> rem(c_);
    long dd = d.degree();
    long n = degree();
    if (n < dd) return {zero(q_), *this};
    std::uint64_t inv_lead = invmod(d.c_.back(), q_);
    std::vector<std::uint64_t> quot(n - dd + 1, 0);
    for (long i = n; i >= dd; --i) {
        std::uint64_t qc = mulmod(rem[i], inv_lead, q_);
        if (qc == 0) continue;
        quot[i - dd] = qc;
        for (long j = 0; j <= dd; ++j) {
            std::uint64_t sub = mulmod(qc, d.c_[j], q_);
            rem[i - dd + j] = (rem[i - dd + j] + q_ - sub) % q_;
        }
    }
    return {PolyFq(q_, std::move(quot)), PolyFq(q_, std::move(rem))};
}

PolyZ PolyFq::lift() const {
    std::vector<Integer> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = Integer(static_cast<unsigned long>(c_[i]));
    return PolyZ(std::move(c));
}

PolyFq fq_gcd(PolyFq a, PolyFq b) {
    while (!b.is_zero()) {
        PolyFq r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace {

// f with zero derivative is a q-th power: f(x) = u(x^q), and u recovers the
// q-th root since c^q = c for every c in the prime field.
PolyFq qth_root(const PolyFq& f) {
    std::uint64_t q = f.modulus();
    std::vector<std::uint64_t> c(f.coeffs().size() / q + 1, 0);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (f[i] == 0) continue;
        if (i % q != 0) throw InvalidParams("qth_root: not a q-th power");
        c[i / q] = f[i];
    }
    return PolyFq(q, std::move(c));
}

}  // namespace

PolyFq fq_radical(const PolyFq& f) {
    if (f.is_zero()) throw InvalidParams("fq_radical of zero");
    std::uint64_t q = f.modulus();
    PolyFq rad = PolyFq::one(q);
    PolyFq rest = f.monic();
    while (rest.degree() > 0) {
        PolyFq der = rest.derivative();
        if (der.is_zero()) {
            rest = qth_root(rest);
            continue;
        }
        PolyFq s = fq_gcd(rest, der);
        PolyFq sqf = rest.divmod(s).first;  // distinct factors with multiplicity not div by q
        rad = (rad * sqf.divmod(fq_gcd(rad, sqf)).first).monic();
        rest = s;
    }
    return rad;
}

std::vector<std::pair<PolyFq, int>> factor_fq_naive(const PolyFq& f) {
    if (f.is_zero()) throw InvalidParams("factor_fq_naive of zero");
    std::uint64_t q = f.modulus();
    if (q > 50 || f.degree() > 12)
        throw InvalidParams("factor_fq_naive: outside the naive-feasible range");
    std::vector<std::pair<PolyFq, int>> out;
    PolyFq rest = f.monic();
    for (long deg = 1; rest.degree() >= 2 * deg; ++deg) {
        // All monic candidates of this degree, lexicographically.
        std::vector<std::uint64_t> digits(deg, 0);
        for (;;) {
            std::vector<std::uint64_t> c(digits);
            c.push_back(1);
            PolyFq cand(q, std::move(c));
            int mult = 0;
            for (;;) {
                auto [quo, rem] = rest.divmod(cand);
                if (!rem.is_zero()) break;
                rest = quo;
                ++mult;
            }
            if (mult > 0) out.emplace_back(cand, mult);
            // next candidate
            std::size_t pos = 0;
            while (pos < digits.size() && ++digits[pos] == q) digits[pos++] = 0;
            if (pos == digits.size()) break;
        }
    }
    if (rest.degree() >= 1) out.emplace_back(rest, 1);
    return out;
}

std::string PolyFq::to_string(const std::string& var) const { return lift().to_string(var); }

}  // namespace radtower
