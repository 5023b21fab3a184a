#include "radtower/polyz.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace radtower {

void PolyZ::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyZ PolyZ::pure_radical(unsigned long d, const Integer& n) {
    if (d < 1) throw InvalidParams("pure_radical: degree must be >= 1");
    std::vector<Integer> c(d + 1, Integer(0));
    c[0] = -n;
    c[d] = 1;
    return PolyZ(std::move(c));
}

const Integer& PolyZ::leading() const {
    if (c_.empty()) throw InvalidParams("leading coefficient of the zero polynomial");
    return c_.back();
}

PolyZ operator+(const PolyZ& a, const PolyZ& b) {
    std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()), Integer(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return PolyZ(std::move(c));
}

PolyZ operator-(const PolyZ& a, const PolyZ& b) { return a + (-b); }

PolyZ PolyZ::operator-() const {
    std::vector<Integer> c(c_);
    for (auto& x : c) x = -x;
    return PolyZ(std::move(c));
}

PolyZ operator*(const PolyZ& a, const PolyZ& b) {
    if (a.is_zero() || b.is_zero()) return PolyZ();
    std::vector<Integer> c(a.c_.size() + b.c_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return PolyZ(std::move(c));
}

PolyZ PolyZ::derivative() const {
    if (c_.size() <= 1) return PolyZ();
    std::vector<Integer> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * static_cast<long>(i);
    return PolyZ(std::move(c));
}

Integer PolyZ::eval(const Integer& x) const {
    Integer r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

Rational PolyZ::eval(const Rational& x) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + Rational(*it);
    return r;
}

std::pair<PolyZ, PolyZ> PolyZ::divmod_monic(const PolyZ& d) const {
    if (!d.is_monic()) throw InvalidParams("divmod_monic: divisor not monic");
    std::vector<Integer> rem(c_);
    long dd = d.degree();
    long n = static_cast<long>(rem.size()) - 1;
    if (n < dd) return {PolyZ(), *this};
    std::vector<Integer> quot(n - dd + 1, Integer(0));
    for (long i = n; i >= dd; --i) {
        Integer q = rem[i];
        if (q == 0) continue;
        quot[i - dd] = q;
        for (long j = 0; j <= dd; ++j) rem[i - dd + j] -= q * d.c_[j];
    }
    return {PolyZ(std::move(quot)), PolyZ(std::move(rem))};
}

PolyZ PolyZ::divide_exact(const PolyZ& d) const {
    if (d.is_zero()) throw InvalidParams("divide_exact: division by zero polynomial");
    if (is_zero()) return PolyZ();
    std::vector<Integer> rem(c_);
    long dd = d.degree();
    long n = degree();
    if (n < dd) throw InvalidParams("divide_exact: not divisible");
    std::vector<Integer> quot(n - dd + 1, Integer(0));
    for (long i = n; i >= dd; --i) {
        if (rem[i] == 0) continue;
        if (!mpz_divisible_p(rem[i].get_mpz_t(), d.leading().get_mpz_t()))
            throw InvalidParams("divide_exact: not divisible");
        Integer q = rem[i] / d.leading();
        quot[i - dd] = q;
        for (long j = 0; j <= dd; ++j) rem[i - dd + j] -= q * d.c_[j];
    }
    if (std::any_of(rem.begin(), rem.end(), [](const Integer& x) { return x != 0; }))
        throw InvalidParams("divide_exact: not divisible");
    return PolyZ(std::move(quot));
}

Integer PolyZ::content() const {
    Integer g = 0;
    for (const auto& x : c_) g = gcd(g, x);
    return g;
}

PolyZ PolyZ::primitive_part() const {
    if (is_zero()) return PolyZ();
    Integer g = content();
    if (leading() < 0) g = -g;
    std::vector<Integer> c(c_);
    for (auto& x : c) x /= g;
    return PolyZ(std::move(c));
}

namespace {

// Monic Euclidean remainder sequence over Q; fine at desk-scale degrees.
using RatPoly = std::vector<Rational>;

RatPoly to_rat(const PolyZ& f) {
    RatPoly r(f.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = Rational(f[i]);
    return r;
}

void rat_trim(RatPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

RatPoly rat_rem(RatPoly a, const RatPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rational q = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[off + j] -= q * b[j];
        a.pop_back();
        rat_trim(a);
    }
    return a;
}

PolyZ rat_to_primitive(const RatPoly& f) {
    // Clear denominators, then take the primitive part.
    Integer den = 1;
    for (const auto& q : f) den = den * q.get_den() / gcd(den, Integer(q.get_den()));
    std::vector<Integer> c(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        Rational s = f[i] * Rational(den);
        c[i] = s.get_num();
    }
    return PolyZ(std::move(c)).primitive_part();
}

}  // namespace

PolyZ poly_gcd(const PolyZ& a, const PolyZ& b) {
    if (a.is_zero()) return b.is_zero() ? PolyZ() : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    RatPoly x = to_rat(a), y = to_rat(b);
    while (!y.empty()) {
        RatPoly r = rat_rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return rat_to_primitive(x);
}

SquarefreeDecomposition squarefree_decomposition(const PolyZ& f) {
    if (f.is_zero()) throw InvalidParams("squarefree_decomposition of zero");
    SquarefreeDecomposition out;
    out.unit = f.content();
    if (f.leading() < 0) out.unit = -out.unit;
    PolyZ p = f.primitive_part();
    if (p.degree() < 1) return out;

    // Yun: g = gcd(p, p'); w = p/g carries one copy of every factor, and
    // successive gcds peel the factors off by multiplicity.
    PolyZ g = poly_gcd(p, p.derivative());
    PolyZ w = p.divide_exact(g);
    PolyZ y = p.derivative().divide_exact(g);
    long guard = p.degree() + 2;
    while (w.degree() > 0 && guard-- > 0) {
        PolyZ z = y - w.derivative();
        PolyZ part = poly_gcd(w, z);
        out.parts.push_back(part);
        w = w.divide_exact(part);
        y = z.divide_exact(part);
    }
    return out;
}

std::string PolyZ::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const Integer& a = c_[i];
        if (a == 0) continue;
        Integer mag = abs(a);
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        bool unit = (mag == 1);
        if (i == 0 || !unit) os << mag.get_str();
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

struct PzParser {
    const std::string& s;
    std::size_t i = 0;

    explicit PzParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    PolyZ parse() {
        PolyZ r = expr();
        skip_ws();
        if (i != s.size()) throw SyntaxError("trailing characters in polynomial");
        return r;
    }

    PolyZ expr() {
        bool neg = false;
        skip_ws();
        if (eat('-'))
            neg = true;
        else
            eat('+');
        PolyZ acc = term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                break;
        }
        return acc;
    }

    PolyZ term() {
        PolyZ acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    PolyZ factor() {
        PolyZ base = atom();
        if (eat('^')) {
            unsigned long e = uint_lit();
            PolyZ r = PolyZ::constant(1);
            for (unsigned long k = 0; k < e; ++k) r = r * base;
            return r;
        }
        return base;
    }

    PolyZ atom() {
        skip_ws();
        if (i >= s.size()) throw SyntaxError("unexpected end of polynomial");
        if (s[i] == '(') {
            ++i;
            PolyZ r = expr();
            if (!eat(')')) throw SyntaxError("missing ')'");
            return r;
        }
        if (s[i] == 'x') {
            ++i;
            return PolyZ({Integer(0), Integer(1)});
        }
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::string digits;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                digits += s[i++];
            return PolyZ::constant(Integer(digits));
        }
        throw SyntaxError(std::string("unexpected character '") + s[i] + "' in polynomial");
    }

    unsigned long uint_lit() {
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw SyntaxError("expected exponent");
        unsigned long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + static_cast<unsigned long>(s[i] - '0');
            if (v > 1000) throw SyntaxError("exponent too large");
            ++i;
        }
        return v;
    }
};

}  // namespace

PolyZ parse_polyz(const std::string& text) { return PzParser(text).parse(); }

std::vector<std::string> PolyZ::to_coefficient_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c.get_str());
    return out;
}

PolyZ PolyZ::from_coefficient_strings(const std::vector<std::string>& coeffs) {
    std::vector<Integer> c;
    c.reserve(coeffs.size());
    for (const auto& s : coeffs) c.push_back(int_from_string(s));
    return PolyZ(std::move(c));
}

}  // namespace radtower
