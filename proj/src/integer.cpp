#include "radtower/integer.hpp"

#include <cctype>

namespace radtower {

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_parts(const Integer& num, const Integer& den) {
    if (den == 0) throw InvalidParams("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

Rational parse_decimal(const std::string& s) {
    // [sign] digits [. digits] [ (e|E) [sign] digits ]
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = (s[i] == '-');
        ++i;
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_digit = false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        digits += s[i++];
        seen_digit = true;
    }
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits += s[i++];
            ++frac_digits;
            seen_digit = true;
        }
    }
    long exp10 = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            eneg = (s[i] == '-');
            ++i;
        }
        if (i >= s.size()) throw InvalidParams("bad exponent in \"" + s + "\"");
        long e = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            e = e * 10 + (s[i++] - '0');
            if (e > 1000000) throw InvalidParams("exponent too large in \"" + s + "\"");
        }
        exp10 = eneg ? -e : e;
    }
    if (!seen_digit || i != s.size())
        throw InvalidParams("not a rational literal: \"" + s + "\"");

    Integer num(digits.empty() ? std::string("0") : digits, 10);
    if (neg) num = -num;
    long net = exp10 - frac_digits;
    Integer den = 1;
    if (net >= 0) {
        Integer p10;
        mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(net));
        num *= p10;
    } else {
        mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(-net));
    }
    return rational_from_parts(num, den);
}

}  // namespace

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Integer num = int_from_string(s.substr(0, slash));
        Integer den = int_from_string(s.substr(slash + 1));
        return rational_from_parts(num, den);
    }
    if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
        s.find('E') != std::string::npos)
        return parse_decimal(s);
    return Rational(int_from_string(s));
}

Integer pow_int(const Integer& n, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), n.get_mpz_t(), e);
    return r;
}

Rational pow_rat(const Rational& q, unsigned long e) {
    return rational_from_parts(pow_int(q.get_num(), e), pow_int(q.get_den(), e));
}

Integer powmod(const Integer& base, const Integer& e, const Integer& m) {
    if (m <= 0) throw InvalidParams("powmod: modulus must be positive");
    Integer r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

}  // namespace radtower
