#include "radtower/tower.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "radtower/arith.hpp"
#include "radtower/errors.hpp"
#include "radtower/primality.hpp"

namespace radtower {

using nlohmann::ordered_json;

std::string to_string(OrderingMode m) {
    return m == OrderingMode::Weak ? "weak" : "strict";
}

OrderingMode ordering_mode_from_string(const std::string& s) {
    if (s == "weak") return OrderingMode::Weak;
    if (s == "strict") return OrderingMode::Strict;
    throw InvalidParams("ordering_mode must be \"weak\" or \"strict\"");
}

Integer RadicalTower::degree() const {
    Integer d = 1;
    for (const auto& s : steps) d *= s.d;
    return d;
}

unsigned long RadicalTower::degree_ul() const {
    Integer d = degree();
    if (mpz_sizeinbase(d.get_mpz_t(), 2) > 40) throw TooLarge("tower degree too large");
    return d.get_ui();
}

std::vector<std::string> RadicalTower::validate() const {
    std::vector<std::string> bad;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto& s = steps[i];
        std::string tag = "step " + std::to_string(i + 1) + ": ";
        if (!is_prime(s.p)) bad.push_back(tag + "p = " + to_string(s.p) + " is not prime");
        if (!is_prime(s.d)) bad.push_back(tag + "d = " + to_string(s.d) + " is not prime");
    }
    if (!bad.empty()) return bad;
    if (mode == OrderingMode::Strict) {
        for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
            Integer prev_max = std::max(steps[i].p, steps[i].d);
            Integer next_min = std::min(steps[i + 1].p, steps[i + 1].d);
            if (!(next_min > prev_max))
                bad.push_back("strict ordering violated between steps " +
                              std::to_string(i + 1) + " and " + std::to_string(i + 2));
        }
    } else {
        std::set<Integer> seen;
        for (std::size_t i = 0; i < steps.size(); ++i) {
            if (!seen.insert(steps[i].p).second)
                bad.push_back("prime " + to_string(steps[i].p) + " reused (step " +
                              std::to_string(i + 1) + ")");
            if (!seen.insert(steps[i].d).second)
                bad.push_back("prime " + to_string(steps[i].d) + " reused (step " +
                              std::to_string(i + 1) + ")");
        }
    }
    return bad;
}

void RadicalTower::require_valid() const {
    auto bad = validate();
    if (!bad.empty()) throw InvalidParams("invalid tower: " + bad.front());
}

void RadicalTower::require_valid_through(std::size_t step_count) const {
    if (step_count > steps.size()) throw InvalidStep("step index beyond the tower");
    prefix(step_count).require_valid();
}

RadicalTower RadicalTower::prefix(std::size_t step_count) const {
    if (step_count > steps.size()) throw InvalidStep("prefix longer than the tower");
    RadicalTower t;
    t.mode = mode;
    t.steps.assign(steps.begin(), steps.begin() + static_cast<long>(step_count));
    return t;
}

std::string RadicalTower::to_json() const {
    ordered_json j;
    j["ordering_mode"] = radtower::to_string(mode);
    j["steps"] = ordered_json::array();
    for (const auto& s : steps) {
        ordered_json js;
        js["p"] = to_string(s.p);
        js["d"] = to_string(s.d);
        if (s.interval)
            js["interval"] = {to_string(s.interval->first), to_string(s.interval->second)};
        ordered_json checks = ordered_json::object();
        if (s.checks.congruence) checks["congruence"] = *s.checks.congruence;
        if (s.checks.monogenic) checks["monogenic"] = *s.checks.monogenic;
        if (s.checks.eisenstein) checks["eisenstein"] = *s.checks.eisenstein;
        if (!checks.empty()) js["checks"] = checks;
        j["steps"].push_back(js);
    }
    return j.dump();
}

namespace {

RadicalTower tower_from_parsed_json(const nlohmann::json& j) {
    RadicalTower t;
    if (!j.is_object() || !j.contains("steps"))
        throw InvalidParams("tower JSON: missing \"steps\"");
    if (j.contains("ordering_mode"))
        t.mode = ordering_mode_from_string(j.at("ordering_mode").get<std::string>());
    for (const auto& js : j.at("steps")) {
        RadicalStep s;
        s.p = int_from_string(js.at("p").get<std::string>());
        s.d = int_from_string(js.at("d").get<std::string>());
        if (js.contains("interval")) {
            const auto& iv = js.at("interval");
            if (!iv.is_array() || iv.size() != 2)
                throw InvalidParams("tower JSON: interval must be [lo, hi]");
            s.interval = {rational_from_string(iv[0].get<std::string>()),
                          rational_from_string(iv[1].get<std::string>())};
        }
        if (js.contains("checks")) {
            const auto& c = js.at("checks");
            if (c.contains("congruence")) s.checks.congruence = c.at("congruence").get<bool>();
            if (c.contains("monogenic")) s.checks.monogenic = c.at("monogenic").get<bool>();
            if (c.contains("eisenstein")) s.checks.eisenstein = c.at("eisenstein").get<bool>();
        }
        t.steps.push_back(std::move(s));
    }
    return t;
}

}  // namespace

RadicalTower RadicalTower::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidParams(std::string("tower JSON: ") + e.what());
    }
    try {
        // A certificate file carries the tower under "tower".
        if (j.is_object() && j.contains("tower")) return tower_from_parsed_json(j.at("tower"));
        return tower_from_parsed_json(j);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidParams(std::string("tower JSON: ") + e.what());
    }
}

TowerElement TowerElement::constant(std::size_t arity, const Integer& c) {
    TowerElement e(arity);
    e.add_term(Exponents(arity, 0), c);
    return e;
}

TowerElement TowerElement::generator(const RadicalTower& tower, std::size_t index) {
    if (index < 1 || index > tower.size())
        throw InvalidParams("generator index out of range");
    TowerElement e(tower.size());
    Exponents ex(tower.size(), 0);
    ex[index - 1] = 1;
    e.add_term(ex, 1);
    return e;
}

void TowerElement::add_term(const Exponents& e, const Integer& c) {
    if (e.size() != arity_) throw InvalidParams("exponent vector arity mismatch");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

unsigned TowerElement::top_degree(std::size_t var) const {
    unsigned m = 0;
    for (const auto& [e, c] : terms_) m = std::max(m, e[var]);
    return m;
}

bool TowerElement::involves(std::size_t var) const {
    for (const auto& [e, c] : terms_)
        if (e[var] > 0) return true;
    return false;
}

TowerElement TowerElement::top_coefficient(unsigned m) const {
    if (arity_ == 0) throw InvalidParams("top_coefficient on a constant element");
    TowerElement out(arity_ - 1);
    for (const auto& [e, c] : terms_) {
        if (e[arity_ - 1] != m) continue;
        Exponents sub(e.begin(), e.end() - 1);
        out.add_term(sub, c);
    }
    return out;
}

TowerElement operator+(const TowerElement& a, const TowerElement& b) {
    if (a.arity_ != b.arity_) throw InvalidParams("element arity mismatch");
    TowerElement out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
}

TowerElement operator-(const TowerElement& a, const TowerElement& b) { return a + (-b); }

TowerElement TowerElement::operator-() const {
    TowerElement out(arity_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

bool operator==(const TowerElement& a, const TowerElement& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
}

TowerElement element_mul(const RadicalTower& tower, const TowerElement& a,
                         const TowerElement& b) {
    if (a.arity() != tower.size() || b.arity() != tower.size())
        throw InvalidParams("element arity does not match the tower");
    TowerElement out(tower.size());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            TowerElement::Exponents e(tower.size());
            Integer c = ca * cb;
            for (std::size_t i = 0; i < tower.size(); ++i) {
                unsigned long d = tower.steps[i].d.get_ui();
                unsigned long sum = ea[i] + eb[i];
                // x_i^(d_i) = p_i
                while (sum >= d) {
                    sum -= d;
                    c *= tower.steps[i].p;
                }
                e[i] = static_cast<unsigned>(sum);
            }
            out.add_term(e, c);
        }
    }
    return out;
}

std::string TowerElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Integer mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool any_var = std::any_of(e.begin(), e.end(), [](unsigned m) { return m > 0; });
        bool unit = (mag == 1);
        if (!any_var || !unit) os << mag.get_str();
        bool lead = !any_var || !unit;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (lead) os << "*";
            lead = true;
            os << "x" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

namespace {

struct ElementParser {
    const std::string& s;
    const RadicalTower& tower;
    std::size_t i = 0;

    ElementParser(const std::string& text, const RadicalTower& t) : s(text), tower(t) {}

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

    TowerElement parse() {
        TowerElement r = expr();
        skip_ws();
        if (i != s.size()) throw SyntaxError("trailing characters in element text");
        return r;
    }

    TowerElement expr() {
        bool neg = false;
        skip_ws();
        if (eat('-'))
            neg = true;
        else
            eat('+');
        TowerElement acc = term();
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

    TowerElement term() {
        TowerElement acc = factor();
        while (eat('*')) acc = raw_mul(acc, factor());
        return acc;
    }

    // Multiplication without reduction: exponents at or above d_i are a
    // parse error, not something to fold through x_i^(d_i) = p_i.
    TowerElement raw_mul(const TowerElement& a, const TowerElement& b) {
        TowerElement out(tower.size());
        for (const auto& [ea, ca] : a.terms())
            for (const auto& [eb, cb] : b.terms()) {
                TowerElement::Exponents e(tower.size());
                for (std::size_t v = 0; v < tower.size(); ++v) {
                    unsigned long sum = ea[v] + eb[v];
                    check_exponent(v, sum);
                    e[v] = static_cast<unsigned>(sum);
                }
                out.add_term(e, ca * cb);
            }
        return out;
    }

    void check_exponent(std::size_t var, unsigned long m) {
        if (Integer(static_cast<unsigned long>(m)) >= tower.steps[var].d)
            throw ExponentOutOfRange("exponent " + std::to_string(m) + " of x" +
                                     std::to_string(var + 1) + " must be below d = " +
                                     to_string(tower.steps[var].d));
    }

    TowerElement factor() {
        TowerElement base = atom();
        if (eat('^')) {
            unsigned long e = uint_lit();
            TowerElement r = TowerElement::constant(tower.size(), 1);
            for (unsigned long k = 0; k < e; ++k) r = raw_mul(r, base);
            return r;
        }
        return base;
    }

    TowerElement atom() {
        skip_ws();
        if (i >= s.size()) throw SyntaxError("unexpected end of element text");
        if (s[i] == '(') {
            ++i;
            TowerElement r = expr();
            if (!eat(')')) throw SyntaxError("missing ')'");
            return r;
        }
        if (s[i] == 'x') {
            ++i;
            std::size_t start = i;
            unsigned long idx = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                idx = idx * 10 + static_cast<unsigned long>(s[i] - '0');
                if (idx > 10000) break;
                ++i;
            }
            if (i == start) throw SyntaxError("variable must be x1, x2, ...");
            if (idx < 1 || idx > tower.size())
                throw UnknownVariable("unknown variable x" + std::to_string(idx) +
                                      " (tower has " + std::to_string(tower.size()) +
                                      " steps)");
            TowerElement e(tower.size());
            TowerElement::Exponents ex(tower.size(), 0);
            ex[idx - 1] = 1;
            check_exponent(idx - 1, 1);
            e.add_term(ex, 1);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::string digits;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                digits += s[i++];
            return TowerElement::constant(tower.size(), Integer(digits));
        }
        throw SyntaxError(std::string("unexpected character '") + s[i] + "' in element text");
    }

    unsigned long uint_lit() {
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw SyntaxError("expected exponent");
        unsigned long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + static_cast<unsigned long>(s[i] - '0');
            if (v > 1000000) throw SyntaxError("exponent too large");
            ++i;
        }
        return v;
    }
};

}  // namespace

TowerElement parse_element(const std::string& src, const RadicalTower& tower) {
    return ElementParser(src, tower).parse();
}

}  // namespace radtower
