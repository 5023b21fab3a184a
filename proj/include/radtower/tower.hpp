#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "radtower/integer.hpp"

namespace radtower {

/// One radical adjunction p^(1/d) with p, d prime.  The optional interval
/// records the search window the prime was drawn from; the optional flags
/// cache checks that are always recomputable from (p, d, interval).
struct StepChecksLite {
    std::optional<bool> congruence;  // p == d-1 (mod d^2)
    std::optional<bool> monogenic;   // Z[p^(1/d)] is the full ring of integers
    std::optional<bool> eisenstein;  // x^d - p Eisenstein at p
};

struct RadicalStep {
    Integer p;
    Integer d;
    std::optional<std::pair<Rational, Rational>> interval;
    StepChecksLite checks;
};

enum class OrderingMode { Weak, Strict };

std::string to_string(OrderingMode m);
OrderingMode ordering_mode_from_string(const std::string& s);

/// Tower Z[p_1^(1/d_1), ..., p_k^(1/d_k)].
///
/// Strict ordering demands min(p_{i+1}, d_{i+1}) > max(p_i, d_i), which is
/// what the integral-closure argument literally assumes; it forces doubly
/// exponential growth.  Weak ordering keeps exactly what that argument
/// uses: the 2k primes p_i, d_i are pairwise distinct (so ramified primes
/// stay disjoint and the degrees d_i are coprime).
struct RadicalTower {
    std::vector<RadicalStep> steps;
    OrderingMode mode = OrderingMode::Weak;

    std::size_t size() const { return steps.size(); }
    /// Total degree prod d_i over Q.
    Integer degree() const;
    unsigned long degree_ul() const;  // throws TooLarge past 2^40 embeddings

    /// Empty list when valid; otherwise one message per violated condition.
    std::vector<std::string> validate() const;
    void require_valid() const;  // throws InvalidParams with the first issue
    void require_valid_through(std::size_t step_count) const;

    RadicalTower prefix(std::size_t step_count) const;

    std::string to_json() const;
    static RadicalTower from_json(const std::string& text);
};

/// Element of the tower ring: an integer-coefficient polynomial in the
/// generators with per-variable degree below d_i.  Keys are exponent
/// vectors of length size(); no zero coefficients are stored.
class TowerElement {
  public:
    using Exponents = std::vector<unsigned>;

    TowerElement() = default;
    explicit TowerElement(std::size_t arity) : arity_(arity) {}
    static TowerElement constant(std::size_t arity, const Integer& c);
    static TowerElement generator(const RadicalTower& tower, std::size_t index);  // 1-based

    std::size_t arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Integer>& terms() const { return terms_; }

    /// Adds c * x^e; removes the monomial if the sum cancels.
    void add_term(const Exponents& e, const Integer& c);

    /// Highest exponent of variable `var` (0-based) present, 0 if none.
    unsigned top_degree(std::size_t var) const;
    bool involves(std::size_t var) const;
    /// Collect the coefficient of x_var^m as an element of arity-1 fewer
    /// variables (the sub-tower element); only valid for var = arity-1.
    TowerElement top_coefficient(unsigned m) const;

    friend TowerElement operator+(const TowerElement& a, const TowerElement& b);
    friend TowerElement operator-(const TowerElement& a, const TowerElement& b);
    TowerElement operator-() const;
    friend bool operator==(const TowerElement& a, const TowerElement& b);

    std::string to_string() const;

  private:
    std::size_t arity_ = 0;
    std::map<Exponents, Integer> terms_;
};

/// Product in the tower ring, reducing by x_i^(d_i) = p_i.
TowerElement element_mul(const RadicalTower& tower, const TowerElement& a,
                         const TowerElement& b);

/// Parses "1 + 2*x1 - x1^2" style text over the tower's variables x1..xk.
/// Exponents at or above d_i are rejected (ExponentOutOfRange), never
/// reduced; unknown variables raise UnknownVariable.
TowerElement parse_element(const std::string& src, const RadicalTower& tower);

}  // namespace radtower
