#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace radtower {

/// Named property suites: seeded random (or exhaustive) instance batteries
/// for the inequalities the library is built around.  Shared between the
/// test harness and the `lemma-check` CLI subcommand.
struct SuiteResult {
    std::string name;
    std::uint64_t instances = 0;
    std::uint64_t violations = 0;
    std::vector<std::string> notes;
    bool pass() const { return instances > 0 && violations == 0; }
    std::string to_json_string() const;
};

/// Suites (default instance counts in parentheses):
///   l2-lower-bound      max|B(xi_i)| dominates the l2 floor (1000)
///   l2-scaled           the normalized-tuple variant (1000)
///   l2-window           the unit-circle window variant (1000)
///   root-lift           lifting by n-th roots divides discrepancy by n/2 (500)
///   product-tuple       discrepancy of products of coprime-size tuples (500)
///   fermat-quotient-residue   ((d-1)^(d-1)-1)/d == 1 mod d, odd primes d <= 200
///   house-top-coeff     enumerated houses dominate the top-coefficient floor
///   house-floor         enumerated min house attains eta at the generator
///   weil-floor          enumerated Weil heights dominate the step floor
///   linear-form-house   house(a1 xi + a0) >= house(a1) house(xi)
///   dedekind-agreement  gcd form == factorization form, exhaustive
///   disc-resultant      closed-form discriminant == resultant oracle
///   closed-forms        single- and double-point discrepancy closed forms
SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::uint64_t count,
                      double tol);

std::vector<std::string> suite_names();

}  // namespace radtower
