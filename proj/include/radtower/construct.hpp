#pragma once

#include "radtower/certificate.hpp"

namespace radtower {

/// Certificate-emitting constructors.  All prime selections are canonical
/// (least qualifying candidate, scanning upward), so identical parameters
/// reproduce identical certificates.

/// Prescribed house-Northcott-number towers.  Degrees d_i run through
/// successive primes from d_seed; primes p_i are drawn from the variant's
/// window with p == d-1 (mod d^2) and freshness exclusion:
///   house-a: (t^d / 2, t^d)      house accumulates below t
///   house-b: (t^d, 2 t^d)        isolated window above t
///   house-c: (T_j^d, 2 T_j^d)    targets T_j = t (1 + 2^-j) served in a
///                                diagonal schedule, recorded per step
/// Throws SearchExhausted when a step's window holds no qualifying prime
/// (expected for small degrees; existence is only asymptotic).
Certificate construct_house_spectrum(ConstructionVariant variant, const Rational& t, long k,
                                     const Integer& d_seed,
                                     OrderingMode mode = OrderingMode::Weak,
                                     double tol = 1e-9, const NumericBudget& budget = {});

/// Tower whose Weil-height Northcott number lands in [t, 2t]: p_i is the
/// first fresh prime in (e^(2 t d_i), 2 e^(2 t d_i)), endpoints enclosed
/// until every candidate is decidedly in or out.  When the window holds no
/// integer (e.g. t = 0 gives (1, 2)) the scan widens to the next fresh
/// prime above the lower endpoint and flags the step.
Certificate construct_weil_window(const Rational& t, long k, const Integer& d_seed,
                                  OrderingMode mode = OrderingMode::Weak, double tol = 1e-9,
                                  const NumericBudget& budget = {});

/// gamma-Northcott but not (gamma-eps)-Bogomolov: degrees double
/// (d_{i+1} = first prime >= 2 d_i) and log p_i is steered into
/// [d^(1-gamma+eps/2), log 2 + d^(1-gamma+eps/2)].  Freshness is preferred
/// but an unavoidable collision is flagged rather than fatal.
Certificate construct_weighted_gap(double gamma, double eps, long k, const Integer& d_seed,
                                   OrderingMode mode = OrderingMode::Weak, double tol = 1e-9,
                                   const NumericBudget& budget = {});

/// Per-tuple verdicts for extending a tower by gamma^(1/n): the normalized
/// root discrepancy bound, the min-modulus condition, and the closeness of
/// (s/house)^(1/n) to 1.  Degree multiplicativity is the caller's claim
/// and is echoed, not verified.
struct RootExtensionVerdict {
    bool discrepancy_ok = false;
    bool discrepancy_decided = false;
    bool min_modulus_ok = false;
    bool min_modulus_decided = false;
    bool ratio_near_one = false;
    bool ratio_decided = false;
    RealInterval ratio;  // (s/house)^(1/n)
};

struct RootExtensionReport {
    std::vector<RootExtensionVerdict> verdicts;
    bool degree_multiplicativity_caller_asserted = true;
    std::string to_json_string() const;
};

RootExtensionReport check_root_extension_conditions(
    const std::vector<std::pair<PointTuple, Integer>>& data, double tol,
    double ratio_slack = 0.1, const NumericBudget& budget = {});

/// Re-derives every step of a certificate from its parameters: the degree
/// schedule, the canonical prime selection, every flag, and the report
/// enclosures (which must intersect the stored ones).  A certificate
/// passes only with zero mismatches.
struct VerificationReport {
    bool pass = false;
    std::vector<std::string> mismatches;
    std::string to_json_string() const;
};

VerificationReport verify_certificate(const Certificate& cert, double tol = 1e-9,
                                      const NumericBudget& budget = {});

}  // namespace radtower
