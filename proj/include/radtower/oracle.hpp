#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "radtower/heights.hpp"
#include "radtower/polyz.hpp"
#include "radtower/tower.hpp"

namespace radtower {

/// Enumeration of the new elements of step i: every element of
/// O_i \ O_{i-1} with coefficients in [-C, C], i.e. every coefficient
/// assignment on the monomial slots with at least one nonzero coefficient
/// on a slot involving x_i.  A slot mask restricts which monomials may be
/// nonzero, which keeps multi-step towers feasible.
struct EnumerationSpec {
    RadicalTower tower;
    std::size_t step_index = 1;  // 1-based
    long coeff_bound = 1;
    bool include_constants = false;
    std::optional<std::vector<TowerElement::Exponents>> slot_mask;
    std::uint64_t cap = 10'000'000;
    int threads = 1;
};

/// Monomial slots of the enumeration in their canonical order.
std::vector<TowerElement::Exponents> enumeration_slots(const EnumerationSpec& spec);

/// Number of elements the stream will produce, by the closed form
/// (2C+1)^slots - (2C+1)^(slots not involving x_i).
Integer enumeration_count(const EnumerationSpec& spec);

/// Pull-based stream over the enumeration; next() returns false when done.
class ElementEnumerator {
  public:
    explicit ElementEnumerator(EnumerationSpec spec);
    bool next(TowerElement& out);
    const EnumerationSpec& spec() const { return spec_; }

  private:
    EnumerationSpec spec_;
    std::vector<TowerElement::Exponents> slots_;
    std::vector<bool> slot_is_new_;
    std::uint64_t index_ = 0;
    std::uint64_t total_ = 0;
    std::vector<long> digits_;
};

struct MinScanResult {
    RealInterval value;      // certified enclosure at the witness
    TowerElement witness;    // first attaining element in scan order
    std::uint64_t scanned;   // number of stream elements visited
};

/// Minimum house over the stream.  The scan runs in fast midpoint (double)
/// arithmetic over a Gray-code walk of the coefficient space; the witness
/// is then re-enclosed on the certified path and the enclosure's lower end
/// is widened by the scan's midpoint-noise allowance.
MinScanResult empirical_min_house(const EnumerationSpec& spec, double tol,
                                  const NumericBudget& budget = {});

/// Same scan for the Weil height of integral elements.
MinScanResult empirical_min_weil(const EnumerationSpec& spec, double tol,
                                 const NumericBudget& budget = {});

/// Plain grid minimum of midpoint D_u over gridN uniformly spaced
/// rotations; no certificate, by design an independent cross-check.
double brute_discrepancy(const PointTuple& points, std::uint64_t gridN);

/// |Res(f, f')| via an exact Sylvester-matrix determinant (Bareiss).
Integer discriminant_via_resultant(const PolyZ& f);

/// Exact resultant of two polynomials, exposed for the tests.
Integer resultant(const PolyZ& f, const PolyZ& g);

}  // namespace radtower
