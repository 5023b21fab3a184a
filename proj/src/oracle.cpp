#include "radtower/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "radtower/errors.hpp"

namespace radtower {

namespace {

std::vector<TowerElement::Exponents> all_slots(const RadicalTower& tower, std::size_t steps) {
    std::vector<TowerElement::Exponents> slots;
    TowerElement::Exponents cur(steps, 0);
    for (;;) {
        slots.push_back(cur);
        std::size_t v = 0;
        for (; v < steps; ++v) {
            if (++cur[v] < tower.steps[v].d.get_ui()) break;
            cur[v] = 0;
        }
        if (v == steps) break;
    }
    return slots;
}

void check_spec(const EnumerationSpec& spec) {
    spec.tower.require_valid();
    if (spec.step_index < 1 || spec.step_index > spec.tower.size())
        throw InvalidStep("enumeration: step index out of range");
    if (spec.coeff_bound < 0) throw InvalidParams("enumeration: negative coefficient bound");
}

}  // namespace

std::vector<TowerElement::Exponents> enumeration_slots(const EnumerationSpec& spec) {
    check_spec(spec);
    std::size_t steps = spec.step_index;
    if (spec.slot_mask) {
        for (const auto& e : *spec.slot_mask) {
            if (e.size() != steps)
                throw InvalidParams("enumeration mask: exponent arity mismatch");
            for (std::size_t v = 0; v < steps; ++v)
                if (Integer(static_cast<unsigned long>(e[v])) >= spec.tower.steps[v].d)
                    throw InvalidParams("enumeration mask: exponent out of range");
        }
        return *spec.slot_mask;
    }
    RadicalTower pre = spec.tower.prefix(steps);
    Integer degree = pre.degree();
    if (mpz_sizeinbase(degree.get_mpz_t(), 2) > 30)
        throw TooLarge("enumeration: too many monomial slots");
    return all_slots(spec.tower, steps);
}

Integer enumeration_count(const EnumerationSpec& spec) {
    auto slots = enumeration_slots(spec);
    std::size_t top = spec.step_index - 1;
    unsigned long radix = 2 * static_cast<unsigned long>(spec.coeff_bound) + 1;
    std::size_t non_top = 0;
    for (const auto& e : slots)
        if (e[top] == 0) ++non_top;
    Integer total = pow_int(Integer(radix), slots.size());
    if (spec.include_constants) return total - 1;
    return total - pow_int(Integer(radix), non_top);
}

ElementEnumerator::ElementEnumerator(EnumerationSpec spec) : spec_(std::move(spec)) {
    slots_ = enumeration_slots(spec_);
    std::size_t top = spec_.step_index - 1;
    slot_is_new_.resize(slots_.size());
    for (std::size_t s = 0; s < slots_.size(); ++s) slot_is_new_[s] = slots_[s][top] > 0;
    unsigned long radix = 2 * static_cast<unsigned long>(spec_.coeff_bound) + 1;
    Integer total = pow_int(Integer(radix), slots_.size());
    if (total > Integer(static_cast<unsigned long>(spec_.cap)))
        throw TooLarge("enumeration: " + to_string(total) + " assignments exceed the cap of " +
                       std::to_string(spec_.cap));
    total_ = total.get_ui();
    digits_.assign(slots_.size(), -spec_.coeff_bound);
}

bool ElementEnumerator::next(TowerElement& out) {
    while (index_ < total_) {
        // snapshot, then advance the odometer
        std::vector<long> cur = digits_;
        std::size_t v = 0;
        for (; v < digits_.size(); ++v) {
            if (++digits_[v] <= spec_.coeff_bound) break;
            digits_[v] = -spec_.coeff_bound;
        }
        ++index_;

        bool has_new = false, has_any = false;
        for (std::size_t s = 0; s < cur.size(); ++s) {
            if (cur[s] == 0) continue;
            has_any = true;
            if (slot_is_new_[s]) has_new = true;
        }
        if (!has_any) continue;                       // the zero element
        if (!spec_.include_constants && !has_new) continue;  // lives in O_{i-1}

        TowerElement e(spec_.step_index);
        for (std::size_t s = 0; s < cur.size(); ++s)
            if (cur[s] != 0) e.add_term(slots_[s], Integer(cur[s]));
        out = std::move(e);
        return true;
    }
    return false;
}

namespace {

// ---------------------------------------------------------------------
// Fast midpoint scan over the coefficient space.
//
// The walk follows the reflected mixed-radix Gray sequence, so successive
// assignments differ in a single digit by +-1 and the embedding values
// update in O(#embeddings) per element.
// ---------------------------------------------------------------------

// Digits of rank N in the reflected Gray order (digit 0 least significant).
void gray_unrank(std::uint64_t n, std::uint64_t radix, std::size_t ndigits,
                 std::vector<long>& out) {
    out.assign(ndigits, 0);
    std::uint64_t block = 1;
    for (std::size_t j = 0; j + 1 < ndigits; ++j) block *= radix;
    std::uint64_t r = n;
    for (std::size_t j = ndigits; j-- > 0;) {
        std::uint64_t t = r / block;
        r %= block;
        if (t & 1) r = block - 1 - r;
        out[j] = static_cast<long>(t);
        if (j > 0) block /= radix;
    }
}

struct ScanSetup {
    std::vector<TowerElement::Exponents> slots;
    std::vector<bool> slot_is_new;
    std::vector<std::vector<std::complex<double>>> table;  // [slot][embedding]
    std::size_t embeddings = 0;
    std::uint64_t total = 0;
    unsigned long radix = 0;
};

ScanSetup build_scan(const EnumerationSpec& spec) {
    ScanSetup s;
    s.slots = enumeration_slots(spec);
    std::size_t steps = spec.step_index;
    std::size_t top = steps - 1;
    s.slot_is_new.resize(s.slots.size());
    for (std::size_t i = 0; i < s.slots.size(); ++i) s.slot_is_new[i] = s.slots[i][top] > 0;

    s.radix = 2 * static_cast<unsigned long>(spec.coeff_bound) + 1;
    Integer total = pow_int(Integer(s.radix), s.slots.size());
    if (total > Integer(static_cast<unsigned long>(spec.cap)))
        throw TooLarge("enumeration: " + to_string(total) + " assignments exceed the cap of " +
                       std::to_string(spec.cap));
    s.total = total.get_ui();

    RadicalTower pre = spec.tower.prefix(steps);
    s.embeddings = pre.degree_ul();

    // conjugate powers in double precision
    std::vector<std::vector<std::vector<std::complex<double>>>> pow(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        unsigned long d = pre.steps[i].d.get_ui();
        double p = mpz_get_d(pre.steps[i].p.get_mpz_t());
        pow[i].assign(d, std::vector<std::complex<double>>(d));
        for (unsigned long j = 0; j < d; ++j)
            for (unsigned long m = 0; m < d; ++m) {
                double mod = std::exp(std::log(p) * static_cast<double>(m) /
                                      static_cast<double>(d));
                double ang = 2 * M_PI * static_cast<double>((j * m) % d) /
                             static_cast<double>(d);
                pow[i][j][m] = std::polar(mod, ang);
            }
    }

    s.table.assign(s.slots.size(), std::vector<std::complex<double>>(s.embeddings));
    std::vector<unsigned long> branch(steps, 0);
    for (std::size_t e = 0; e < s.embeddings; ++e) {
        for (std::size_t slot = 0; slot < s.slots.size(); ++slot) {
            std::complex<double> v(1.0, 0.0);
            for (std::size_t i = 0; i < steps; ++i)
                if (s.slots[slot][i] > 0) v *= pow[i][branch[i]][s.slots[slot][i]];
            s.table[slot][e] = v;
        }
        for (std::size_t i = 0; i < steps; ++i) {
            if (++branch[i] < pre.steps[i].d.get_ui()) break;
            branch[i] = 0;
        }
    }
    return s;
}

struct BlockBest {
    double value = std::numeric_limits<double>::infinity();
    std::uint64_t rank = 0;
    std::vector<long> digits;
};

// Scan ranks [begin, end) of the Gray order; objective(vals) -> double.
template <typename Objective>
BlockBest scan_block(const ScanSetup& s, const EnumerationSpec& spec, std::uint64_t begin,
                     std::uint64_t end, Objective objective) {
    BlockBest best;
    if (begin >= end) return best;
    long C = spec.coeff_bound;
    std::vector<long> g, gnext;
    gray_unrank(begin, s.radix, s.slots.size(), g);

    std::vector<std::complex<double>> val(s.embeddings, {0.0, 0.0});
    long nz_new = 0, nz_any = 0;
    for (std::size_t slot = 0; slot < s.slots.size(); ++slot) {
        long c = g[slot] - C;
        if (c == 0) continue;
        ++nz_any;
        if (s.slot_is_new[slot]) ++nz_new;
        for (std::size_t e = 0; e < s.embeddings; ++e)
            val[e] += static_cast<double>(c) * s.table[slot][e];
    }

    for (std::uint64_t rank = begin;;) {
        bool eligible = nz_any > 0 && (spec.include_constants || nz_new > 0);
        if (eligible) {
            double v = objective(val);
            if (v < best.value) {
                best.value = v;
                best.rank = rank;
                best.digits = g;
            }
        }
        if (++rank >= end) break;
        gray_unrank(rank, s.radix, s.slots.size(), gnext);
        std::size_t slot = 0;
        while (slot < g.size() && g[slot] == gnext[slot]) ++slot;
        long old_c = g[slot] - C;
        long new_c = gnext[slot] - C;
        double delta = static_cast<double>(new_c - old_c);
        for (std::size_t e = 0; e < s.embeddings; ++e) val[e] += delta * s.table[slot][e];
        if (old_c == 0 && new_c != 0) {
            ++nz_any;
            if (s.slot_is_new[slot]) ++nz_new;
        } else if (old_c != 0 && new_c == 0) {
            --nz_any;
            if (s.slot_is_new[slot]) --nz_new;
        }
        std::swap(g, gnext);
    }
    return best;
}

template <typename Objective>
BlockBest scan_all(const ScanSetup& s, const EnumerationSpec& spec, Objective objective) {
    int threads = std::max(1, spec.threads);
    if (threads == 1 || s.total < 4096)
        return scan_block(s, spec, 0, s.total, objective);
    std::vector<BlockBest> results(static_cast<std::size_t>(threads));
    std::vector<std::thread> pool;
    std::uint64_t chunk = s.total / static_cast<std::uint64_t>(threads) + 1;
    for (int t = 0; t < threads; ++t) {
        std::uint64_t b = chunk * static_cast<std::uint64_t>(t);
        std::uint64_t e = std::min(s.total, b + chunk);
        pool.emplace_back([&, t, b, e]() {
            results[static_cast<std::size_t>(t)] = scan_block(s, spec, b, e, objective);
        });
    }
    for (auto& th : pool) th.join();
    BlockBest best;
    for (const auto& r : results) {
        if (r.value < best.value || (r.value == best.value && r.rank < best.rank)) best = r;
    }
    return best;
}

TowerElement element_from_digits(const ScanSetup& s, const EnumerationSpec& spec,
                                 const std::vector<long>& digits) {
    TowerElement e(spec.step_index);
    for (std::size_t slot = 0; slot < s.slots.size(); ++slot) {
        long c = digits[slot] - spec.coeff_bound;
        if (c != 0) e.add_term(s.slots[slot], Integer(c));
    }
    return e;
}

MinScanResult finish_scan(const ScanSetup& s, const EnumerationSpec& spec,
                          const BlockBest& best, bool weil, double tol,
                          const NumericBudget& budget) {
    if (best.digits.empty()) throw EmptyStream("enumeration produced no elements");
    TowerElement witness = element_from_digits(s, spec, best.digits);
    RadicalTower pre = spec.tower.prefix(spec.step_index);
    RealInterval at_witness = weil ? weil_height_integral(pre, witness, tol, budget).value
                                   : house(pre, witness, tol, budget).value;
    // allowance for the double-precision scan that selected the witness
    double noise = 1e-10 * std::max(1.0, at_witness.hi_d());
    RealInterval enclosure = at_witness.sub_d(noise);
    RealInterval out(at_witness.precision());
    mpfr_set(out.lo_mut(), enclosure.lo(), MPFR_RNDD);
    mpfr_set(out.hi_mut(), at_witness.hi(), MPFR_RNDU);
    Integer produced = enumeration_count(spec);
    return {std::move(out), std::move(witness),
            produced.fits_ulong_p() ? produced.get_ui() : 0};
}

}  // namespace

MinScanResult empirical_min_house(const EnumerationSpec& spec, double tol,
                                  const NumericBudget& budget) {
    check_spec(spec);
    ScanSetup s = build_scan(spec);
    auto objective = [](const std::vector<std::complex<double>>& val) {
        double worst = 0;
        for (const auto& z : val) worst = std::max(worst, std::norm(z));
        return worst;  // squared house: same argmin
    };
    BlockBest best = scan_all(s, spec, objective);
    return finish_scan(s, spec, best, false, tol, budget);
}

MinScanResult empirical_min_weil(const EnumerationSpec& spec, double tol,
                                 const NumericBudget& budget) {
    check_spec(spec);
    ScanSetup s = build_scan(spec);
    double inv = 1.0 / static_cast<double>(s.embeddings);
    auto objective = [inv](const std::vector<std::complex<double>>& val) {
        double sum = 0;
        for (const auto& z : val) {
            double n2 = std::norm(z);
            if (n2 > 1) sum += 0.5 * std::log(n2);
        }
        return sum * inv;
    };
    BlockBest best = scan_all(s, spec, objective);
    return finish_scan(s, spec, best, true, tol, budget);
}

double brute_discrepancy(const PointTuple& points, std::uint64_t gridN) {
    if (points.empty()) throw ZeroTuple("brute_discrepancy of an empty tuple");
    if (gridN < 8) throw InvalidParams("brute_discrepancy: grid too small");
    std::size_t d = points.size();
    std::vector<std::complex<double>> pts;
    pts.reserve(d);
    for (const auto& b : points.boxes) pts.push_back(b.mid());
    std::vector<std::complex<double>> zeta(d);
    for (std::size_t j = 0; j < d; ++j)
        zeta[j] = std::polar(1.0, 2 * M_PI * static_cast<double>(j) / static_cast<double>(d));
    double best = std::numeric_limits<double>::infinity();
    for (std::uint64_t k = 0; k < gridN; ++k) {
        std::complex<double> u =
            std::polar(1.0, 2 * M_PI * static_cast<double>(k) / static_cast<double>(gridN));
        double worst = 0;
        for (std::size_t j = 0; j < d; ++j) {
            std::complex<double> target = u * zeta[j];
            double nearest = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < d; ++i)
                nearest = std::min(nearest, std::abs(pts[i] - target));
            worst = std::max(worst, nearest);
        }
        best = std::min(best, worst);
    }
    return best;
}

Integer resultant(const PolyZ& f, const PolyZ& g) {
    if (f.is_zero() || g.is_zero()) return 0;
    long n = f.degree(), m = g.degree();
    if (n == 0) return pow_int(f.leading(), static_cast<unsigned long>(m));
    if (m == 0) return pow_int(g.leading(), static_cast<unsigned long>(n));
    std::size_t size = static_cast<std::size_t>(n + m);
    std::vector<std::vector<Integer>> a(size, std::vector<Integer>(size, Integer(0)));
    for (long i = 0; i < m; ++i)
        for (long j = 0; j <= n; ++j)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] =
                f[static_cast<std::size_t>(n - j)];
    for (long i = 0; i < n; ++i)
        for (long j = 0; j <= m; ++j)
            a[static_cast<std::size_t>(m + i)][static_cast<std::size_t>(i + j)] =
                g[static_cast<std::size_t>(m - j)];

    // Bareiss fraction-free elimination
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < size; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < size && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == size) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < size; ++i) {
            for (std::size_t j = k + 1; j < size; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[size - 1][size - 1];
}

Integer discriminant_via_resultant(const PolyZ& f) {
    if (!f.is_monic()) throw InvalidParams("discriminant_via_resultant: f must be monic");
    if (f.degree() > 12) throw DegreeTooLarge("discriminant_via_resultant: degree above 12");
    if (f.degree() < 1) throw InvalidParams("discriminant_via_resultant: constant polynomial");
    return abs(resultant(f, f.derivative()));
}

}  // namespace radtower
