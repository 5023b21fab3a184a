#include "radtower/construct.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "radtower/arith.hpp"
#include "radtower/dedekind.hpp"
#include "radtower/primality.hpp"

namespace radtower {

namespace {

Integer floor_to_int(mpfr_srcptr x) {
    Integer z;
    mpfr_get_z(z.get_mpz_t(), x, MPFR_RNDD);
    return z;
}

// Integers strictly inside (lo, hi) where the endpoints are given as
// interval-valued functions of the working precision; refines until both
// endpoints pin down their integer part.  `last < first` means empty.
struct IntegerWindow {
    Integer first;
    Integer last;
    RealInterval lo_encl;
    RealInterval hi_encl;
};

template <typename F, typename G>
IntegerWindow decide_integer_window(F f_lo, G f_hi, const NumericBudget& budget) {
    for (long prec = 128; prec <= budget.precision_ceiling; prec *= 2) {
        RealInterval lo = f_lo(prec);
        RealInterval hi = f_hi(prec);
        Integer lo_fd = floor_to_int(lo.lo());
        Integer lo_fu = floor_to_int(lo.hi());
        Integer hi_fd = floor_to_int(hi.lo());
        Integer hi_fu = floor_to_int(hi.hi());
        if (lo_fd != lo_fu || hi_fd != hi_fu) continue;
        IntegerWindow w;
        w.first = lo_fd + 1;
        w.last = hi_fd;
        // an exactly-integer upper endpoint is excluded by the open window
        if (hi.is_point() && mpfr_integer_p(hi.lo())) w.last = hi_fd - 1;
        w.lo_encl = lo;
        w.hi_encl = hi;
        return w;
    }
    throw PrecisionFailure("window endpoints could not be separated from the integers");
}

Integer next_prime_strictly_above(const Integer& n) { return next_prime_above(Rational(n)); }

// Diagonal schedule over targets T_1, T_2, ...: blocks (T_1), (T_1, T_2),
// (T_1, T_2, T_3), ... so every target recurs infinitely often.
unsigned long diagonal_target_index(unsigned long step /*1-based*/) {
    unsigned long m = step - 1;
    unsigned long block = 0;
    while (m >= block + 1) {
        m -= block + 1;
        ++block;
    }
    return m + 1;  // 1-based target index
}

struct PlannedStep {
    Integer d;
    Integer p;
    std::optional<std::pair<Rational, Rational>> exact_window;
    std::optional<RealInterval> window_lo;
    std::optional<RealInterval> window_hi;
    std::optional<Rational> target;
    bool widened = false;
    bool fresh = true;
};

std::vector<Integer> plan_degrees_weak(ConstructionVariant variant,
                                       const ConstructionParams& params) {
    std::vector<Integer> ds;
    Integer d = params.d_seed;
    for (long i = 0; i < params.steps; ++i) {
        ds.push_back(d);
        if (variant == ConstructionVariant::WeightedGap) {
            // first prime >= 2d; 2d itself is even, so strictly above works
            d = next_prime_above(Rational(2 * d));
        } else {
            d = next_prime_strictly_above(d);
        }
    }
    return ds;
}

std::vector<PlannedStep> plan_house_steps(ConstructionVariant variant,
                                          const ConstructionParams& params,
                                          OrderingMode mode, const NumericBudget& budget) {
    (void)budget;
    const Rational& t = *params.t;
    std::vector<PlannedStep> plan;
    std::set<Integer> used;
    std::vector<Integer> degrees;
    if (mode == OrderingMode::Weak) {
        degrees = plan_degrees_weak(variant, params);
        for (const auto& d : degrees) used.insert(d);
    }
    Integer running_max = 0;
    for (long i = 0; i < params.steps; ++i) {
        PlannedStep s;
        if (mode == OrderingMode::Weak) {
            s.d = degrees[static_cast<std::size_t>(i)];
        } else {
            s.d = i == 0 ? params.d_seed : next_prime_strictly_above(running_max);
            used.insert(s.d);
        }
        unsigned long du = s.d.get_ui();
        Rational base = t;
        if (variant == ConstructionVariant::HouseC) {
            unsigned long j = diagonal_target_index(static_cast<unsigned long>(i) + 1);
            // T_j = t (1 + 2^-j)
            Rational bump = rational_from_parts(pow_int(2, j) + 1, pow_int(2, j));
            base = t * bump;
            s.target = base;
        }
        Rational power = pow_rat(base, du);
        Rational lo, hi;
        if (variant == ConstructionVariant::HouseA) {
            lo = power / 2;
            hi = power;
        } else {
            lo = power;
            hi = power * 2;
        }
        if (mode == OrderingMode::Strict && Rational(running_max) > lo)
            lo = Rational(running_max);
        s.exact_window = {lo, hi};
        auto p = find_prime_in_ap(lo, hi, s.d - 1, s.d * s.d, used);
        if (!p) {
            std::ostringstream os;
            os << "no prime p == " << to_string(Integer(s.d - 1)) << " (mod " << to_string(Integer(s.d * s.d))
               << ") in (" << to_string(lo) << ", " << to_string(hi) << ") at step "
               << (i + 1);
            throw SearchExhausted(os.str());
        }
        s.p = *p;
        used.insert(s.p);
        running_max = std::max(running_max, std::max(s.p, s.d));
        plan.push_back(std::move(s));
    }
    return plan;
}

std::vector<PlannedStep> plan_weil_steps(const ConstructionParams& params,
                                         const NumericBudget& budget) {
    const Rational& t = *params.t;
    std::vector<PlannedStep> plan;
    std::set<Integer> used;
    std::vector<Integer> degrees = plan_degrees_weak(ConstructionVariant::WeilWindow, params);
    for (const auto& d : degrees) used.insert(d);

    for (long i = 0; i < params.steps; ++i) {
        PlannedStep s;
        s.d = degrees[static_cast<std::size_t>(i)];
        Rational exponent = t * 2 * Rational(s.d);  // 2 t d
        auto f_lo = [&](long prec) {
            return RealInterval::from_rational(exponent, prec).exp();
        };
        auto f_hi = [&](long prec) {
            return RealInterval::from_rational(exponent, prec).exp() *
                   RealInterval::exact(2.0, prec);
        };
        IntegerWindow w = decide_integer_window(f_lo, f_hi, budget);
        s.window_lo = w.lo_encl;
        s.window_hi = w.hi_encl;
        std::optional<Integer> found;
        for (Integer n = w.first; n <= w.last; n += 1) {
            if (used.count(n)) continue;
            if (is_prime(n)) {
                found = n;
                break;
            }
        }
        if (!found) {
            // empty or prime-free window: widen to the next fresh prime
            // above the lower endpoint and flag the step
            found = next_prime_above(Rational(w.first - 1), used);
            s.widened = true;
        }
        s.p = *found;
        used.insert(s.p);
        plan.push_back(std::move(s));
    }
    return plan;
}

std::vector<PlannedStep> plan_weighted_steps(const ConstructionParams& params,
                                             const NumericBudget& budget) {
    double gamma = *params.gamma;
    double eps = *params.eps;
    double exponent = 1.0 - gamma + eps / 2;
    std::vector<PlannedStep> plan;
    std::set<Integer> used;  // strictly-previous primes; the current degree joins per step
    std::vector<Integer> degrees = plan_degrees_weak(ConstructionVariant::WeightedGap, params);

    for (long i = 0; i < params.steps; ++i) {
        PlannedStep s;
        s.d = degrees[static_cast<std::size_t>(i)];
        used.insert(s.d);
        auto f_lo = [&](long prec) {
            return RealInterval::exact_int(s.d, prec).pow_real(exponent).exp();
        };
        auto f_hi = [&](long prec) {
            return RealInterval::exact_int(s.d, prec).pow_real(exponent).exp() *
                   RealInterval::exact(2.0, prec);
        };
        IntegerWindow w = decide_integer_window(f_lo, f_hi, budget);
        s.window_lo = w.lo_encl;
        s.window_hi = w.hi_encl;
        std::optional<Integer> fresh_hit, any_hit;
        for (Integer n = w.first; n <= w.last; n += 1) {
            if (!is_prime(n)) continue;
            if (!any_hit) any_hit = n;
            if (!used.count(n)) {
                fresh_hit = n;
                break;
            }
        }
        if (fresh_hit) {
            s.p = *fresh_hit;
        } else if (any_hit) {
            s.p = *any_hit;  // unavoidable collision, flagged below
            s.fresh = false;
        } else {
            std::ostringstream os;
            os << "no prime in the weighted window at step " << (i + 1) << " (d = "
               << to_string(s.d) << ")";
            throw SearchExhausted(os.str());
        }
        used.insert(s.p);
        plan.push_back(std::move(s));
    }
    return plan;
}

std::vector<PlannedStep> plan_steps(ConstructionVariant variant,
                                    const ConstructionParams& params, OrderingMode mode,
                                    const NumericBudget& budget) {
    switch (variant) {
        case ConstructionVariant::HouseA:
        case ConstructionVariant::HouseB:
        case ConstructionVariant::HouseC:
            return plan_house_steps(variant, params, mode, budget);
        case ConstructionVariant::WeilWindow:
            return plan_weil_steps(params, budget);
        case ConstructionVariant::WeightedGap:
            return plan_weighted_steps(params, budget);
    }
    throw InvalidParams("unknown variant");
}

bool monogenic_chain(const Integer& p, const Integer& d) {
    if (fermat_quotient_divides(p, d)) return false;
    PolyZ f = PolyZ::pure_radical(d.get_ui(), p);
    return dedekind_index_coprime(f, d) && dedekind_index_coprime(f, p);
}

StepChecks make_house_checks(const PlannedStep& s, const std::set<Integer>& prior) {
    StepChecks c;
    c.interval_member = Rational(s.p) > s.exact_window->first &&
                        Rational(s.p) < s.exact_window->second;
    c.congruence = (s.p % (s.d * s.d)) == (s.d - 1);
    c.monogenic = monogenic_chain(s.p, s.d);
    c.eisenstein = eisenstein_applicable(s.d, s.p);
    c.prime_fresh = !prior.count(s.p) && !prior.count(s.d) && s.p != s.d;
    c.target = s.target;
    return c;
}

RealInterval log_p_over_d(const Integer& p, const Integer& d, long prec) {
    return RealInterval::exact_int(p, prec).log() / RealInterval::exact_int(d, prec);
}

std::string note_widened(const PlannedStep& s) {
    return "window (" + s.window_lo->lo_string() + ", " + s.window_hi->hi_string() +
           ") holds no fresh prime; widened to the next fresh prime above it";
}

Certificate assemble(ConstructionVariant variant, const ConstructionParams& params,
                     OrderingMode mode, const std::vector<PlannedStep>& plan, double tol,
                     const NumericBudget& budget) {
    Certificate cert;
    cert.variant = variant;
    cert.params = params;
    cert.tower.mode = mode;
    cert.toolchain.ordering_mode = to_string(mode);

    long prec = precision_for_tolerance(tol, budget);
    std::set<Integer> prior;
    bool house_like = variant == ConstructionVariant::HouseA ||
                      variant == ConstructionVariant::HouseB ||
                      variant == ConstructionVariant::HouseC;
    for (const auto& s : plan) {
        RadicalStep step;
        step.p = s.p;
        step.d = s.d;
        StepChecks checks;
        if (house_like) {
            step.interval = s.exact_window;
            checks = make_house_checks(s, prior);
            step.checks.congruence = checks.congruence;
            step.checks.monogenic = checks.monogenic;
            step.checks.eisenstein = checks.eisenstein;
            // strict mode may clamp the window start above t^d; the prime is
            // then still inside the stored (clamped) window, so membership
            // stays exact.
        } else {
            checks.window = {s.window_lo->lo_string(), s.window_hi->hi_string()};
            checks.interval_member = !s.widened;
            checks.eisenstein = eisenstein_applicable(s.d, s.p);
            // freshness here is the height-floor hypothesis: p_i avoids the
            // primes of the strictly earlier steps
            checks.prime_fresh = s.fresh && !prior.count(s.p);
            step.checks.eisenstein = checks.eisenstein;
            if (s.widened) checks.violation_notes.push_back(note_widened(s));
            if (!s.fresh)
                checks.violation_notes.push_back(
                    "no fresh prime available in the window; collision permitted and flagged");
        }
        prior.insert(s.p);
        prior.insert(s.d);
        cert.tower.steps.push_back(std::move(step));
        cert.per_step.push_back(std::move(checks));
    }

    // report
    BoundsReport rep;
    for (const auto& s : plan) {
        unsigned long du = s.d.get_ui();
        RealInterval base = RealInterval::exact_int(s.p, prec);
        RealInterval house_i = base.rootn(du);
        RealInterval eta_i = RealInterval::min(house_i, base.pow_ui(du - 1).rootn(du));
        rep.eta_values.push_back(eta_i);
        rep.house_values.push_back(house_i);
    }
    rep.prefix_liminf_eta = rep.eta_values[0];
    rep.prefix_min_house = rep.house_values[0];
    for (std::size_t i = 1; i < rep.eta_values.size(); ++i) {
        rep.prefix_liminf_eta = RealInterval::min(rep.prefix_liminf_eta, rep.eta_values[i]);
        rep.prefix_min_house = RealInterval::min(rep.prefix_min_house, rep.house_values[i]);
    }
    if (house_like) {
        rep.claimed_limit = params.t;
        if (variant == ConstructionVariant::HouseB)
            rep.documentation.push_back(
                "the isolation constant M is existential, not computed: any M works with "
                "M < t + 1/2 and M/t below the least house value exceeding 1 among the "
                "finitely many candidates of bounded house");
    } else if (variant == ConstructionVariant::WeilWindow) {
        rep.target_window = {*params.t, *params.t * 2};
        for (const auto& s : plan) rep.weil_heights.push_back(log_p_over_d(s.p, s.d, prec));
    } else {
        double gp = *params.gamma - *params.eps;
        rep.weighted_gamma = gp;
        for (const auto& s : plan) {
            RealInterval h = log_p_over_d(s.p, s.d, prec);
            rep.weil_heights.push_back(h);
            rep.weighted_heights.push_back(weighted_height(gp, s.d, h));
            rep.step_height_floors.push_back(
                weil_height_step_floor(*params.gamma, s.p, s.d, tol, budget));
        }
    }
    cert.report = std::move(rep);
    return cert;
}

void require_house_params(const Rational& t, long k, const Integer& d_seed) {
    if (!(t > 1)) throw InvalidParams("house construction needs t > 1");
    if (k < 1) throw InvalidParams("need at least one step");
    if (!is_prime(d_seed) || d_seed < 3 || mpz_even_p(d_seed.get_mpz_t()))
        throw InvalidParams("d_seed must be an odd prime >= 3");
}

}  // namespace

Certificate construct_house_spectrum(ConstructionVariant variant, const Rational& t, long k,
                                     const Integer& d_seed, OrderingMode mode, double tol,
                                     const NumericBudget& budget) {
    if (variant != ConstructionVariant::HouseA && variant != ConstructionVariant::HouseB &&
        variant != ConstructionVariant::HouseC)
        throw InvalidParams("construct_house_spectrum: variant must be house-a/b/c");
    require_house_params(t, k, d_seed);
    ConstructionParams params;
    params.t = t;
    params.steps = k;
    params.d_seed = d_seed;
    auto plan = plan_steps(variant, params, mode, budget);
    return assemble(variant, params, mode, plan, tol, budget);
}

Certificate construct_weil_window(const Rational& t, long k, const Integer& d_seed,
                                  OrderingMode mode, double tol, const NumericBudget& budget) {
    if (t < 0) throw InvalidParams("construct_weil_window: t must be >= 0");
    if (k < 1) throw InvalidParams("need at least one step");
    if (!is_prime(d_seed)) throw InvalidParams("d_seed must be prime");
    if (mode != OrderingMode::Weak)
        throw InvalidParams("construct_weil_window supports weak ordering only");
    ConstructionParams params;
    params.t = t;
    params.steps = k;
    params.d_seed = d_seed;
    auto plan = plan_steps(ConstructionVariant::WeilWindow, params, mode, budget);
    return assemble(ConstructionVariant::WeilWindow, params, mode, plan, tol, budget);
}

Certificate construct_weighted_gap(double gamma, double eps, long k, const Integer& d_seed,
                                   OrderingMode mode, double tol,
                                   const NumericBudget& budget) {
    if (!(gamma >= 0 && gamma <= 1)) throw InvalidParams("gamma must lie in [0, 1]");
    if (!(eps > 0)) throw InvalidParams("eps must be positive");
    if (k < 1) throw InvalidParams("need at least one step");
    if (!is_prime(d_seed)) throw InvalidParams("d_seed must be prime");
    if (mode != OrderingMode::Weak)
        throw InvalidParams("construct_weighted_gap supports weak ordering only");
    ConstructionParams params;
    params.gamma = gamma;
    params.eps = eps;
    params.steps = k;
    params.d_seed = d_seed;
    auto plan = plan_steps(ConstructionVariant::WeightedGap, params, mode, budget);
    return assemble(ConstructionVariant::WeightedGap, params, mode, plan, tol, budget);
}

RootExtensionReport check_root_extension_conditions(
    const std::vector<std::pair<PointTuple, Integer>>& data, double tol, double ratio_slack,
    const NumericBudget& budget) {
    RootExtensionReport rep;
    for (const auto& [roots, n] : data) {
        if (roots.empty()) throw ZeroTuple("check_root_extension_conditions: empty tuple");
        if (n <= 1) throw InvalidParams("check_root_extension_conditions: need n > 1");
        RootExtensionVerdict v{};
        v.ratio = RealInterval::exact(0.0, 64);
        std::size_t m = roots.size();
        RealInterval house_g = roots.max_modulus();
        RealInterval s = roots.min_modulus();

        // discrepancy bound: D(c) <= m^(-3/2) (1 - house^(1/n - 1))
        RealInterval D = discrepancy(normalized_tuple(roots), tol, budget).value;
        double nd = static_cast<double>(n.get_ui());
        RealInterval rhs =
            RealInterval::exact(1.0, 128) - house_g.pow_real(1.0 / nd - 1.0);
        rhs = rhs / RealInterval::exact_int(Integer(static_cast<unsigned long>(m)), 128)
                        .pow_ui(3)
                        .sqrt();
        if (mpfr_cmp(D.hi(), rhs.lo()) <= 0) {
            v.discrepancy_ok = true;
            v.discrepancy_decided = true;
        } else if (mpfr_cmp(D.lo(), rhs.hi()) > 0) {
            v.discrepancy_ok = false;
            v.discrepancy_decided = true;
        }

        // min-modulus condition s >= 1
        if (s.certainly_ge(Rational(1))) {
            v.min_modulus_ok = true;
            v.min_modulus_decided = true;
        } else if (s.certainly_lt(Rational(1))) {
            v.min_modulus_ok = false;
            v.min_modulus_decided = true;
        }

        // (s / house)^(1/n) near 1
        if (s.certainly_positive()) {
            v.ratio = (s / house_g).pow_real(1.0 / nd);
            RealInterval dev = (v.ratio - RealInterval::exact(1.0, 128)).abs();
            if (dev.certainly_lt(rational_from_string(std::to_string(ratio_slack)))) {
                v.ratio_near_one = true;
                v.ratio_decided = true;
            } else if (dev.certainly_gt(rational_from_string(std::to_string(ratio_slack)))) {
                v.ratio_near_one = false;
                v.ratio_decided = true;
            }
        }
        rep.verdicts.push_back(std::move(v));
    }
    return rep;
}

std::string RootExtensionReport::to_json_string() const {
    nlohmann::ordered_json j;
    j["degree_multiplicativity"] = "caller-asserted";
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& v : verdicts) {
        nlohmann::ordered_json e;
        e["discrepancy_ok"] = v.discrepancy_ok;
        e["discrepancy_decided"] = v.discrepancy_decided;
        e["min_modulus_ok"] = v.min_modulus_ok;
        e["min_modulus_decided"] = v.min_modulus_decided;
        e["ratio_near_one"] = v.ratio_near_one;
        e["ratio_decided"] = v.ratio_decided;
        e["ratio"] = {{"lo", v.ratio.lo_string()}, {"hi", v.ratio.hi_string()}};
        arr.push_back(e);
    }
    j["verdicts"] = arr;
    return j.dump();
}

namespace {

void compare_flag(std::vector<std::string>& mismatches, const std::string& where,
                  const char* name, const std::optional<bool>& stored,
                  const std::optional<bool>& computed) {
    if (stored.has_value() != computed.has_value() ||
        (stored && computed && *stored != *computed)) {
        mismatches.push_back(where + ": " + name + " flag mismatch");
    }
}

void compare_interval(std::vector<std::string>& mismatches, const std::string& where,
                      const RealInterval& stored, const RealInterval& computed) {
    bool overlap = !(stored.certainly_less(computed) || stored.certainly_greater(computed));
    if (!overlap) mismatches.push_back(where + ": enclosure mismatch");
}

}  // namespace

VerificationReport verify_certificate(const Certificate& cert, double tol,
                                      const NumericBudget& budget) {
    VerificationReport rep;
    auto& bad = rep.mismatches;

    if (cert.schema != 1) bad.push_back("schema: unsupported version");
    bool house_like = cert.variant == ConstructionVariant::HouseA ||
                      cert.variant == ConstructionVariant::HouseB ||
                      cert.variant == ConstructionVariant::HouseC;
    if (house_like || cert.variant == ConstructionVariant::WeilWindow) {
        if (!cert.params.t) bad.push_back("params: missing t");
    } else {
        if (!cert.params.gamma || !cert.params.eps) bad.push_back("params: missing gamma/eps");
    }
    if (cert.params.steps != static_cast<long>(cert.tower.size()))
        bad.push_back("params: step count does not match the tower");
    if (cert.per_step.size() != cert.tower.size())
        bad.push_back("per_step: length does not match the tower");
    if (!bad.empty()) {
        rep.pass = false;
        return rep;
    }

    OrderingMode mode = cert.tower.mode;
    std::vector<PlannedStep> plan;
    try {
        plan = plan_steps(cert.variant, cert.params, mode, budget);
    } catch (const SearchExhausted& e) {
        bad.push_back(std::string("replan: ") + e.what());
    } catch (const Error& e) {
        bad.push_back(std::string("replan: ") + e.what());
    }

    long prec = precision_for_tolerance(tol, budget);
    std::set<Integer> prior;
    for (std::size_t i = 0; i < cert.tower.size(); ++i) {
        std::string where = "step " + std::to_string(i + 1);
        const RadicalStep& s = cert.tower.steps[i];
        const StepChecks& c = cert.per_step[i];

        if (!is_prime(s.p)) bad.push_back(where + ": p is not prime");
        if (!is_prime(s.d)) bad.push_back(where + ": d is not prime");

        // canonical selection
        if (i < plan.size()) {
            if (plan[i].d != s.d)
                bad.push_back(where + ": d differs from the canonical degree schedule");
            if (plan[i].p != s.p)
                bad.push_back(where + ": p differs from the canonical prime selection");
            if (house_like) {
                if (!s.interval || s.interval->first != plan[i].exact_window->first ||
                    s.interval->second != plan[i].exact_window->second)
                    bad.push_back(where + ": stored interval differs from the recomputed window");
            }
            if (c.target.has_value() != plan[i].target.has_value() ||
                (c.target && *c.target != *plan[i].target))
                bad.push_back(where + ": target mismatch");
        }

        // direct recheck of the stored flags against the stored (p, d)
        StepChecks fresh;
        if (house_like) {
            if (s.interval)
                fresh.interval_member = Rational(s.p) > s.interval->first &&
                                        Rational(s.p) < s.interval->second;
            fresh.congruence = is_prime(s.p) && is_prime(s.d) && (s.p % (s.d * s.d)) == (s.d - 1);
            bool mono = false;
            try {
                mono = monogenic_chain(s.p, s.d);
            } catch (const Error&) {
                bad.push_back(where + ": monogenicity chain not evaluable");
            }
            fresh.monogenic = mono;
            fresh.eisenstein = eisenstein_applicable(s.d, s.p);
            fresh.prime_fresh = !prior.count(s.p) && !prior.count(s.d) && s.p != s.d;
            compare_flag(bad, where, "interval_member", c.interval_member,
                         fresh.interval_member);
            compare_flag(bad, where, "congruence", c.congruence, fresh.congruence);
            compare_flag(bad, where, "monogenic", c.monogenic, fresh.monogenic);
            compare_flag(bad, where, "eisenstein", c.eisenstein, fresh.eisenstein);
            compare_flag(bad, where, "prime_fresh", c.prime_fresh, fresh.prime_fresh);
            // the cached flags on the tower step must agree as well
            if (s.checks.congruence)
                compare_flag(bad, where, "congruence (tower)", s.checks.congruence,
                             fresh.congruence);
            if (s.checks.monogenic)
                compare_flag(bad, where, "monogenic (tower)", s.checks.monogenic,
                             fresh.monogenic);
            if (s.checks.eisenstein)
                compare_flag(bad, where, "eisenstein (tower)", s.checks.eisenstein,
                             fresh.eisenstein);
            if (c.congruence && !*fresh.congruence)
                bad.push_back(where + ": congruence violated (" + to_string(Integer(s.p % (s.d * s.d))) +
                              " != " + to_string(Integer(s.d - 1)) + " mod d^2)");
        } else {
            if (i < plan.size()) {
                bool member = !plan[i].widened;
                compare_flag(bad, where, "interval_member", c.interval_member, member);
                bool fresh_ok = plan[i].fresh;
                compare_flag(bad, where, "prime_fresh", c.prime_fresh, fresh_ok);
            }
            bool eis = eisenstein_applicable(s.d, s.p);
            compare_flag(bad, where, "eisenstein", c.eisenstein, eis);
            if (s.checks.eisenstein)
                compare_flag(bad, where, "eisenstein (tower)", s.checks.eisenstein, eis);
        }

        // mandatory flags must hold unless a note waives them
        auto demand = [&](const char* name, const std::optional<bool>& flag) {
            if (flag && !*flag && c.violation_notes.empty())
                bad.push_back(where + ": mandatory check '" + name +
                              "' is false with no waiver note");
        };
        demand("interval_member", c.interval_member);
        demand("congruence", c.congruence);
        demand("monogenic", c.monogenic);
        demand("eisenstein", c.eisenstein);
        demand("prime_fresh", c.prime_fresh);

        prior.insert(s.p);
        prior.insert(s.d);
    }

    // ordering / freshness of the tower as a whole
    if (house_like || cert.variant == ConstructionVariant::WeilWindow) {
        auto problems = cert.tower.validate();
        for (const auto& msg : problems) bad.push_back("tower: " + msg);
    }

    // report enclosures must intersect recomputed values
    if (cert.report.eta_values.size() != cert.tower.size() ||
        cert.report.house_values.size() != cert.tower.size()) {
        bad.push_back("report: per-step lists do not match the tower");
    } else {
        for (std::size_t i = 0; i < cert.tower.size(); ++i) {
            const RadicalStep& s = cert.tower.steps[i];
            if (!is_prime(s.p) || !is_prime(s.d)) continue;
            unsigned long du = s.d.get_ui();
            RealInterval base = RealInterval::exact_int(s.p, prec);
            RealInterval house_i = base.rootn(du);
            RealInterval eta_i = RealInterval::min(house_i, base.pow_ui(du - 1).rootn(du));
            std::string where = "report step " + std::to_string(i + 1);
            compare_interval(bad, where + " (eta)", cert.report.eta_values[i], eta_i);
            compare_interval(bad, where + " (house)", cert.report.house_values[i], house_i);
        }
        if (cert.variant == ConstructionVariant::WeilWindow ||
            cert.variant == ConstructionVariant::WeightedGap) {
            if (cert.report.weil_heights.size() != cert.tower.size()) {
                bad.push_back("report: weil heights missing");
            } else {
                for (std::size_t i = 0; i < cert.tower.size(); ++i) {
                    const RadicalStep& s = cert.tower.steps[i];
                    if (!is_prime(s.p) || !is_prime(s.d)) continue;
                    compare_interval(bad, "report step " + std::to_string(i + 1) + " (weil)",
                                     cert.report.weil_heights[i],
                                     log_p_over_d(s.p, s.d, prec));
                }
            }
        }
    }

    rep.pass = bad.empty();
    return rep;
}

std::string VerificationReport::to_json_string() const {
    nlohmann::ordered_json j;
    j["pass"] = pass;
    j["mismatches"] = mismatches;
    return j.dump(2);
}

}  // namespace radtower
