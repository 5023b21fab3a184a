#include "radtower/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "radtower/construct.hpp"
#include "radtower/primality.hpp"
#include "radtower/dedekind.hpp"
#include "radtower/oracle.hpp"
#include "radtower/suites.hpp"

namespace radtower::cli {

namespace {

using nlohmann::ordered_json;

struct GlobalOpts {
    double tol = 1e-9;
    long precision_ceiling = 4096;
    std::string ordering = "weak";
    std::uint64_t seed = 0;
    std::string format = "json";
    std::string out_file;
    int threads = 1;
};

NumericBudget budget_of(const GlobalOpts& g) {
    NumericBudget b;
    b.precision_ceiling = g.precision_ceiling;
    return b;
}

ordered_json interval_json(const RealInterval& r) {
    return ordered_json{{"lo", r.lo_string()}, {"hi", r.hi_string()}};
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    return out + "\"";
}

// Flat key/value table: one header row, one value row.
void emit_kv_csv(std::ostream& os, const std::vector<std::pair<std::string, std::string>>& kv) {
    for (std::size_t i = 0; i < kv.size(); ++i)
        os << (i ? "," : "") << csv_escape(kv[i].first);
    os << "\n";
    for (std::size_t i = 0; i < kv.size(); ++i)
        os << (i ? "," : "") << csv_escape(kv[i].second);
    os << "\n";
}

void deliver(const GlobalOpts& g, std::ostream& out, const std::string& payload) {
    out << payload;
    if (!payload.empty() && payload.back() != '\n') out << "\n";
    if (!g.out_file.empty()) {
        std::ofstream f(g.out_file);
        if (!f) throw InvalidParams("cannot open output file \"" + g.out_file + "\"");
        f << payload;
        if (!payload.empty() && payload.back() != '\n') f << "\n";
    }
}

RadicalTower load_tower(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InvalidParams("cannot open tower file \"" + path + "\"");
    std::stringstream ss;
    ss << f.rdbuf();
    return RadicalTower::from_json(ss.str());
}

PointTuple load_points(const std::string& path, long prec) {
    if (path == "-") return PointTuple::parse_csv(std::cin, prec);
    std::ifstream f(path);
    if (!f) throw InvalidParams("cannot open points file \"" + path + "\"");
    return PointTuple::parse_csv(f, prec);
}

std::vector<TowerElement::Exponents> parse_mask(const std::string& text) {
    std::vector<TowerElement::Exponents> mask;
    std::istringstream slots(text);
    std::string slot;
    while (std::getline(slots, slot, ';')) {
        TowerElement::Exponents e;
        std::istringstream parts(slot);
        std::string part;
        while (std::getline(parts, part, ','))
            e.push_back(static_cast<unsigned>(std::stoul(part)));
        mask.push_back(std::move(e));
    }
    if (mask.empty()) throw InvalidParams("empty slot mask");
    return mask;
}

std::string certificate_csv(const Certificate& c) {
    std::ostringstream os;
    os << "step,p,d,interval_lo,interval_hi,interval_member,congruence,monogenic,"
          "prime_fresh,eisenstein,notes\n";
    auto flag = [](const std::optional<bool>& b) {
        return !b ? std::string() : (*b ? std::string("true") : std::string("false"));
    };
    for (std::size_t i = 0; i < c.tower.size(); ++i) {
        const auto& s = c.tower.steps[i];
        const auto& k = c.per_step[i];
        std::string lo, hi;
        if (s.interval) {
            lo = to_string(s.interval->first);
            hi = to_string(s.interval->second);
        } else if (k.window) {
            lo = k.window->first;
            hi = k.window->second;
        }
        std::string notes;
        for (const auto& n : k.violation_notes) notes += (notes.empty() ? "" : "; ") + n;
        os << (i + 1) << "," << to_string(s.p) << "," << to_string(s.d) << ","
           << csv_escape(lo) << "," << csv_escape(hi) << "," << flag(k.interval_member) << ","
           << flag(k.congruence) << "," << flag(k.monogenic) << "," << flag(k.prime_fresh)
           << "," << flag(k.eisenstein) << "," << csv_escape(notes) << "\n";
    }
    return os.str();
}

std::string bounds_report_csv(const BoundsReport& rep) {
    std::ostringstream os;
    os << "step,eta_lo,eta_hi,house_lo,house_hi";
    bool weil = !rep.weil_heights.empty();
    bool weighted = !rep.weighted_heights.empty();
    if (weil) os << ",weil_lo,weil_hi";
    if (weighted) os << ",weighted_lo,weighted_hi";
    os << "\n";
    for (std::size_t i = 0; i < rep.eta_values.size(); ++i) {
        os << (i + 1) << "," << rep.eta_values[i].lo_string() << ","
           << rep.eta_values[i].hi_string() << "," << rep.house_values[i].lo_string() << ","
           << rep.house_values[i].hi_string();
        if (weil) os << "," << rep.weil_heights[i].lo_string() << ","
                     << rep.weil_heights[i].hi_string();
        if (weighted)
            os << "," << rep.weighted_heights[i].lo_string() << ","
               << rep.weighted_heights[i].hi_string();
        os << "\n";
    }
    return os.str();
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const SearchExhausted& e) {
        ordered_json j;
        j["error"] = "search_exhausted";
        j["detail"] = e.what();
        out << j.dump() << "\n";
        err << "search exhausted: " << e.what() << "\n";
        return 3;
    } catch (const PrecisionFailure& e) {
        ordered_json j;
        j["error"] = "precision_failure";
        j["detail"] = e.what();
        out << j.dump() << "\n";
        err << "precision failure: " << e.what() << "\n";
        return 4;
    } catch (const MalformedCertificate& e) {
        err << "malformed certificate: " << e.what() << "\n";
        return 2;
    } catch (const InvalidParams& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

namespace {

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"radical towers, heights, and Northcott-number certificates"};
    app.require_subcommand(1);
    // global flags may appear after the subcommand, per the CLI contract
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--tol", g.tol, "numeric tolerance (default 1e-9)");
    app.add_option("--precision-ceiling", g.precision_ceiling,
                   "working-precision ceiling in bits");
    app.add_option("--ordering", g.ordering, "tower ordering mode: weak|strict");
    app.add_option("--seed", g.seed, "seed for randomized suites");
    app.add_option("--format", g.format, "output format: json|csv");
    app.add_option("--out", g.out_file, "also write the payload to this file");
    app.add_option("--threads", g.threads, "worker threads for enumerations");

    // construct
    auto* c_cmd = app.add_subcommand("construct", "build a tower certificate");
    std::string c_variant = "b", c_t = "2", c_dseed = "7";
    double c_gamma = 0, c_eps = 0;
    long c_steps = 1;
    c_cmd->add_option("--variant", c_variant,
                      "a|b|c (house variants) | weil-window | weighted-gap");
    c_cmd->add_option("--t", c_t, "target parameter t (rational or decimal)");
    c_cmd->add_option("--gamma", c_gamma, "weighted-gap gamma in [0,1]");
    c_cmd->add_option("--eps", c_eps, "weighted-gap eps > 0");
    c_cmd->add_option("--steps", c_steps, "number of tower steps");
    c_cmd->add_option("--d-seed", c_dseed, "first degree prime");

    // verify
    auto* v_cmd = app.add_subcommand("verify", "re-derive every check of a certificate");
    std::string v_file;
    v_cmd->add_option("certificate", v_file, "certificate JSON file")->required();

    // house / height
    auto* h_cmd = app.add_subcommand("house", "house of a tower element");
    auto* ht_cmd = app.add_subcommand("height", "Weil height of a tower element");
    std::string h_tower, h_elt, ht_tower, ht_elt;
    double ht_gamma = std::numeric_limits<double>::quiet_NaN();
    h_cmd->add_option("--tower", h_tower, "tower JSON file")->required();
    h_cmd->add_option("--elt", h_elt, "element text, e.g. \"1 + 2*x1\"")->required();
    ht_cmd->add_option("--tower", ht_tower, "tower JSON file")->required();
    ht_cmd->add_option("--elt", ht_elt, "element text")->required();
    ht_cmd->add_option("--gamma", ht_gamma, "also report the gamma-weighted height");

    // discrepancy
    auto* d_cmd = app.add_subcommand("discrepancy", "finite discrepancy of a point tuple");
    std::string d_points;
    d_cmd->add_option("--points", d_points, "CSV file of re,im[,rad] rows (- for stdin)")
        ->required();

    // eta
    auto* e_cmd = app.add_subcommand("eta", "eta of a tower step, or eta0 of a root tuple");
    std::string e_tower, e_points;
    long e_step = 1;
    e_cmd->add_option("--tower", e_tower, "tower JSON file");
    e_cmd->add_option("--step", e_step, "step index (1-based)");
    e_cmd->add_option("--points", e_points, "root tuple CSV for eta0");

    // dedekind
    auto* dk_cmd = app.add_subcommand("dedekind", "index-coprimality at a prime");
    std::string dk_poly;
    std::string dk_q;
    dk_cmd->add_option("--poly", dk_poly, "monic integer polynomial in x")->required();
    dk_cmd->add_option("--q", dk_q, "prime to test")->required();

    // find-prime
    auto* fp_cmd = app.add_subcommand("find-prime", "least prime in an interval and class");
    std::string fp_lo, fp_hi, fp_a = "0", fp_m = "1", fp_exclude;
    fp_cmd->add_option("--lo", fp_lo, "lower endpoint (exact rational/decimal)")->required();
    fp_cmd->add_option("--hi", fp_hi, "upper endpoint")->required();
    fp_cmd->add_option("--a", fp_a, "residue class");
    fp_cmd->add_option("--m", fp_m, "modulus");
    fp_cmd->add_option("--exclude", fp_exclude, "comma-separated primes to skip");

    // bounds-report
    auto* br_cmd = app.add_subcommand("bounds-report", "per-step eta/house evidence");
    std::string br_tower, br_limit;
    br_cmd->add_option("--tower", br_tower, "tower JSON file")->required();
    br_cmd->add_option("--claimed-limit", br_limit, "rational limit to record");

    // enumerate-min-house
    auto* em_cmd = app.add_subcommand("enumerate-min-house",
                                      "minimum house/weil height over new elements");
    std::string em_tower, em_mask;
    long em_step = 1, em_bound = 1;
    std::uint64_t em_cap = 10'000'000;
    bool em_constants = false, em_weil = false;
    em_cmd->add_option("--tower", em_tower, "tower JSON file")->required();
    em_cmd->add_option("--step", em_step, "step index (1-based)");
    em_cmd->add_option("--coeff-bound", em_bound, "coefficient bound C");
    em_cmd->add_option("--mask", em_mask, "slot mask \"m1,m2;m1,m2;...\"");
    em_cmd->add_option("--cap", em_cap, "enumeration size cap");
    em_cmd->add_flag("--include-constants", em_constants, "do not require the top generator");
    em_cmd->add_flag("--weil", em_weil, "minimize the Weil height instead of the house");

    // lemma-check
    auto* lc_cmd = app.add_subcommand("lemma-check", "run a named property suite");
    std::string lc_name;
    std::uint64_t lc_count = 0;
    lc_cmd->add_option("--name", lc_name, "suite name (see --list)")->required();
    lc_cmd->add_option("--count", lc_count, "instance count override");

    std::vector<std::string> argv(args);
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    if (g.format != "json" && g.format != "csv")
        throw InvalidParams("--format must be json or csv");
    NumericBudget budget = budget_of(g);
    OrderingMode mode = ordering_mode_from_string(g.ordering);

    if (*c_cmd) {
        ConstructionVariant variant = variant_from_string(c_variant);
        Certificate cert;
        if (variant == ConstructionVariant::WeilWindow) {
            cert = construct_weil_window(rational_from_string(c_t), c_steps,
                                         int_from_string(c_dseed), mode, g.tol, budget);
        } else if (variant == ConstructionVariant::WeightedGap) {
            cert = construct_weighted_gap(c_gamma, c_eps, c_steps, int_from_string(c_dseed),
                                          mode, g.tol, budget);
        } else {
            cert = construct_house_spectrum(variant, rational_from_string(c_t), c_steps,
                                            int_from_string(c_dseed), mode, g.tol, budget);
        }
        deliver(g, out, g.format == "csv" ? certificate_csv(cert) : cert.to_json_string());
        return 0;
    }

    if (*v_cmd) {
        std::ifstream f(v_file);
        if (!f) throw InvalidParams("cannot open certificate \"" + v_file + "\"");
        std::stringstream ss;
        ss << f.rdbuf();
        Certificate cert = Certificate::from_json_string(ss.str());
        VerificationReport rep = verify_certificate(cert, g.tol, budget);
        if (g.format == "csv") {
            std::ostringstream os;
            os << "pass\n" << (rep.pass ? "true" : "false") << "\n";
            for (const auto& m : rep.mismatches) os << csv_escape(m) << "\n";
            deliver(g, out, os.str());
        } else {
            deliver(g, out, rep.to_json_string());
        }
        return rep.pass ? 0 : 1;
    }

    if (*h_cmd) {
        RadicalTower tower = load_tower(h_tower);
        tower.mode = mode;
        TowerElement elt = parse_element(h_elt, tower);
        HeightValue h = house(tower, elt, g.tol, budget);
        if (g.format == "csv") {
            std::ostringstream os;
            emit_kv_csv(os, {{"house_lo", h.value.lo_string()},
                             {"house_hi", h.value.hi_string()}});
            deliver(g, out, os.str());
        } else {
            ordered_json j;
            j["house"] = interval_json(h.value);
            deliver(g, out, j.dump());
        }
        return 0;
    }

    if (*ht_cmd) {
        RadicalTower tower = load_tower(ht_tower);
        tower.mode = mode;
        TowerElement elt = parse_element(ht_elt, tower);
        HeightValue h = weil_height_integral(tower, elt, g.tol, budget);
        ordered_json j;
        j["weil"] = interval_json(h.value);
        std::vector<std::pair<std::string, std::string>> kv = {
            {"weil_lo", h.value.lo_string()}, {"weil_hi", h.value.hi_string()}};
        if (!std::isnan(ht_gamma)) {
            Integer deg = element_degree_over_Q(tower, elt, g.tol, budget);
            RealInterval w = weighted_height(ht_gamma, deg, h.value);
            j["degree"] = to_string(deg);
            j["gamma"] = ht_gamma;
            j["weighted"] = interval_json(w);
            kv.emplace_back("degree", to_string(deg));
            kv.emplace_back("weighted_lo", w.lo_string());
            kv.emplace_back("weighted_hi", w.hi_string());
        }
        if (g.format == "csv") {
            std::ostringstream os;
            emit_kv_csv(os, kv);
            deliver(g, out, os.str());
        } else {
            deliver(g, out, j.dump());
        }
        return 0;
    }

    if (*d_cmd) {
        long prec = precision_for_tolerance(g.tol, budget);
        PointTuple pts = load_points(d_points, prec);
        DiscrepancyResult r = discrepancy(pts, g.tol, budget);
        if (g.format == "csv") {
            std::ostringstream os;
            emit_kv_csv(os, {{"value_lo", r.value.lo_string()},
                             {"value_hi", r.value.hi_string()},
                             {"grid_step", std::to_string(r.grid_step)}});
            deliver(g, out, os.str());
        } else {
            ordered_json j;
            j["value"] = interval_json(r.value);
            char re_buf[64], im_buf[64];
            snprintf(re_buf, sizeof re_buf, "%.17g", r.argmin_u.re_d());
            snprintf(im_buf, sizeof im_buf, "%.17g", r.argmin_u.im_d());
            j["argmin_u"] = {{"re", re_buf}, {"im", im_buf}, {"rad", r.argmin_u.rad()}};
            j["grid_step"] = r.grid_step;
            deliver(g, out, j.dump());
        }
        return 0;
    }

    if (*e_cmd) {
        if (!e_tower.empty() && !e_points.empty())
            throw InvalidParams("eta: give either --tower/--step or --points, not both");
        ordered_json j;
        std::vector<std::pair<std::string, std::string>> kv;
        if (!e_tower.empty()) {
            RadicalTower tower = load_tower(e_tower);
            tower.mode = mode;
            RealInterval v = eta_radical_step(tower, static_cast<std::size_t>(e_step), g.tol,
                                              budget);
            j["eta"] = interval_json(v);
            j["step"] = e_step;
            kv = {{"eta_lo", v.lo_string()}, {"eta_hi", v.hi_string()}};
        } else if (!e_points.empty()) {
            long prec = precision_for_tolerance(g.tol, budget);
            PointTuple pts = load_points(e_points, prec);
            RealInterval v = eta0(pts, g.tol, budget);
            j["eta0"] = interval_json(v);
            kv = {{"eta0_lo", v.lo_string()}, {"eta0_hi", v.hi_string()}};
        } else {
            throw InvalidParams("eta: need --tower FILE --step I, or --points FILE");
        }
        if (g.format == "csv") {
            std::ostringstream os;
            emit_kv_csv(os, kv);
            deliver(g, out, os.str());
        } else {
            deliver(g, out, j.dump());
        }
        return 0;
    }

    if (*dk_cmd) {
        PolyZ f = parse_polyz(dk_poly);
        bool coprime = dedekind_index_coprime(f, int_from_string(dk_q));
        if (g.format == "csv") {
            std::ostringstream os;
            emit_kv_csv(os, {{std::string("index_coprime"),
                              std::string(coprime ? "true" : "false")}});
            deliver(g, out, os.str());
        } else {
            ordered_json j;
            j["index_coprime"] = coprime;
            deliver(g, out, j.dump());
        }
        return 0;
    }

    if (*fp_cmd) {
        std::set<Integer> exclude;
        if (!fp_exclude.empty()) {
            std::istringstream ss(fp_exclude);
            std::string item;
            while (std::getline(ss, item, ',')) exclude.insert(int_from_string(item));
        }
        auto p = find_prime_in_ap(rational_from_string(fp_lo), rational_from_string(fp_hi),
                                  int_from_string(fp_a), int_from_string(fp_m), exclude);
        if (g.format == "csv") {
            std::ostringstream os;
            emit_kv_csv(os, {{std::string("prime"), p ? to_string(*p) : std::string()}});
            deliver(g, out, os.str());
        } else {
            ordered_json j;
            j["prime"] = p ? ordered_json(to_string(*p)) : ordered_json(nullptr);
            deliver(g, out, j.dump());
        }
        return p ? 0 : 3;
    }

    if (*br_cmd) {
        RadicalTower tower = load_tower(br_tower);
        tower.mode = mode;
        std::optional<Rational> limit;
        if (!br_limit.empty()) limit = rational_from_string(br_limit);
        BoundsReport rep = northcott_bounds_report(tower, g.tol, limit, budget);
        deliver(g, out,
                g.format == "csv" ? bounds_report_csv(rep) : rep.to_json_string());
        return 0;
    }

    if (*em_cmd) {
        EnumerationSpec spec;
        spec.tower = load_tower(em_tower);
        spec.tower.mode = mode;
        spec.step_index = static_cast<std::size_t>(em_step);
        spec.coeff_bound = em_bound;
        spec.include_constants = em_constants;
        spec.cap = em_cap;
        spec.threads = g.threads;
        if (!em_mask.empty()) spec.slot_mask = parse_mask(em_mask);
        MinScanResult r = em_weil ? empirical_min_weil(spec, g.tol, budget)
                                  : empirical_min_house(spec, g.tol, budget);
        const char* key = em_weil ? "min_weil" : "min_house";
        if (g.format == "csv") {
            std::ostringstream os;
            emit_kv_csv(os, {{std::string(key) + "_lo", r.value.lo_string()},
                             {std::string(key) + "_hi", r.value.hi_string()},
                             {"witness", r.witness.to_string()},
                             {"count", std::to_string(r.scanned)}});
            deliver(g, out, os.str());
        } else {
            ordered_json j;
            j[key] = interval_json(r.value);
            j["witness"] = r.witness.to_string();
            j["count"] = r.scanned;
            deliver(g, out, j.dump());
        }
        return 0;
    }

    if (*lc_cmd) {
        SuiteResult r = run_suite(lc_name, g.seed, lc_count, g.tol);
        if (g.format == "csv") {
            std::ostringstream os;
            emit_kv_csv(os, {{"suite", r.name},
                             {"instances", std::to_string(r.instances)},
                             {"violations", std::to_string(r.violations)},
                             {"pass", r.pass() ? "true" : "false"}});
            deliver(g, out, os.str());
        } else {
            deliver(g, out, r.to_json_string());
        }
        return r.pass() ? 0 : 1;
    }

    err << "usage error: no subcommand\n";
    return 2;
}

}  // namespace

}  // namespace radtower::cli
