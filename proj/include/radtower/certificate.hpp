#pragma once

#include <optional>
#include <string>
#include <vector>

#include "radtower/bounds.hpp"
#include "radtower/tower.hpp"

namespace radtower {

/// Which construction produced a certificate.
enum class ConstructionVariant {
    HouseA,       // prescribed house Northcott number, values accumulate below t
    HouseB,       // prescribed house Northcott number, isolated-window shape
    HouseC,       // prescribed house Northcott number, dense-above shape
    WeilWindow,   // Weil-height Northcott number inside [t, 2t]
    WeightedGap,  // gamma-Northcott but not (gamma-eps)-Bogomolov
};

std::string to_string(ConstructionVariant v);
ConstructionVariant variant_from_string(const std::string& s);

struct ConstructionParams {
    std::optional<Rational> t;      // house variants and the Weil window
    std::optional<double> gamma;    // weighted gap
    std::optional<double> eps;      // weighted gap
    long steps = 0;
    Integer d_seed = 3;
};

/// Everything checked about one constructed step.  Absent flags mean "not
/// applicable to this variant".  A mandatory flag may be false only when a
/// violation note records the waiver (e.g. a widened empty window, or an
/// unavoidable early freshness collision).
struct StepChecks {
    std::optional<bool> interval_member;
    std::optional<bool> congruence;
    std::optional<bool> monogenic;
    std::optional<bool> prime_fresh;
    std::optional<bool> eisenstein;
    std::vector<std::string> violation_notes;
    std::optional<Rational> target;  // dense-above variant: the T_j this step serves
    // outer decimal bounds of a transcendental search window
    std::optional<std::pair<std::string, std::string>> window;
};

struct Toolchain {
    std::string version = "1.0.0";
    std::string ordering_mode = "weak";
    std::string search_policy = "least-qualifying-upward-scan";
};

struct Certificate {
    int schema = 1;
    ConstructionVariant variant = ConstructionVariant::HouseB;
    ConstructionParams params;
    RadicalTower tower;
    std::vector<StepChecks> per_step;
    BoundsReport report;
    Toolchain toolchain;

    std::string to_json_string() const;
    static Certificate from_json_string(const std::string& text);
};

}  // namespace radtower
