#include "radtower/certificate.hpp"

#include <json.hpp>

namespace radtower {

using nlohmann::ordered_json;

std::string to_string(ConstructionVariant v) {
    switch (v) {
        case ConstructionVariant::HouseA: return "house-a";
        case ConstructionVariant::HouseB: return "house-b";
        case ConstructionVariant::HouseC: return "house-c";
        case ConstructionVariant::WeilWindow: return "weil-window";
        case ConstructionVariant::WeightedGap: return "weighted-gap";
    }
    throw InvalidParams("unknown variant");
}

ConstructionVariant variant_from_string(const std::string& s) {
    if (s == "house-a" || s == "a") return ConstructionVariant::HouseA;
    if (s == "house-b" || s == "b") return ConstructionVariant::HouseB;
    if (s == "house-c" || s == "c") return ConstructionVariant::HouseC;
    if (s == "weil-window") return ConstructionVariant::WeilWindow;
    if (s == "weighted-gap") return ConstructionVariant::WeightedGap;
    throw InvalidParams("unknown construction variant \"" + s + "\"");
}

namespace {

ordered_json step_checks_json(const StepChecks& c) {
    ordered_json j = ordered_json::object();
    auto put = [&](const char* key, const std::optional<bool>& v) {
        if (v) j[key] = *v;
    };
    put("interval_member", c.interval_member);
    put("congruence", c.congruence);
    put("monogenic", c.monogenic);
    put("prime_fresh", c.prime_fresh);
    put("eisenstein", c.eisenstein);
    j["violation_notes"] = c.violation_notes;
    if (c.target) j["target"] = to_string(*c.target);
    if (c.window) j["window"] = {{"lo", c.window->first}, {"hi", c.window->second}};
    return j;
}

StepChecks step_checks_from_json(const nlohmann::json& j) {
    StepChecks c;
    auto get = [&](const char* key) -> std::optional<bool> {
        if (j.contains(key)) return j.at(key).get<bool>();
        return std::nullopt;
    };
    c.interval_member = get("interval_member");
    c.congruence = get("congruence");
    c.monogenic = get("monogenic");
    c.prime_fresh = get("prime_fresh");
    c.eisenstein = get("eisenstein");
    if (j.contains("violation_notes"))
        c.violation_notes = j.at("violation_notes").get<std::vector<std::string>>();
    if (j.contains("target")) c.target = rational_from_string(j.at("target").get<std::string>());
    if (j.contains("window"))
        c.window = std::make_pair(j.at("window").at("lo").get<std::string>(),
                                  j.at("window").at("hi").get<std::string>());
    return c;
}

RealInterval interval_from_json(const nlohmann::json& j, long prec = 128) {
    return RealInterval::from_strings(j.at("lo").get<std::string>(),
                                      j.at("hi").get<std::string>(), prec);
}

std::vector<RealInterval> interval_list_from_json(const nlohmann::json& j) {
    std::vector<RealInterval> out;
    for (const auto& e : j) out.push_back(interval_from_json(e));
    return out;
}

}  // namespace

std::string Certificate::to_json_string() const {
    ordered_json j;
    j["schema"] = schema;
    j["variant"] = radtower::to_string(variant);
    ordered_json pj = ordered_json::object();
    if (params.t) pj["t"] = radtower::to_string(*params.t);
    if (params.gamma) pj["gamma"] = *params.gamma;
    if (params.eps) pj["eps"] = *params.eps;
    pj["steps"] = params.steps;
    pj["d_seed"] = radtower::to_string(params.d_seed);
    j["params"] = pj;
    j["tower"] = nlohmann::ordered_json::parse(tower.to_json());
    ordered_json steps = ordered_json::array();
    for (const auto& c : per_step) steps.push_back(step_checks_json(c));
    j["per_step"] = steps;
    j["report"] = nlohmann::ordered_json::parse(report.to_json_string());
    j["toolchain"] = {{"version", toolchain.version},
                      {"ordering_mode", toolchain.ordering_mode},
                      {"search_policy", toolchain.search_policy}};
    return j.dump(2);
}

Certificate Certificate::from_json_string(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedCertificate(std::string("certificate JSON: ") + e.what());
    }
    try {
        Certificate c;
        c.schema = j.at("schema").get<int>();
        if (c.schema != 1)
            throw MalformedCertificate("unsupported certificate schema version");
        c.variant = variant_from_string(j.at("variant").get<std::string>());
        const auto& pj = j.at("params");
        if (pj.contains("t")) c.params.t = rational_from_string(pj.at("t").get<std::string>());
        if (pj.contains("gamma")) c.params.gamma = pj.at("gamma").get<double>();
        if (pj.contains("eps")) c.params.eps = pj.at("eps").get<double>();
        c.params.steps = pj.at("steps").get<long>();
        c.params.d_seed = int_from_string(pj.at("d_seed").get<std::string>());
        c.tower = RadicalTower::from_json(j.at("tower").dump());
        for (const auto& sj : j.at("per_step")) c.per_step.push_back(step_checks_from_json(sj));

        const auto& rj = j.at("report");
        c.report.eta_values = interval_list_from_json(rj.at("eta_values"));
        c.report.house_values = interval_list_from_json(rj.at("house_values"));
        c.report.prefix_liminf_eta = interval_from_json(rj.at("prefix_liminf_eta"));
        c.report.prefix_min_house = interval_from_json(rj.at("prefix_min_house"));
        if (rj.contains("claimed_limit") && !rj.at("claimed_limit").is_null())
            c.report.claimed_limit =
                rational_from_string(rj.at("claimed_limit").get<std::string>());
        if (rj.contains("weil_heights"))
            c.report.weil_heights = interval_list_from_json(rj.at("weil_heights"));
        if (rj.contains("weighted_heights")) {
            c.report.weighted_heights = interval_list_from_json(rj.at("weighted_heights"));
            c.report.weighted_gamma = rj.at("weighted_gamma").get<double>();
        }
        if (rj.contains("step_height_floors"))
            c.report.step_height_floors = interval_list_from_json(rj.at("step_height_floors"));
        if (rj.contains("documentation"))
            c.report.documentation = rj.at("documentation").get<std::vector<std::string>>();
        if (rj.contains("target_window"))
            c.report.target_window =
                std::make_pair(rational_from_string(rj.at("target_window")[0].get<std::string>()),
                               rational_from_string(rj.at("target_window")[1].get<std::string>()));

        const auto& tj = j.at("toolchain");
        c.toolchain.version = tj.at("version").get<std::string>();
        c.toolchain.ordering_mode = tj.at("ordering_mode").get<std::string>();
        c.toolchain.search_policy = tj.at("search_policy").get<std::string>();
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw MalformedCertificate(std::string("certificate JSON: ") + e.what());
    }
}

}  // namespace radtower
