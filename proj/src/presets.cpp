#include "fdbench/presets.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "fdbench/errors.hpp"

namespace fdbench {

nlohmann::json preset_to_json(const Preset& p) {
    return {{"name", p.name},
            {"model", p.model},
            {"params", p.params},
            {"source", p.source}};
}

Preset preset_from_json(const nlohmann::json& j) {
    Preset p;
    try {
        p.name = j.at("name").get<std::string>();
        p.model = j.at("model").get<std::string>();
        p.params = j.at("params").get<std::map<std::string, double>>();
        p.source = j.value("source", "user");
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed preset object: ") + e.what());
    }
    if (p.model != "logistic" && p.model != "temperature" && p.model != "market")
        throw Error("preset '" + p.name + "' names unknown model '" + p.model + "'");
    return p;
}

PresetRegistry PresetRegistry::builtin() {
    PresetRegistry r;
    r.add({"paper-logistic",
           "logistic",
           {{"A", -4.382e-07}, {"p1", -2.921e+04}, {"p0", 76.09}},
           "paper"});
    // No fitted constants exist for the temperature case; amplitudes,
    // rates, and the 24-hour frequency are artifact defaults.
    r.add({"paper-temperature-defaults",
           "temperature",
           {{"B1", 10.0},
            {"B2", 20.0},
            {"k1", 0.2},
            {"omega", M_PI / 12.0},
            {"T0", 15.0}},
           "user"});
    r.add({"paper-market",
           "market",
           {{"D", 3.282e-08},
            {"lambda", -7.314},
            {"a", 36.07},
            {"b", -0.01},
            {"c", 0.018}},
           "paper"});
    return r;
}

PresetRegistry PresetRegistry::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open preset registry: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error("invalid JSON in preset registry " + path + ": " + e.what());
    }
    PresetRegistry r = builtin();
    for (const auto& item : j.value("presets", nlohmann::json::array()))
        r.add(preset_from_json(item));
    return r;
}

const Preset& PresetRegistry::get(const std::string& name) const {
    auto it = presets_.find(name);
    if (it == presets_.end()) throw Error("unknown preset '" + name + "'");
    return it->second;
}

bool PresetRegistry::contains(const std::string& name) const {
    return presets_.count(name) > 0;
}

std::vector<std::string> PresetRegistry::names() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : presets_) out.push_back(k);
    return out;
}

void PresetRegistry::add(Preset p) {
    presets_[p.name] = std::move(p);
}

nlohmann::json PresetRegistry::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [k, v] : presets_) arr.push_back(preset_to_json(v));
    return {{"version", 1}, {"presets", arr}};
}

namespace {

double require_param(const std::map<std::string, double>& params,
                     const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) throw Error("missing model parameter '" + key + "'");
    return it->second;
}

} // namespace

LogisticModel logistic_from_params(const std::map<std::string, double>& params) {
    return {require_param(params, "A"), require_param(params, "p1"),
            require_param(params, "p0")};
}

TemperatureModel temperature_from_params(const std::map<std::string, double>& params) {
    TemperatureModel m{require_param(params, "B1"), require_param(params, "B2"),
                       require_param(params, "k1"), require_param(params, "omega"),
                       require_param(params, "T0")};
    m.validate();
    return m;
}

MarketModel market_from_params(const std::map<std::string, double>& params) {
    MarketModel m{require_param(params, "D"), require_param(params, "lambda"),
                  require_param(params, "a"), require_param(params, "b"),
                  require_param(params, "c")};
    m.validate();
    return m;
}

std::vector<std::string> model_param_names(const std::string& model) {
    if (model == "logistic") return {"A", "p1", "p0"};
    if (model == "temperature") return {"B1", "B2", "k1", "omega", "T0"};
    if (model == "market") return {"D", "lambda", "a", "b", "c"};
    throw Error("unknown model '" + model + "'");
}

std::string default_preset_name(const std::string& case_id) {
    if (case_id == "logistic") return "paper-logistic";
    if (case_id == "temperature") return "paper-temperature-defaults";
    if (case_id == "market") return "paper-market";
    throw Error("unknown case '" + case_id +
                "' (expected logistic, temperature, or market)");
}

int CaseGrid::sample_count() const {
    return static_cast<int>(std::lround((t1 - t0) / h)) + 1;
}

CaseGrid default_grid(const std::string& case_id) {
    if (case_id == "logistic") return {0.0, 120.0, 10.0};    // census decades
    if (case_id == "temperature") return {0.0, 24.0, 0.5};   // one day
    if (case_id == "market") return {0.0, 300.0, 5.0};
    throw Error("unknown case '" + case_id + "'");
}

CaseStudy make_case(const std::string& case_id,
                    const std::map<std::string, double>& overrides,
                    const PresetRegistry& registry) {
    const Preset& preset = registry.get(default_preset_name(case_id));
    auto params = preset.params;
    const auto names = model_param_names(preset.model);
    for (const auto& [key, val] : overrides) {
        if (std::find(names.begin(), names.end(), key) == names.end())
            throw Error("unknown parameter '" + key + "' for model '" +
                        preset.model + "'");
        params[key] = val;
    }

    CaseStudy cs;
    cs.name = case_id;
    if (case_id == "logistic") {
        auto m = logistic_from_params(params);
        cs.value = [m](double t) { return m.value(t); };
        cs.rate = [m](double t) { return m.rate(t); };
        cs.value_ld = [m](long double t) { return m.value_t<long double>(t); };
        cs.rate_ld = [m](long double t) { return m.rate_t<long double>(t); };
        cs.time_unit = "year";
        cs.value_unit = "million";
    } else if (case_id == "temperature") {
        auto m = temperature_from_params(params);
        cs.value = [m](double t) { return m.value(t); };
        cs.rate = [m](double t) { return m.rate(t); };
        cs.value_ld = [m](long double t) { return m.value_t<long double>(t); };
        cs.rate_ld = [m](long double t) { return m.rate_t<long double>(t); };
        cs.time_unit = "hour";
        cs.value_unit = "degC";
    } else {
        auto m = market_from_params(params);
        cs.value = [m](double t) { return m.value(t); };
        cs.rate = [m](double t) { return m.rate(t); };
        cs.value_ld = [m](long double t) { return m.value_t<long double>(t); };
        cs.rate_ld = [m](long double t) { return m.rate_t<long double>(t); };
        cs.time_unit = "t";
        cs.value_unit = "price";
    }
    return cs;
}

} // namespace fdbench
