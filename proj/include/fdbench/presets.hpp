#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "fdbench/models.hpp"

namespace fdbench {

/// A named parameter set for one of the three case-study models.
struct Preset {
    std::string name;
    std::string model;  // "logistic" | "temperature" | "market"
    std::map<std::string, double> params;
    std::string source;  // "paper" | "user"
};

nlohmann::json preset_to_json(const Preset& p);
Preset preset_from_json(const nlohmann::json& j);

/// Named presets; ships the fitted constants for the three case models
/// and accepts user additions loaded from a JSON registry file.
class PresetRegistry {
public:
    /// Registry with the three shipped presets: "paper-logistic",
    /// "paper-temperature-defaults", "paper-market".
    static PresetRegistry builtin();

    /// Builtin presets merged with entries from a JSON registry file
    /// ({"version": 1, "presets": [...]}); file entries win on name clash.
    static PresetRegistry load(const std::string& path);

    const Preset& get(const std::string& name) const;  // throws Error
    bool contains(const std::string& name) const;
    std::vector<std::string> names() const;
    void add(Preset p);

    nlohmann::json to_json() const;

private:
    std::map<std::string, Preset> presets_;
};

LogisticModel logistic_from_params(const std::map<std::string, double>& params);
TemperatureModel temperature_from_params(const std::map<std::string, double>& params);
MarketModel market_from_params(const std::map<std::string, double>& params);

/// Parameter names accepted by a model kind, for override type-checking.
std::vector<std::string> model_param_names(const std::string& model);

/// Default preset name for a case id ("logistic"/"temperature"/"market").
std::string default_preset_name(const std::string& case_id);

/// Default sampling grid per case (artifact defaults, overridable).
struct CaseGrid {
    double t0;
    double t1;
    double h;
    int sample_count() const;
};
CaseGrid default_grid(const std::string& case_id);

/// A case study reduced to what the benchmarks need: the closed-form
/// value and its analytic rate.
struct CaseStudy {
    std::string name;
    std::function<double(double)> value;
    std::function<double(double)> rate;
    // Extended-precision twins, used by convergence sweeps.
    std::function<long double(long double)> value_ld;
    std::function<long double(long double)> rate_ld;
    std::string time_unit;
    std::string value_unit;
};

/// Builds a case study from a preset plus per-field overrides.
/// Unknown override names or an unknown case id throw Error.
CaseStudy make_case(const std::string& case_id,
                    const std::map<std::string, double>& overrides = {},
                    const PresetRegistry& registry = PresetRegistry::builtin());

} // namespace fdbench
