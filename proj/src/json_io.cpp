#include "pilotcoex/json_io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <string>
#include <string_view>

namespace pilotcoex {

using nlohmann::json;

namespace {

constexpr std::array<std::string_view, 6> kScenarioKeys = {"t_ofdm", "t_pil",  "n_p",
                                                           "t_rep",  "t_pulse", "echo_delays"};

double number_field(const json& doc, const char* key) {
    const json& v = doc.at(key);
    if (!v.is_number()) throw ConfigError(std::string("scenario field '") + key + "' must be a number");
    return v.get<double>();
}

}  // namespace

json to_json(const ScenarioConfig& config) {
    return json{{"t_ofdm", config.t_ofdm}, {"t_pil", config.t_pil},
                {"n_p", config.n_p},       {"t_rep", config.t_rep},
                {"t_pulse", config.t_pulse}, {"echo_delays", config.echo_delays}};
}

ScenarioConfig scenario_from_json(const json& doc) {
    if (!doc.is_object()) throw ConfigError("scenario document must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (std::find(kScenarioKeys.begin(), kScenarioKeys.end(), key) == kScenarioKeys.end()) {
            throw ConfigError("unknown scenario key '" + key + "'");
        }
    }
    for (const char* key : {"t_ofdm", "t_pil", "n_p", "t_rep"}) {
        if (!doc.contains(key)) throw ConfigError(std::string("missing scenario key '") + key + "'");
    }

    ScenarioConfig config;
    config.t_ofdm = number_field(doc, "t_ofdm");
    config.t_pil = number_field(doc, "t_pil");
    config.t_rep = number_field(doc, "t_rep");
    const json& n_p = doc.at("n_p");
    if (!n_p.is_number_integer()) throw ConfigError("scenario field 'n_p' must be an integer");
    config.n_p = n_p.get<int>();
    if (doc.contains("t_pulse")) config.t_pulse = number_field(doc, "t_pulse");
    if (doc.contains("echo_delays")) {
        const json& delays = doc.at("echo_delays");
        if (!delays.is_array()) throw ConfigError("scenario field 'echo_delays' must be an array");
        for (const json& d : delays) {
            if (!d.is_number()) throw ConfigError("echo delays must be numbers");
            config.echo_delays.push_back(d.get<double>());
        }
    }
    return config;
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open scenario file " + path.string());
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw ConfigError("malformed scenario file " + path.string() + ": " + e.what());
    }
    return scenario_from_json(doc);
}

json to_json(const IntervalSet& set) {
    json out = json::array();
    for (const Interval& iv : set.intervals()) out.push_back({iv.lo, iv.hi});
    return out;
}

json to_json(const FeasibleSet& fs) {
    return json{{"m", fs.m},         {"n_p", fs.n_p},       {"t_pil", fs.t_pil},
                {"t_ofdm", fs.t_ofdm}, {"q_max", fs.q_max}, {"intervals", to_json(fs.set)}};
}

json to_json(const ProbabilityReport& report) {
    json out{{"m", report.m},
             {"p_exact", report.p_exact},
             {"lower_bound", report.lower_bound},
             {"upper_bound", report.upper_bound},
             {"closed_form", nullptr},
             {"closed_form_case", nullptr},
             {"support", label(report.support)},
             {"predicted_nonzero", report.predicted_nonzero()}};
    if (report.closed_form) {
        out["closed_form"] = report.closed_form->value;
        out["closed_form_case"] = label(report.closed_form->kind);
    }
    return out;
}

json to_json(const MonteCarloEstimate& mc) {
    return json{{"estimate", mc.estimate}, {"stderr", mc.std_error}, {"samples", mc.samples},
                {"seed", mc.seed},         {"rng", mc.rng}};
}

json to_json(const DmrsRecommendation& r) {
    return json{{"k_opt", r.k_opt},
                {"t_dmrs", r.t_dmrs},
                {"p_interference", r.p_interference},
                {"coherence_ok", r.coherence_ok}};
}

json to_json(const ScsiAccuracy& a) {
    return json{{"scheme", label(a.scheme)}, {"threshold_m", a.threshold_m}, {"p_accurate", a.p_accurate}};
}

}  // namespace pilotcoex
