#pragma once

#include <filesystem>

#include <json.hpp>

#include "pilotcoex/advisor.hpp"
#include "pilotcoex/closed_forms.hpp"
#include "pilotcoex/engine.hpp"
#include "pilotcoex/monte_carlo.hpp"
#include "pilotcoex/scenario.hpp"

namespace pilotcoex {

/// {"t_ofdm", "t_pil", "n_p", "t_rep", "t_pulse", "echo_delays"}, durations
/// in seconds. t_pulse and echo_delays are optional on input and always
/// written on output.
nlohmann::json to_json(const ScenarioConfig& config);

/// Throws ConfigError on unknown keys, missing required keys or wrong
/// types. Field constraints are checked by validate(), not here.
ScenarioConfig scenario_from_json(const nlohmann::json& doc);

/// Reads and parses a scenario file. Throws ConfigError.
ScenarioConfig load_scenario(const std::filesystem::path& path);

/// {m, n_p, t_pil, t_ofdm, q_max, intervals: [[lo, hi], ...]}
nlohmann::json to_json(const FeasibleSet& fs);

nlohmann::json to_json(const ProbabilityReport& report);
nlohmann::json to_json(const MonteCarloEstimate& mc);
nlohmann::json to_json(const DmrsRecommendation& r);
nlohmann::json to_json(const ScsiAccuracy& a);
nlohmann::json to_json(const IntervalSet& set);

}  // namespace pilotcoex
