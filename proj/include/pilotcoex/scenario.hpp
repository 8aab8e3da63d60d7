#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "pilotcoex/interval.hpp"

namespace pilotcoex {

/// Raised when a scenario violates one of its field constraints. The
/// message names the violated constraint.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raw coexistence scenario, all durations in seconds.
struct ScenarioConfig {
    double t_ofdm = 0.0;              ///< OFDM symbol duration
    double t_pil = 0.0;               ///< pilot spacing
    int n_p = 0;                      ///< pilots per estimation window
    double t_rep = 0.0;               ///< radar pulse repetition interval
    double t_pulse = 0.0;             ///< broadened pulse width, 0 = impulse
    std::vector<double> echo_delays;  ///< specular echo delays; direct path implicit

    friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

struct PilotIndex {
    int value = 0;
};

/// A ScenarioConfig that passed validation, with derived quantities.
class Scenario {
public:
    const ScenarioConfig& config() const noexcept { return config_; }

    double t_ofdm() const noexcept { return config_.t_ofdm; }
    double t_pil() const noexcept { return config_.t_pil; }
    int n_p() const noexcept { return config_.n_p; }
    double t_rep() const noexcept { return config_.t_rep; }
    double t_pulse() const noexcept { return config_.t_pulse; }
    const std::vector<double>& echo_delays() const noexcept { return config_.echo_delays; }

    /// Estimation window length n_p * t_pil.
    double t_csi() const noexcept { return t_csi_; }
    /// Maximum number of pulses in the window, ceil(t_csi / t_rep).
    int n_r() const noexcept { return n_r_; }
    /// Number of propagation paths (direct + echoes).
    int paths() const noexcept { return 1 + static_cast<int>(config_.echo_delays.size()); }
    /// Width of the hit window per pilot: t_ofdm + t_pulse.
    double effective_width() const noexcept { return config_.t_ofdm + config_.t_pulse; }

    bool saturated() const noexcept { return config_.t_rep <= config_.t_ofdm; }
    /// No pulse broadening and no echoes.
    bool baseline() const noexcept { return config_.t_pulse == 0.0 && config_.echo_delays.empty(); }

    /// Non-fatal observations (e.g. t_pil not a multiple of t_ofdm).
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }

private:
    friend Scenario validate(ScenarioConfig config);
    Scenario() = default;

    ScenarioConfig config_;
    double t_csi_ = 0.0;
    int n_r_ = 0;
    std::vector<std::string> warnings_;
};

/// Checks every field constraint and derives t_csi and n_r. Throws
/// ConfigError. t_rep <= t_ofdm is accepted (saturated regime).
Scenario validate(ScenarioConfig config);

/// [l * t_pil, l * t_pil + t_ofdm]. Throws std::out_of_range.
Interval pilot_interval(const Scenario& s, PilotIndex l);

/// First-pulse arrival times t_f for which pulse j on the path with the
/// given echo delay overlaps pilot l:
/// [l t_pil - j t_rep - delay - t_pulse, l t_pil + t_ofdm - j t_rep - delay].
Interval hit_window(const Scenario& s, PilotIndex l, int j, double echo_delay);

/// ceil(x) that treats values within a relative 1e-9 of an integer as
/// that integer, so 5e-3 / 1e-3 rounds to 5 and not 6.
long long tolerant_ceil(double x);

}  // namespace pilotcoex
