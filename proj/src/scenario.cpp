#include "pilotcoex/scenario.hpp"

#include <algorithm>
#include <cmath>

namespace pilotcoex {

namespace {

void require(bool ok, const char* constraint) {
    if (!ok) throw ConfigError(std::string("invalid scenario: ") + constraint);
}

bool finite(double x) { return std::isfinite(x); }

}  // namespace

long long tolerant_ceil(double x) {
    const double nearest = std::round(x);
    if (std::abs(x - nearest) <= 1e-9 * std::max(1.0, std::abs(nearest))) {
        return static_cast<long long>(nearest);
    }
    return static_cast<long long>(std::ceil(x));
}

Scenario validate(ScenarioConfig config) {
    require(finite(config.t_ofdm) && config.t_ofdm > 0.0, "t_ofdm > 0");
    require(finite(config.t_pil), "t_pil finite");
    require(config.t_pil >= config.t_ofdm, "t_pil >= t_ofdm");
    require(config.n_p >= 1, "n_p >= 1");
    require(finite(config.t_rep) && config.t_rep > 0.0, "t_rep > 0");
    require(finite(config.t_pulse) && config.t_pulse >= 0.0, "t_pulse >= 0");
    for (std::size_t i = 0; i < config.echo_delays.size(); ++i) {
        const double d = config.echo_delays[i];
        require(finite(d) && d >= 0.0, "echo_delays >= 0");
        if (i > 0) require(d > config.echo_delays[i - 1], "echo_delays strictly increasing");
    }

    Scenario s;
    s.config_ = std::move(config);
    s.t_csi_ = s.config_.n_p * s.config_.t_pil;
    s.n_r_ = static_cast<int>(tolerant_ceil(s.t_csi_ / s.config_.t_rep));

    const double ratio = s.config_.t_pil / s.config_.t_ofdm;
    if (std::abs(ratio - std::round(ratio)) > 1e-9 * ratio) {
        s.warnings_.push_back("t_pil is not an integer multiple of t_ofdm");
    }
    return s;
}

Interval pilot_interval(const Scenario& s, PilotIndex l) {
    if (l.value < 0 || l.value >= s.n_p()) {
        throw std::out_of_range("pilot index " + std::to_string(l.value) + " outside [0, " +
                                std::to_string(s.n_p() - 1) + "]");
    }
    const double start = l.value * s.t_pil();
    return {start, start + s.t_ofdm()};
}

Interval hit_window(const Scenario& s, PilotIndex l, int j, double echo_delay) {
    const double offset = l.value * s.t_pil() - j * s.t_rep() - echo_delay;
    return {offset - s.t_pulse(), offset + s.t_ofdm()};
}

}  // namespace pilotcoex
