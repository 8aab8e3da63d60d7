#include "pilotcoex/advisor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pilotcoex/closed_forms.hpp"
#include "pilotcoex/engine.hpp"

namespace pilotcoex {

DmrsRecommendation recommend_dmrs(double t_rep, double t_coh, double t_ofdm) {
    if (!(t_rep > 0.0) || !(t_coh > 0.0) || !(t_ofdm > 0.0) || !std::isfinite(t_rep) ||
        !std::isfinite(t_coh)) {
        throw std::invalid_argument("recommend_dmrs: inputs must be positive and finite");
    }
    if (t_rep <= t_ofdm) {
        throw std::invalid_argument("recommend_dmrs: t_rep <= t_ofdm, every symbol is hit");
    }

    int k = static_cast<int>(std::ceil(t_rep / t_coh));
    // The rounded quotient can land exactly on an integer one ulp short.
    while (t_rep / k > t_coh) ++k;

    DmrsRecommendation r;
    r.k_opt = k;
    r.t_dmrs = t_rep / k;
    r.p_interference = std::min(1.0, k * t_ofdm / t_rep);
    r.coherence_ok = r.t_dmrs <= t_coh;
    return r;
}

std::string_view label(FeedbackScheme s) noexcept {
    return s == FeedbackScheme::Min ? "min" : "avg";
}

int feedback_threshold(FeedbackScheme scheme, int n_p) noexcept {
    return scheme == FeedbackScheme::Min ? 1 : std::max(1, (n_p + 1) / 2);
}

ScsiAccuracy scsi_accuracy(const Scenario& s, FeedbackScheme scheme) {
    const int m = feedback_threshold(scheme, s.n_p());
    return {scheme, m, exact_probability(s, m)};
}

IntervalSet blind_region(double t_pil, double t_ofdm, int n_p, Interval trep_range) {
    if (n_p < 2) throw std::invalid_argument("blind_region needs n_p >= 2");
    const int m = feedback_threshold(FeedbackScheme::Avg, n_p);
    const Interval window{std::max(trep_range.lo, t_ofdm), trep_range.hi};
    if (m == 1 || window.hi - window.lo < kEndpointTolerance) return {};

    const FeasibleSet fs = feasible_set(m, n_p, t_pil, t_ofdm, window.lo, window.hi);
    return complement_within(fs.set, window);
}

}  // namespace pilotcoex
