#pragma once

#include <string_view>

#include "pilotcoex/interval.hpp"
#include "pilotcoex/scenario.hpp"

namespace pilotcoex {

/// Demodulation pilot spacing that places the radar on a local minimum of
/// P[M >= 1] while respecting the coherence time.
struct DmrsRecommendation {
    int k_opt = 1;
    double t_dmrs = 0.0;          ///< t_rep / k_opt
    double p_interference = 0.0;  ///< k_opt t_ofdm / t_rep
    bool coherence_ok = false;    ///< t_dmrs <= t_coh
};

/// k_opt = ceil(t_rep / t_coh), t_dmrs = t_rep / k_opt. Throws
/// std::invalid_argument for non-positive inputs or t_rep <= t_ofdm.
DmrsRecommendation recommend_dmrs(double t_rep, double t_coh, double t_ofdm);

enum class FeedbackScheme {
    Min,  ///< minimum over the window: accurate iff any pilot is hit
    Avg,  ///< window average: accurate iff at least ceil(n_p / 2) pilots are hit
};

std::string_view label(FeedbackScheme s) noexcept;

/// Hit count a scheme needs before its feedback reflects the interference
/// channel: 1 for Min, ceil(n_p / 2) for Avg.
int feedback_threshold(FeedbackScheme scheme, int n_p) noexcept;

struct ScsiAccuracy {
    FeedbackScheme scheme = FeedbackScheme::Min;
    int threshold_m = 1;
    double p_accurate = 0.0;
};

ScsiAccuracy scsi_accuracy(const Scenario& s, FeedbackScheme scheme);

/// Repetition intervals in trep_range, above t_ofdm, where window-averaged
/// feedback never sees a hit pilot. Empty when ceil(n_p / 2) == 1.
/// Throws std::invalid_argument for n_p < 2.
IntervalSet blind_region(double t_pil, double t_ofdm, int n_p, Interval trep_range);

}  // namespace pilotcoex
