#pragma once

#include <optional>
#include <vector>

#include "pilotcoex/closed_forms.hpp"
#include "pilotcoex/interval.hpp"
#include "pilotcoex/scenario.hpp"

namespace pilotcoex {

/// First-pulse arrival times t_f in [0, min(t_rep, t_csi)] for which pilot l
/// is hit by at least one pulse j >= 0 on any propagation path.
IntervalSet pilot_hit_set(const Scenario& s, PilotIndex l);

struct CoverageSegment {
    Interval span;
    int count = 0;  ///< distinct pilots hit for any t_f inside span
};

/// Partition of the arrival-time domain into maximal segments of constant
/// hit count. Adjacent segments always differ in count.
struct CoverageProfile {
    Interval domain;
    std::vector<CoverageSegment> segments;

    /// Total length of segments whose count is at least m.
    double measure_at_least(int m) const noexcept;
};

CoverageProfile coverage_profile(const Scenario& s);

struct ProbabilityReport {
    int m = 1;
    double p_exact = 0.0;
    double lower_bound = 0.0;
    double upper_bound = 1.0;
    std::optional<ClosedForm> closed_form;
    Support support = Support::NonZero;

    bool predicted_nonzero() const noexcept { return support == Support::NonZero; }
};

/// Values of p_exact above this are treated as non-zero.
inline constexpr double kNonZeroThreshold = 1e-12;

/// Exact P[M >= m]: the measure of arrival times hitting at least m pilots,
/// divided by t_rep. Throws std::out_of_range for m outside [1, n_p].
double exact_probability(const Scenario& s, int m);
double exact_probability(const Scenario& s, const CoverageProfile& profile, int m);

/// Exact probability together with bounds, any applicable closed form and
/// the support prediction.
ProbabilityReport prob_at_least(const Scenario& s, int m);
ProbabilityReport prob_at_least(const Scenario& s, const CoverageProfile& profile, int m);

}  // namespace pilotcoex
