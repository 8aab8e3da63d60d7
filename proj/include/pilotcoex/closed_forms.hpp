#pragma once

#include <optional>
#include <string_view>

#include "pilotcoex/interval.hpp"
#include "pilotcoex/scenario.hpp"

namespace pilotcoex {

struct Bounds {
    double lower = 0.0;
    double upper = 1.0;
};

/// Bounds on P[M >= 1].
///
/// For t_rep <= t_csi the lower bound is the pilot duty cycle t_ofdm/t_pil
/// and the upper bound is min(1, p n_p (t_ofdm + t_pulse) / t_rep), p being
/// the number of propagation paths. For t_rep > t_csi only one pulse can
/// land in the window and the value is n_p t_ofdm / t_rep for the baseline
/// model; broadening and echoes only lift the upper side.
///
/// Lower bounds stay on the un-broadened t_ofdm: widening the pulse adds
/// hits, and the first pilot's widened window is cut at t_f = 0, so the
/// widened duty cycle is not a valid lower bound.
Bounds bounds_m1(const Scenario& s);

/// Bounds on P[M >= m] for 2 <= m <= n_p: [0, min(1, p n_p (t_ofdm + t_pulse) / (m t_rep))].
/// Throws std::out_of_range for m outside [2, n_p].
Bounds bounds_m(const Scenario& s, int m);

/// Dispatches to bounds_m1 / bounds_m. Throws std::out_of_range for m outside [1, n_p].
Bounds bounds(const Scenario& s, int m);

enum class SpecialCase {
    Saturated,     ///< t_rep <= t_ofdm: every symbol is hit
    PilotMultiple, ///< t_rep = k t_pil, k <= n_p: P[M >= 1] = t_ofdm / t_pil
    SinglePass,    ///< t_rep >= t_csi: P[M >= 1] = n_p t_ofdm / t_rep
};

/// Wire label of a special case: "saturated", "theorem1" or "corollary2".
std::string_view label(SpecialCase c) noexcept;

struct ClosedForm {
    double value = 0.0;
    SpecialCase kind = SpecialCase::Saturated;
};

/// Exact closed-form value when one applies. The pilot-multiple and
/// single-pass forms are only exact for the baseline model (no broadening,
/// no echoes); the saturated form holds for every model.
std::optional<ClosedForm> exact_special_case(const Scenario& s, int m);

/// Truncated union of the repetition-interval neighbourhoods
/// (((m-1) k t_pil -/+ t_ofdm) / ((m-1) q)) for k = 1..k_max, q = 1..q_max-1
/// over which at least m pilots can be hit.
struct FeasibleSet {
    int m = 0;
    int n_p = 0;
    double t_pil = 0.0;
    double t_ofdm = 0.0;
    double trep_min = 0.0;
    double trep_max = 0.0;
    int k_max = 0;
    /// First q whose intervals all lie below max(trep_min, t_ofdm); larger
    /// q cannot contribute to the query range.
    int q_max = 0;
    IntervalSet set;
};

/// Throws std::invalid_argument if m < 2, n_p < 2, non-positive durations
/// or trep_min >= trep_max. Ranges at or below t_ofdm give an empty set.
FeasibleSet feasible_set(int m, int n_p, double t_pil, double t_ofdm, double trep_min,
                         double trep_max);

enum class Support {
    Zero,
    NonZero,
    Boundary,      ///< t_rep within tolerance of a feasible-set endpoint
    Undetermined,  ///< echoes present, or only the broadened pulse reaches m pilots
};

std::string_view label(Support s) noexcept;

/// Predicts whether P[M >= m] > 0 without integrating. Throws
/// std::out_of_range for m outside [1, n_p].
Support predict_nonzero(const Scenario& s, int m);

}  // namespace pilotcoex
