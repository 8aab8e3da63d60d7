#include "pilotcoex/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace pilotcoex {

namespace {

void require_m(const Scenario& s, int m, int lowest) {
    if (m < lowest || m > s.n_p()) {
        throw std::out_of_range("m = " + std::to_string(m) + " outside [" + std::to_string(lowest) +
                                ", " + std::to_string(s.n_p()) + "]");
    }
}

double upper_bound(const Scenario& s, int m) {
    return std::min(1.0, s.paths() * s.n_p() * s.effective_width() / (m * s.t_rep()));
}

}  // namespace

Bounds bounds_m1(const Scenario& s) {
    const double upper = upper_bound(s, 1);
    if (s.t_rep() <= s.t_csi()) {
        return {s.t_ofdm() / s.t_pil(), upper};
    }
    return {s.n_p() * s.t_ofdm() / s.t_rep(), upper};
}

Bounds bounds_m(const Scenario& s, int m) {
    require_m(s, m, 2);
    return {0.0, upper_bound(s, m)};
}

Bounds bounds(const Scenario& s, int m) {
    require_m(s, m, 1);
    return m == 1 ? bounds_m1(s) : bounds_m(s, m);
}

std::string_view label(SpecialCase c) noexcept {
    switch (c) {
        case SpecialCase::Saturated: return "saturated";
        case SpecialCase::PilotMultiple: return "theorem1";
        case SpecialCase::SinglePass: return "corollary2";
    }
    return "";
}

std::optional<ClosedForm> exact_special_case(const Scenario& s, int m) {
    if (s.saturated()) return ClosedForm{1.0, SpecialCase::Saturated};
    if (m != 1 || !s.baseline()) return std::nullopt;

    const double ratio = s.t_rep() / s.t_pil();
    const double k = std::round(ratio);
    const bool within_window = s.t_rep() <= s.t_csi() * (1.0 + 1e-12);
    if (within_window && k >= 1.0 && k <= s.n_p() && std::abs(ratio - k) <= 1e-9 * k) {
        return ClosedForm{s.t_ofdm() / s.t_pil(), SpecialCase::PilotMultiple};
    }
    if (s.t_rep() >= s.t_csi()) {
        return ClosedForm{s.n_p() * s.t_ofdm() / s.t_rep(), SpecialCase::SinglePass};
    }
    return std::nullopt;
}

FeasibleSet feasible_set(int m, int n_p, double t_pil, double t_ofdm, double trep_min,
                         double trep_max) {
    if (m < 2) throw std::invalid_argument("feasible set needs m >= 2");
    if (n_p < 2) throw std::invalid_argument("feasible set needs n_p >= 2");
    if (!(t_pil > 0.0) || !(t_ofdm > 0.0)) {
        throw std::invalid_argument("feasible set needs t_pil > 0 and t_ofdm > 0");
    }
    if (!(trep_min < trep_max)) throw std::invalid_argument("empty query range");

    FeasibleSet out{.m = m,
                    .n_p = n_p,
                    .t_pil = t_pil,
                    .t_ofdm = t_ofdm,
                    .trep_min = trep_min,
                    .trep_max = trep_max,
                    .k_max = (n_p - 1) / (m - 1),
                    .q_max = 0,
                    .set = {}};

    const double cut = std::max(trep_min, t_ofdm);
    if (out.k_max < 1 || cut >= trep_max) return out;

    // Equally spaced hits on pilots k apart by every q-th pulse survive
    // m - 1 steps only while the per-step drift stays inside t_ofdm / (m - 1).
    const double steps = m - 1;
    std::vector<Interval> pieces;
    for (int q = 1;; ++q) {
        const double top = (steps * out.k_max * t_pil + t_ofdm) / (steps * q);
        if (top <= cut) {
            out.q_max = q;
            break;
        }
        for (int k = 1; k <= out.k_max; ++k) {
            const double lo = (steps * k * t_pil - t_ofdm) / (steps * q);
            const double hi = (steps * k * t_pil + t_ofdm) / (steps * q);
            const double a = std::max(lo, cut);
            const double b = std::min(hi, trep_max);
            if (a < b) pieces.push_back({a, b});
        }
    }
    out.set = IntervalSet::normalize(pieces);
    return out;
}

std::string_view label(Support s) noexcept {
    switch (s) {
        case Support::Zero: return "zero";
        case Support::NonZero: return "nonzero";
        case Support::Boundary: return "boundary";
        case Support::Undetermined: return "undetermined";
    }
    return "";
}

Support predict_nonzero(const Scenario& s, int m) {
    require_m(s, m, 1);
    if (s.t_rep() <= s.effective_width() || m == 1) return Support::NonZero;

    // A broadened pulse widens every hit window, but the widening of the
    // first pulse falls before t_f = 0 and is lost. Hits are therefore only
    // guaranteed with the bare symbol width and only excluded with the
    // broadened one; in between the answer is left open.
    const double half_span = std::max(1e-6 * s.t_rep(), 1e-9);
    const auto near = [&](double width) {
        return feasible_set(m, s.n_p(), s.t_pil(), width, s.t_rep() - half_span,
                            s.t_rep() + half_span)
            .set;
    };
    const IntervalSet bare = near(s.t_ofdm());
    const IntervalSet wide = s.t_pulse() > 0.0 ? near(s.effective_width()) : bare;
    if (std::min(bare.distance_to_boundary(s.t_rep()), wide.distance_to_boundary(s.t_rep())) <=
        kEndpointTolerance) {
        return Support::Boundary;
    }
    if (bare.contains(s.t_rep(), 0.0)) return Support::NonZero;
    if (wide.contains(s.t_rep(), 0.0) || !s.echo_delays().empty()) return Support::Undetermined;
    return Support::Zero;
}

}  // namespace pilotcoex
