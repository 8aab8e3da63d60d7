#include "pilotcoex/engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace pilotcoex {

namespace {

Interval arrival_domain(const Scenario& s) { return {0.0, std::min(s.t_rep(), s.t_csi())}; }

void require_m(const Scenario& s, int m) {
    if (m < 1 || m > s.n_p()) {
        throw std::out_of_range("m = " + std::to_string(m) + " outside [1, " +
                                std::to_string(s.n_p()) + "]");
    }
}

}  // namespace

IntervalSet pilot_hit_set(const Scenario& s, PilotIndex l) {
    pilot_interval(s, l);  // range check
    const Interval domain = arrival_domain(s);

    std::vector<double> delays{0.0};
    delays.insert(delays.end(), s.echo_delays().begin(), s.echo_delays().end());

    std::vector<Interval> windows;
    for (double delay : delays) {
        // Pulses whose window can reach the domain; one extra index on each
        // side absorbs rounding, clipping discards it.
        const double start = l.value * s.t_pil() - delay;
        const long long first = static_cast<long long>(
            std::ceil((start - s.t_pulse() - domain.hi) / s.t_rep())) - 1;
        const long long last =
            static_cast<long long>(std::floor((start + s.t_ofdm()) / s.t_rep())) + 1;
        for (long long j = std::max(0LL, first); j <= last; ++j) {
            const Interval w = hit_window(s, l, static_cast<int>(j), delay);
            const Interval c{std::max(w.lo, domain.lo), std::min(w.hi, domain.hi)};
            if (c.lo < c.hi) windows.push_back(c);
        }
    }
    return IntervalSet::normalize(windows);
}

double CoverageProfile::measure_at_least(int m) const noexcept {
    double total = 0.0;
    for (const CoverageSegment& seg : segments) {
        if (seg.count >= m) total += seg.span.width();
    }
    return total;
}

CoverageProfile coverage_profile(const Scenario& s) {
    CoverageProfile profile{.domain = arrival_domain(s), .segments = {}};
    if (s.saturated()) {
        profile.segments.push_back({profile.domain, s.n_p()});
        return profile;
    }

    // Each hit set is normalized, so one pilot never contributes
    // overlapping +1 events and the running sum counts distinct pilots.
    std::vector<std::pair<double, int>> events;
    for (int l = 0; l < s.n_p(); ++l) {
        const IntervalSet hits = pilot_hit_set(s, PilotIndex{l});
        for (const Interval& iv : hits.intervals()) {
            events.emplace_back(iv.lo, +1);
            events.emplace_back(iv.hi, -1);
        }
    }
    std::sort(events.begin(), events.end());

    std::vector<CoverageSegment> raw;
    double cursor = profile.domain.lo;
    int count = 0;
    for (const auto& [pos, delta] : events) {
        if (pos - cursor >= kEndpointTolerance) {
            raw.push_back({{cursor, pos}, count});
            cursor = pos;
        }
        count += delta;
    }
    if (profile.domain.hi - cursor >= kEndpointTolerance || raw.empty()) {
        raw.push_back({{cursor, profile.domain.hi}, count});
    }
    raw.back().span.hi = profile.domain.hi;

    for (const CoverageSegment& seg : raw) {
        if (!profile.segments.empty() && profile.segments.back().count == seg.count) {
            profile.segments.back().span.hi = seg.span.hi;
        } else {
            profile.segments.push_back(seg);
        }
    }
    return profile;
}

double exact_probability(const Scenario& s, const CoverageProfile& profile, int m) {
    require_m(s, m);
    return std::clamp(profile.measure_at_least(m) / s.t_rep(), 0.0, 1.0);
}

double exact_probability(const Scenario& s, int m) {
    return exact_probability(s, coverage_profile(s), m);
}

ProbabilityReport prob_at_least(const Scenario& s, const CoverageProfile& profile, int m) {
    const Bounds b = bounds(s, m);
    return ProbabilityReport{.m = m,
                             .p_exact = exact_probability(s, profile, m),
                             .lower_bound = b.lower,
                             .upper_bound = b.upper,
                             .closed_form = exact_special_case(s, m),
                             .support = predict_nonzero(s, m)};
}

ProbabilityReport prob_at_least(const Scenario& s, int m) {
    return prob_at_least(s, coverage_profile(s), m);
}

}  // namespace pilotcoex
