#pragma once

#include <initializer_list>
#include <span>
#include <vector>

namespace pilotcoex {

/// Absolute endpoint tolerance in seconds. Gaps narrower than this are
/// merged; isolated intervals narrower than this are dropped.
inline constexpr double kEndpointTolerance = 1e-12;

/// Closed real interval [lo, hi]. Open and closed endpoints are not
/// distinguished; single points carry no measure.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double width() const noexcept { return hi - lo; }
    bool contains(double x, double tol = kEndpointTolerance) const noexcept {
        return x >= lo - tol && x <= hi + tol;
    }
    Interval shifted(double delta) const noexcept { return {lo + delta, hi + delta}; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Sorted, pairwise disjoint, non-adjacent union of intervals.
///
/// Every constructor normalizes, so an IntervalSet can never hold an
/// unsorted or overlapping list.
class IntervalSet {
public:
    IntervalSet() = default;
    IntervalSet(std::initializer_list<Interval> raw);

    /// Sorts and merges raw intervals. Throws std::invalid_argument on
    /// lo > hi or non-finite endpoints.
    static IntervalSet normalize(std::span<const Interval> raw);

    std::span<const Interval> intervals() const noexcept { return intervals_; }
    std::size_t size() const noexcept { return intervals_.size(); }
    bool empty() const noexcept { return intervals_.empty(); }

    double measure() const noexcept;

    /// Membership with the endpoint tolerance; results for points within
    /// tolerance of an endpoint are tolerance-dependent.
    bool contains(double x, double tol = kEndpointTolerance) const noexcept;

    /// Smallest distance from x to any interval endpoint (infinity if empty).
    double distance_to_boundary(double x) const noexcept;

    friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

private:
    struct Trusted {};
    IntervalSet(Trusted, std::vector<Interval> sorted_disjoint)
        : intervals_(std::move(sorted_disjoint)) {}

    std::vector<Interval> intervals_;

    friend IntervalSet intersect(const IntervalSet&, const IntervalSet&);
};

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);
IntervalSet unite(const IntervalSet& a, const IntervalSet& b);
IntervalSet clip(const IntervalSet& a, Interval window);
IntervalSet shift(const IntervalSet& a, double delta);

/// window \ a, normalized.
IntervalSet complement_within(const IntervalSet& a, Interval window);

}  // namespace pilotcoex
