#include "pilotcoex/interval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace pilotcoex {

IntervalSet::IntervalSet(std::initializer_list<Interval> raw)
    : IntervalSet(normalize(std::span<const Interval>(raw.begin(), raw.size()))) {}

IntervalSet IntervalSet::normalize(std::span<const Interval> raw) {
    std::vector<Interval> sorted;
    sorted.reserve(raw.size());
    for (const Interval& iv : raw) {
        if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi)) {
            throw std::invalid_argument("interval endpoints must be finite");
        }
        if (iv.lo > iv.hi) {
            throw std::invalid_argument("interval has lo > hi: [" + std::to_string(iv.lo) + ", " +
                                        std::to_string(iv.hi) + "]");
        }
        sorted.push_back(iv);
    }
    std::sort(sorted.begin(), sorted.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });

    std::vector<Interval> merged;
    for (const Interval& iv : sorted) {
        if (!merged.empty() && iv.lo <= merged.back().hi + kEndpointTolerance) {
            merged.back().hi = std::max(merged.back().hi, iv.hi);
        } else {
            merged.push_back(iv);
        }
    }
    std::erase_if(merged, [](const Interval& iv) { return iv.width() < kEndpointTolerance; });
    return IntervalSet(Trusted{}, std::move(merged));
}

double IntervalSet::measure() const noexcept {
    double total = 0.0;
    for (const Interval& iv : intervals_) total += iv.width();
    return total;
}

bool IntervalSet::contains(double x, double tol) const noexcept {
    // First interval whose hi is not left of x.
    auto it = std::lower_bound(intervals_.begin(), intervals_.end(), x - tol,
                               [](const Interval& iv, double v) { return iv.hi < v; });
    return it != intervals_.end() && it->contains(x, tol);
}

double IntervalSet::distance_to_boundary(double x) const noexcept {
    double best = std::numeric_limits<double>::infinity();
    for (const Interval& iv : intervals_) {
        best = std::min({best, std::abs(x - iv.lo), std::abs(x - iv.hi)});
    }
    return best;
}

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> out;
    auto ia = a.intervals().begin();
    auto ib = b.intervals().begin();
    while (ia != a.intervals().end() && ib != b.intervals().end()) {
        const double lo = std::max(ia->lo, ib->lo);
        const double hi = std::min(ia->hi, ib->hi);
        if (hi - lo >= kEndpointTolerance) out.push_back({lo, hi});
        if (ia->hi < ib->hi) {
            ++ia;
        } else {
            ++ib;
        }
    }
    // Pieces of disjoint, sorted inputs are already sorted and disjoint.
    return IntervalSet(IntervalSet::Trusted{}, std::move(out));
}

IntervalSet unite(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> all(a.intervals().begin(), a.intervals().end());
    all.insert(all.end(), b.intervals().begin(), b.intervals().end());
    return IntervalSet::normalize(all);
}

IntervalSet clip(const IntervalSet& a, Interval window) {
    return intersect(a, IntervalSet{window});
}

IntervalSet shift(const IntervalSet& a, double delta) {
    std::vector<Interval> out;
    out.reserve(a.size());
    for (const Interval& iv : a.intervals()) out.push_back(iv.shifted(delta));
    return IntervalSet::normalize(out);
}

IntervalSet complement_within(const IntervalSet& a, Interval window) {
    std::vector<Interval> gaps;
    double cursor = window.lo;
    const IntervalSet inside = clip(a, window);
    for (const Interval& iv : inside.intervals()) {
        if (iv.lo > cursor) gaps.push_back({cursor, iv.lo});
        cursor = std::max(cursor, iv.hi);
    }
    if (window.hi > cursor) gaps.push_back({cursor, window.hi});
    return IntervalSet::normalize(gaps);
}

}  // namespace pilotcoex
