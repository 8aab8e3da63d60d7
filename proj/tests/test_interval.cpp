#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <random>
#include <utility>
#include <vector>

#include "oracle.hpp"
#include "pilotcoex/interval.hpp"

using namespace pilotcoex;
using Catch::Approx;

TEST_CASE("normalize sorts, merges and drops slivers") {
    const IntervalSet s{{0.5, 0.7}, {0.0, 0.2}, {0.1, 0.3}, {1.0, 1.0}};
    REQUIRE(s.size() == 2);
    CHECK(s.intervals()[0] == Interval{0.0, 0.3});
    CHECK(s.intervals()[1] == Interval{0.5, 0.7});
    CHECK(s.measure() == Approx(0.5));
}

TEST_CASE("touching intervals merge") {
    const IntervalSet s{{0.0, 0.5}, {0.5, 1.0}};
    REQUIRE(s.size() == 1);
    CHECK(s.intervals()[0] == Interval{0.0, 1.0});
}

TEST_CASE("malformed intervals are rejected") {
    CHECK_THROWS_AS((IntervalSet{{1.0, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS((IntervalSet{{0.0, std::numeric_limits<double>::infinity()}}), std::invalid_argument);
    CHECK_THROWS_AS((IntervalSet{{std::nan(""), 1.0}}), std::invalid_argument);
}

TEST_CASE("set operations on small examples") {
    const IntervalSet a{{0.0, 0.5}};
    const IntervalSet b{{0.2, 0.7}};
    CHECK(intersect(a, b) == IntervalSet{{0.2, 0.5}});
    CHECK(unite(a, b) == IntervalSet{{0.0, 0.7}});
    CHECK(clip(b, {0.0, 0.6}) == IntervalSet{{0.2, 0.6}});
    CHECK(shift(a, 1.0) == IntervalSet{{1.0, 1.5}});
    CHECK(complement_within(a, {0.0, 1.0}) == IntervalSet{{0.5, 1.0}});
    CHECK(complement_within(IntervalSet{}, {0.0, 1.0}) == IntervalSet{{0.0, 1.0}});
    CHECK(intersect(a, IntervalSet{}).empty());
}

TEST_CASE("contains and boundary distance") {
    const IntervalSet s{{0.0, 1.0}, {2.0, 3.0}};
    CHECK(s.contains(0.5));
    CHECK(s.contains(1.0));
    CHECK_FALSE(s.contains(1.5));
    CHECK(s.contains(3.0 + 1e-13));
    CHECK(s.distance_to_boundary(0.9) == Approx(0.1));
    CHECK(s.distance_to_boundary(1.6) == Approx(0.4));
}

namespace {

std::vector<Interval> random_intervals(std::mt19937_64& gen, int n) {
    std::uniform_real_distribution<double> pos(0.0, 10.0), len(0.0, 1.5);
    std::vector<Interval> out;
    for (int i = 0; i < n; ++i) {
        const double lo = pos(gen);
        out.push_back({lo, lo + len(gen)});
    }
    return out;
}

std::vector<std::pair<double, double>> pairs(const std::vector<Interval>& v) {
    std::vector<std::pair<double, double>> p;
    for (const Interval& iv : v) p.emplace_back(iv.lo, iv.hi);
    return p;
}

}  // namespace

TEST_CASE("random sets: membership and inclusion-exclusion") {
    std::mt19937_64 gen(42);
    std::uniform_real_distribution<double> probe(-1.0, 12.0);
    for (int trial = 0; trial < 200; ++trial) {
        const auto ra = random_intervals(gen, 1 + trial % 7);
        const auto rb = random_intervals(gen, 1 + trial % 5);
        const IntervalSet a = IntervalSet::normalize(ra);
        const IntervalSet b = IntervalSet::normalize(rb);
        const IntervalSet i = intersect(a, b);
        const IntervalSet u = unite(a, b);
        const auto pa = pairs(ra);
        const auto pb = pairs(rb);

        CHECK(u.measure() == Approx(a.measure() + b.measure() - i.measure()).margin(1e-9));
        CHECK(complement_within(a, {-1.0, 12.0}).measure() ==
              Approx(13.0 - a.measure()).margin(1e-9));

        for (int k = 0; k < 1000; ++k) {
            const double x = probe(gen);
            if (a.distance_to_boundary(x) < 1e-9 || b.distance_to_boundary(x) < 1e-9) continue;
            const bool in_a = oracle::in_any(pa, x);
            const bool in_b = oracle::in_any(pb, x);
            REQUIRE(a.contains(x) == in_a);
            REQUIRE(i.contains(x) == (in_a && in_b));
            REQUIRE(u.contains(x) == (in_a || in_b));
        }

        const auto iv = a.intervals();
        for (std::size_t k = 1; k < iv.size(); ++k) REQUIRE(iv[k - 1].hi < iv[k].lo);
    }
}
