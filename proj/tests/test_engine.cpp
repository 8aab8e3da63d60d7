#include <catch_amalgamated.hpp>

#include <random>

#include "oracle.hpp"
#include "pilotcoex/engine.hpp"

using namespace pilotcoex;
using Catch::Approx;

namespace {

ScenarioConfig cfg(double t_ofdm, double t_pil, int n_p, double t_rep) {
    ScenarioConfig c;
    c.t_ofdm = t_ofdm;
    c.t_pil = t_pil;
    c.n_p = n_p;
    c.t_rep = t_rep;
    return c;
}

}  // namespace

TEST_CASE("pilot hit sets of the hand example") {
    const Scenario s = validate(cfg(0.5, 1, 2, 0.8));
    CHECK(pilot_hit_set(s, {0}) == IntervalSet{{0.0, 0.5}});
    const IntervalSet h1 = pilot_hit_set(s, {1});
    REQUIRE(h1.size() == 1);
    CHECK(h1.intervals()[0].lo == Approx(0.2));
    CHECK(h1.intervals()[0].hi == Approx(0.7));
}

TEST_CASE("pilot hit sets coincide when t_rep = t_pil") {
    const Scenario s = validate(cfg(0.5, 1, 4, 1));
    for (int l = 0; l < 4; ++l) {
        const IntervalSet h = pilot_hit_set(s, {l});
        REQUIRE(h.size() == 1);
        CHECK(h.intervals()[0].lo == Approx(0.0).margin(1e-12));
        CHECK(h.intervals()[0].hi == Approx(0.5));
    }
}

TEST_CASE("pilot hit sets repeat with period k when t_rep = k t_pil") {
    for (int k = 1; k <= 4; ++k) {
        const Scenario s = validate(cfg(71.43e-6, 1e-3, 6, k * 1e-3));
        for (int l = 0; l + k < 6; ++l) {
            const IntervalSet a = pilot_hit_set(s, {l});
            const IntervalSet b = pilot_hit_set(s, {l + k});
            REQUIRE(a.size() == b.size());
            for (std::size_t i = 0; i < a.size(); ++i) {
                CHECK(a.intervals()[i].lo == Approx(b.intervals()[i].lo).margin(1e-12));
                CHECK(a.intervals()[i].hi == Approx(b.intervals()[i].hi).margin(1e-12));
            }
        }
    }
}

TEST_CASE("coverage profile of the hand example") {
    const CoverageProfile p = coverage_profile(validate(cfg(0.5, 1, 2, 0.8)));
    REQUIRE(p.segments.size() == 4);
    const double bounds[5] = {0.0, 0.2, 0.5, 0.7, 0.8};
    const int counts[4] = {1, 2, 1, 0};
    for (int i = 0; i < 4; ++i) {
        CHECK(p.segments[i].span.lo == Approx(bounds[i]).margin(1e-12));
        CHECK(p.segments[i].span.hi == Approx(bounds[i + 1]));
        CHECK(p.segments[i].count == counts[i]);
    }
}

TEST_CASE("coverage profile special shapes") {
    const CoverageProfile sat = coverage_profile(validate(cfg(0.5, 1, 3, 0.4)));
    REQUIRE(sat.segments.size() == 1);
    CHECK(sat.segments[0].count == 3);

    const CoverageProfile single = coverage_profile(validate(cfg(0.1, 1, 1, 3)));
    REQUIRE(single.segments.size() == 2);
    CHECK(single.segments[0].count == 1);
    CHECK(single.segments[0].span.hi == Approx(0.1));
    CHECK(single.segments[1].count == 0);
    CHECK(single.segments[1].span.hi == Approx(1.0));
}

TEST_CASE("coverage profile partitions the domain") {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        ScenarioConfig c = cfg(0.05 + 0.1 * u(gen), 0.0, 1 + trial % 7, 0.0);
        c.t_pil = c.t_ofdm * (1.0 + 5.0 * u(gen));
        c.t_rep = c.t_ofdm + 2.0 * c.n_p * c.t_pil * u(gen);
        if (trial % 3 == 0) {
            c.t_pulse = 0.1 * c.t_ofdm * u(gen);
            c.echo_delays = {c.t_pil * u(gen)};
        }
        const CoverageProfile p = coverage_profile(validate(c));
        REQUIRE_FALSE(p.segments.empty());
        CHECK(p.segments.front().span.lo == p.domain.lo);
        CHECK(p.segments.back().span.hi == Approx(p.domain.hi));
        for (std::size_t i = 1; i < p.segments.size(); ++i) {
            CHECK(p.segments[i].span.lo == Approx(p.segments[i - 1].span.hi).margin(1e-15));
            CHECK(p.segments[i].count != p.segments[i - 1].count);
        }
        // Spot-check segment counts against direct simulation at midpoints.
        for (const CoverageSegment& seg : p.segments) {
            if (seg.span.width() < 1e-9) continue;
            const double mid = 0.5 * (seg.span.lo + seg.span.hi);
            CHECK(seg.count == oracle::pilots_hit(c, mid));
        }
    }
}

TEST_CASE("exact probabilities of the spec examples") {
    const Scenario hand = validate(cfg(0.5, 1, 2, 0.8));
    CHECK(exact_probability(hand, 1) == Approx(0.875).epsilon(1e-12));
    CHECK(exact_probability(hand, 2) == Approx(0.375).epsilon(1e-12));

    CHECK(exact_probability(validate(cfg(71.43e-6, 1e-3, 5, 1e-3)), 1) ==
          Approx(0.07143).epsilon(1e-9));
    CHECK(exact_probability(validate(cfg(71.43e-6, 1e-3, 5, 10e-3)), 1) ==
          Approx(0.035715).epsilon(1e-9));

    CHECK_THROWS_AS(exact_probability(hand, 0), std::out_of_range);
    CHECK_THROWS_AS(exact_probability(hand, 3), std::out_of_range);
}

TEST_CASE("exact engine agrees with the grid oracle") {
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
        ScenarioConfig c = cfg(0.2 + 0.3 * u(gen), 0.0, 1 + trial % 5, 0.0);
        c.t_pil = c.t_ofdm * (1.0 + 3.0 * u(gen));
        c.t_rep = c.t_ofdm + 2.0 * c.n_p * c.t_pil * u(gen);
        if (trial % 4 == 3) {
            c.t_pulse = 0.2 * c.t_ofdm * u(gen);
            c.echo_delays = {0.5 * c.t_pil * u(gen)};
        }
        const Scenario s = validate(c);
        const double step = c.t_rep / 20000.0;
        for (int m = 1; m <= c.n_p; ++m) {
            // Each mis-classified grid cell costs at most step / t_rep.
            const double tol = 2.0 * (2 * c.n_p * (s.n_r() + 2) * s.paths()) / 20000.0;
            CHECK(exact_probability(s, m) == Approx(oracle::grid_probability(c, m, step)).margin(tol));
        }
    }
}

TEST_CASE("prob_at_least fills every report field") {
    const ProbabilityReport r = prob_at_least(validate(cfg(71.43e-6, 1e-3, 5, 1e-3)), 1);
    CHECK(r.m == 1);
    CHECK(r.lower_bound == Approx(0.07143));
    REQUIRE(r.closed_form);
    CHECK(r.closed_form->kind == SpecialCase::PilotMultiple);
    CHECK(r.closed_form->value == Approx(r.p_exact).epsilon(1e-9));
    CHECK(r.predicted_nonzero());

    const ProbabilityReport none = prob_at_least(validate(cfg(71.43e-6, 1e-3, 5, 1.5e-3)), 5);
    CHECK(none.p_exact == 0.0);
    CHECK(none.support == Support::Zero);
    CHECK_FALSE(none.closed_form);
}

TEST_CASE("probability is monotone in m and bounded") {
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 300; ++trial) {
        ScenarioConfig c = cfg(20e-6 + 80e-6 * u(gen), 0.0, 1 + trial % 8, 0.0);
        c.t_pil = c.t_ofdm * (1.0 + 19.0 * u(gen));
        c.t_rep = c.t_ofdm * 0.5 + 3.0 * c.n_p * c.t_pil * u(gen);
        const Scenario s = validate(c);
        const CoverageProfile profile = coverage_profile(s);
        double previous = 1.0;
        for (int m = 1; m <= c.n_p; ++m) {
            const ProbabilityReport r = prob_at_least(s, profile, m);
            CHECK(r.p_exact <= previous + 1e-12);
            CHECK(r.p_exact >= r.lower_bound - 1e-9);
            CHECK(r.p_exact <= r.upper_bound + 1e-9);
            if (s.saturated()) CHECK(r.p_exact == 1.0);
            previous = r.p_exact;
        }
    }
}
