#include <catch_amalgamated.hpp>

#include "pilotcoex/scenario.hpp"

using namespace pilotcoex;
using Catch::Approx;
using Catch::Matchers::ContainsSubstring;

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

TEST_CASE("validate derives t_csi and n_r") {
    const Scenario a = validate(cfg(71.43e-6, 1e-3, 5, 2e-3));
    CHECK(a.t_csi() == Approx(5e-3));
    CHECK(a.n_r() == 3);

    const Scenario b = validate(cfg(0.5, 1, 2, 0.8));
    CHECK(b.t_csi() == Approx(2.0));
    CHECK(b.n_r() == 3);

    // 5 ms / 1 ms is not exactly 5 in floating point; the ceiling must not round up.
    CHECK(validate(cfg(71.43e-6, 1e-3, 5, 1e-3)).n_r() == 5);
}

TEST_CASE("validate names the violated constraint") {
    CHECK_THROWS_WITH(validate(cfg(1, 0.5, 2, 1)), ContainsSubstring("t_pil"));
    CHECK_THROWS_WITH(validate(cfg(0, 1, 2, 1)), ContainsSubstring("t_ofdm"));
    CHECK_THROWS_WITH(validate(cfg(0.5, 1, 0, 1)), ContainsSubstring("n_p"));
    CHECK_THROWS_WITH(validate(cfg(0.5, 1, 2, 0)), ContainsSubstring("t_rep"));

    ScenarioConfig c = cfg(0.5, 1, 2, 1);
    c.t_pulse = -0.1;
    CHECK_THROWS_WITH(validate(c), ContainsSubstring("t_pulse"));
    c.t_pulse = 0;
    c.echo_delays = {0.2, 0.1};
    CHECK_THROWS_WITH(validate(c), ContainsSubstring("echo"));
    c.echo_delays = {-0.2};
    CHECK_THROWS_AS(validate(c), ConfigError);
}

TEST_CASE("saturated configs are accepted") {
    const Scenario s = validate(cfg(0.5, 1, 2, 0.4));
    CHECK(s.saturated());
}

TEST_CASE("pilot_interval") {
    const Scenario s = validate(cfg(71.43e-6, 1e-3, 5, 2e-3));
    CHECK(pilot_interval(s, {0}).lo == 0.0);
    CHECK(pilot_interval(s, {0}).hi == Approx(71.43e-6));
    CHECK(pilot_interval(s, {4}).lo == Approx(4e-3));
    CHECK(pilot_interval(s, {4}).hi == Approx(4.07143e-3));
    CHECK_THROWS_AS(pilot_interval(s, {5}), std::out_of_range);
    CHECK_THROWS_AS(pilot_interval(s, {-1}), std::out_of_range);

    const Scenario t = validate(cfg(0.5, 1, 2, 0.8));
    CHECK(pilot_interval(t, {1}) == Interval{1.0, 1.5});
}

TEST_CASE("hit_window") {
    const Scenario s = validate(cfg(0.5, 1, 2, 0.8));
    const Interval w = hit_window(s, {1}, 1, 0.0);
    CHECK(w.lo == Approx(0.2));
    CHECK(w.hi == Approx(0.7));
    CHECK(hit_window(s, {0}, 0, 0.0) == Interval{0.0, 0.5});

    ScenarioConfig c = cfg(0.5, 1, 2, 0.8);
    c.t_pulse = 0.1;
    const Interval wide = hit_window(validate(c), {1}, 1, 0.0);
    CHECK(wide.lo == Approx(0.1));
    CHECK(wide.hi == Approx(0.7));
}

TEST_CASE("hit_window width is t_ofdm + t_pulse") {
    ScenarioConfig c = cfg(0.3, 1.1, 4, 0.77);
    c.t_pulse = 0.05;
    c.echo_delays = {0.2, 0.9};
    const Scenario s = validate(c);
    for (int l = 0; l < 4; ++l) {
        for (int j = 0; j < 8; ++j) {
            for (double d : {0.0, 0.2, 0.9}) {
                CHECK(hit_window(s, {l}, j, d).width() == Approx(0.35));
            }
        }
    }
}

TEST_CASE("tolerant_ceil") {
    CHECK(tolerant_ceil(2.5) == 3);
    CHECK(tolerant_ceil(3.0) == 3);
    CHECK(tolerant_ceil(3.0 + 1e-12) == 3);
    CHECK(tolerant_ceil(3.0 + 1e-6) == 4);
    CHECK(tolerant_ceil(0.2) == 1);
}
