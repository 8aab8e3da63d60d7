#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "pilotcoex/engine.hpp"
#include "pilotcoex/monte_carlo.hpp"

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

TEST_CASE("splitmix64 reference outputs") {
    // First outputs for seed 0 from the published reference implementation.
    SplitMix64 g(0);
    CHECK(g.next() == 0xE220A8397B1DCDAFULL);
    CHECK(g.next() == 0x6E789E6AA1B965F4ULL);
    CHECK(g.next() == 0x06C45D188009454FULL);
    CHECK(SplitMix64::at(0, 2) == 0x06C45D188009454FULL);
    CHECK(SplitMix64::to_unit(0) == 0.0);
    CHECK(SplitMix64::to_unit(~0ULL) < 1.0);
}

TEST_CASE("direct hit count agrees with the oracle") {
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        ScenarioConfig c = cfg(0.1 + 0.2 * u(gen), 0.0, 1 + trial % 6, 0.0);
        c.t_pil = c.t_ofdm * (1.0 + 4.0 * u(gen));
        c.t_rep = c.t_ofdm * 0.5 + 2.0 * c.n_p * c.t_pil * u(gen);
        if (trial % 2) {
            c.t_pulse = 0.1 * u(gen);
            c.echo_delays = {0.3 * u(gen), 0.5 + u(gen)};
        }
        const Scenario s = validate(c);
        for (int k = 0; k < 200; ++k) {
            const double t_f = c.t_rep * u(gen);
            REQUIRE(count_pilots_hit(s, t_f) == oracle::pilots_hit(c, t_f));
        }
    }
}

TEST_CASE("Monte Carlo brackets the exact values") {
    const Scenario t1 = validate(cfg(71.43e-6, 1e-3, 5, 1e-3));
    const MonteCarloEstimate a = prob_monte_carlo(t1, 1, 1000000, 1);
    CHECK(std::abs(a.estimate - 0.07143) <= 3 * a.std_error);
    CHECK(a.samples == 1000000);
    CHECK(a.rng == "splitmix64");

    const Scenario hand = validate(cfg(0.5, 1, 2, 0.8));
    const MonteCarloEstimate b = prob_monte_carlo(hand, 2, 1000000, 2);
    CHECK(std::abs(b.estimate - 0.375) <= 4 * b.std_error);
    CHECK(b.std_error == Approx(std::sqrt(b.estimate * (1 - b.estimate) / 1e6)));

    const MonteCarloEstimate sat = prob_monte_carlo(validate(cfg(0.5, 1, 3, 0.4)), 1, 1000, 3);
    CHECK(sat.estimate == 1.0);
    CHECK(sat.std_error == 0.0);
}

TEST_CASE("Monte Carlo is deterministic") {
    const Scenario s = validate(cfg(0.3, 1, 4, 0.77));
    const auto h1 = sample_hit_histogram(s, 200000, 99);
    const auto h2 = sample_hit_histogram(s, 200000, 99);
    CHECK(h1 == h2);
    CHECK(sample_hit_histogram(s, 200000, 100) != h1);

    std::uint64_t total = 0;
    for (auto n : h1) total += n;
    CHECK(total == 200000);
    CHECK(h1.size() == 5);
}

TEST_CASE("Monte Carlo argument checks") {
    const Scenario s = validate(cfg(0.3, 1, 4, 0.77));
    CHECK_THROWS_AS(prob_monte_carlo(s, 1, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(prob_monte_carlo(s, 5, 10, 1), std::out_of_range);
}
