#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "pilotcoex/scenario.hpp"

namespace pilotcoex {

inline constexpr std::string_view kRngAlgorithm = "splitmix64";

/// SplitMix64 (Steele, Lea, Flood 2014). The i-th output for a seed is a
/// pure function of (seed, i), so sample ranges can be drawn independently
/// and in any order.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        state_ += kGamma;
        return mix(state_);
    }

    /// Uniform double in [0, 1) from the top 53 bits.
    double uniform() noexcept { return to_unit(next()); }

    /// Output number `index` (0-based) of the stream started at `seed`.
    static std::uint64_t at(std::uint64_t seed, std::uint64_t index) noexcept {
        return mix(seed + (index + 1) * kGamma);
    }

    static double to_unit(std::uint64_t bits) noexcept {
        return static_cast<double>(bits >> 11) * 0x1.0p-53;
    }

private:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

    static std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

/// Number of distinct pilots hit when the first pulse arrives at t_f,
/// simulated directly from the pulse times t_f + j t_rep + delay (j >= 0)
/// against the pilot symbols. Arrivals after t_csi hit nothing.
int count_pilots_hit(const Scenario& s, double t_f);

/// histogram[k] = number of draws with exactly k pilots hit, k = 0..n_p.
/// t_f is drawn uniformly on [0, t_rep).
std::vector<std::uint64_t> sample_hit_histogram(const Scenario& s, std::uint64_t n_samples,
                                                std::uint64_t seed);

struct MonteCarloEstimate {
    double estimate = 0.0;
    double std_error = 0.0;  ///< sqrt(est (1 - est) / n)
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::string_view rng = kRngAlgorithm;
};

MonteCarloEstimate estimate_at_least(const std::vector<std::uint64_t>& histogram, int m,
                                     std::uint64_t seed);

/// Monte Carlo estimate of P[M >= m]. Bit-identical for identical inputs
/// regardless of the number of worker threads. Throws std::invalid_argument
/// for n_samples == 0 and std::out_of_range for m outside [1, n_p].
MonteCarloEstimate prob_monte_carlo(const Scenario& s, int m, std::uint64_t n_samples,
                                    std::uint64_t seed);

}  // namespace pilotcoex
