#include "pilotcoex/monte_carlo.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "pilotcoex/parallel.hpp"

namespace pilotcoex {

int count_pilots_hit(const Scenario& s, double t_f) {
    if (t_f > s.t_csi()) return 0;

    const double width = s.t_pulse();
    int hits = 0;
    for (int l = 0; l < s.n_p(); ++l) {
        const double start = l * s.t_pil();
        const double end = start + s.t_ofdm();
        bool hit = false;
        for (std::size_t path = 0; path <= s.echo_delays().size() && !hit; ++path) {
            const double delay = path == 0 ? 0.0 : s.echo_delays()[path - 1];
            // Earliest pulse on this path that has not finished before the
            // symbol starts; it is the only candidate for an overlap.
            const double first = t_f + delay;
            double j = std::ceil((start - width - first) / s.t_rep());
            if (j < 0.0) j = 0.0;
            const double arrival = first + j * s.t_rep();
            hit = arrival <= end && arrival + width >= start;
        }
        hits += hit ? 1 : 0;
    }
    return hits;
}

std::vector<std::uint64_t> sample_hit_histogram(const Scenario& s, std::uint64_t n_samples,
                                                std::uint64_t seed) {
    if (n_samples == 0) throw std::invalid_argument("n_samples must be >= 1");

    std::vector<std::vector<std::uint64_t>> partial(worker_count(),
                                                    std::vector<std::uint64_t>(s.n_p() + 1, 0));
    parallel_chunks(n_samples, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
        auto& local = partial[chunk];
        for (std::size_t i = begin; i < end; ++i) {
            const double t_f = SplitMix64::to_unit(SplitMix64::at(seed, i)) * s.t_rep();
            ++local[count_pilots_hit(s, t_f)];
        }
    });

    std::vector<std::uint64_t> histogram(s.n_p() + 1, 0);
    for (const auto& local : partial) {
        for (std::size_t k = 0; k < histogram.size(); ++k) histogram[k] += local[k];
    }
    return histogram;
}

MonteCarloEstimate estimate_at_least(const std::vector<std::uint64_t>& histogram, int m,
                                     std::uint64_t seed) {
    if (m < 1 || m >= static_cast<int>(histogram.size())) {
        throw std::out_of_range("m = " + std::to_string(m) + " outside [1, " +
                                std::to_string(histogram.size() - 1) + "]");
    }
    std::uint64_t total = 0;
    std::uint64_t hits = 0;
    for (std::size_t k = 0; k < histogram.size(); ++k) {
        total += histogram[k];
        if (static_cast<int>(k) >= m) hits += histogram[k];
    }
    const double n = static_cast<double>(total);
    const double est = static_cast<double>(hits) / n;
    return MonteCarloEstimate{.estimate = est,
                              .std_error = std::sqrt(est * (1.0 - est) / n),
                              .samples = total,
                              .seed = seed,
                              .rng = kRngAlgorithm};
}

MonteCarloEstimate prob_monte_carlo(const Scenario& s, int m, std::uint64_t n_samples,
                                    std::uint64_t seed) {
    if (m < 1 || m > s.n_p()) {
        throw std::out_of_range("m = " + std::to_string(m) + " outside [1, " +
                                std::to_string(s.n_p()) + "]");
    }
    return estimate_at_least(sample_hit_histogram(s, n_samples, seed), m, seed);
}

}  // namespace pilotcoex
