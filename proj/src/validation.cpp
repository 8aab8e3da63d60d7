#include "pilotcoex/validation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <set>
#include <stdexcept>

#include "pilotcoex/closed_forms.hpp"
#include "pilotcoex/engine.hpp"

namespace pilotcoex {

namespace {

constexpr double kBoundTol = 1e-9;
constexpr double kClosedFormTol = 1e-9;
constexpr double kMcSigmas = 4.0;

double uniform(SplitMix64& rng, double lo, double hi) { return lo + (hi - lo) * rng.uniform(); }

int uniform_int(SplitMix64& rng, int lo, int hi) {
    const int span = hi - lo + 1;
    return lo + std::min(span - 1, static_cast<int>(rng.uniform() * span));
}

class Checker {
public:
    explicit Checker(ValidationReport& report) : report_(report) {}

    void add(int config, std::string check, int m, double value, double reference, double margin) {
        report_.checks.push_back({config, std::move(check), m, value, reference, margin, margin >= 0.0});
    }

private:
    ValidationReport& report_;
};

}  // namespace

ScenarioConfig random_scenario(SplitMix64& rng, int index) {
    ScenarioConfig c;
    c.t_ofdm = uniform(rng, 20e-6, 100e-6);
    c.t_pil = c.t_ofdm * uniform(rng, 1.0, 20.0);
    c.n_p = uniform_int(rng, 1, 8);
    const double t_csi = c.n_p * c.t_pil;
    switch (index % 10) {
        case 0:
            c.t_rep = c.t_ofdm * uniform(rng, 0.5, 1.0);
            break;
        case 1:
            c.t_rep = uniform_int(rng, 1, c.n_p) * c.t_pil;
            break;
        default:
            // (t_ofdm, 3 t_csi]: 1 - u lies in (0, 1].
            c.t_rep = c.t_ofdm + (3.0 * t_csi - c.t_ofdm) * (1.0 - rng.uniform());
            break;
    }
    if (index % 5 == 4) {
        c.t_pulse = uniform(rng, 0.0, 0.2 * c.t_ofdm);
        c.echo_delays = {uniform(rng, 0.0, c.t_pil)};
    }
    return c;
}

std::size_t ValidationReport::passed() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.passed; }));
}

std::size_t ValidationReport::failed() const noexcept { return checks.size() - passed(); }

std::map<std::string, double> ValidationReport::worst_margins() const {
    std::map<std::string, double> worst;
    for (const ValidationCheck& c : checks) {
        auto [it, inserted] = worst.try_emplace(c.check, c.margin);
        if (!inserted) it->second = std::min(it->second, c.margin);
    }
    return worst;
}

ValidationReport run_validation(int n_configs, std::uint64_t mc_samples, std::uint64_t seed) {
    if (n_configs < 1) throw std::invalid_argument("validate: need at least one config");
    if (mc_samples < 1) throw std::invalid_argument("validate: need at least one Monte Carlo sample");

    ValidationReport report;
    Checker checker(report);
    SplitMix64 rng(seed);

    for (int c = 0; c < n_configs; ++c) {
        const ScenarioConfig config = random_scenario(rng, c);
        report.configs.push_back(config);
        const Scenario s = validate(config);
        const CoverageProfile profile = coverage_profile(s);

        std::vector<double> p(s.n_p() + 1, 0.0);
        for (int m = 1; m <= s.n_p(); ++m) {
            const ProbabilityReport r = prob_at_least(s, profile, m);
            p[m] = r.p_exact;

            const double below = r.p_exact - r.lower_bound;
            const double above = r.upper_bound - r.p_exact;
            checker.add(c, "bounds", m, r.p_exact, below < above ? r.lower_bound : r.upper_bound,
                        std::min(below, above) + kBoundTol);

            if (m >= 2) checker.add(c, "monotone", m, p[m], p[m - 1], p[m - 1] - p[m] + 1e-12);

            if (r.closed_form) {
                checker.add(c, "closed_form", m, r.p_exact, r.closed_form->value,
                            kClosedFormTol - std::abs(r.closed_form->value - r.p_exact));
            }
            if (s.saturated()) {
                checker.add(c, "saturated", m, r.p_exact, 1.0, 1e-12 - std::abs(1.0 - r.p_exact));
            }
            if (m >= 2 && !s.saturated() &&
                (r.support == Support::NonZero || r.support == Support::Zero)) {
                const bool actual = r.p_exact > kNonZeroThreshold;
                const bool predicted = r.support == Support::NonZero;
                checker.add(c, "support", m, r.p_exact, predicted ? 1.0 : 0.0,
                            actual == predicted ? 0.0 : -1.0);
            }
        }

        ScenarioConfig plain = config;
        plain.t_pulse = 0.0;
        plain.echo_delays.clear();
        for (int k = 1; k <= s.n_p(); ++k) {
            plain.t_rep = k * plain.t_pil;
            const Scenario touch = validate(plain);
            const double exact = exact_probability(touch, 1);
            const double expected = plain.t_ofdm / plain.t_pil;
            checker.add(c, "pilot_multiple", k, exact, expected,
                        kClosedFormTol - std::abs(exact - expected));
        }

        const std::uint64_t mc_seed = SplitMix64::at(seed ^ 0x6D635F7365656473ULL, c);
        const auto histogram = sample_hit_histogram(s, mc_samples, mc_seed);
        std::set<int> ms{1, 2, (s.n_p() + 1) / 2};
        for (int m : ms) {
            if (m > s.n_p()) continue;
            const MonteCarloEstimate mc = estimate_at_least(histogram, m, mc_seed);
            double se = mc.std_error;
            if (se == 0.0) se = std::sqrt(p[m] * (1.0 - p[m]) / static_cast<double>(mc.samples));
            checker.add(c, "mc", m, mc.estimate, p[m], kMcSigmas * se - std::abs(mc.estimate - p[m]));
        }
    }
    return report;
}

void write_validation_csv(std::ostream& out, const ValidationReport& report,
                          const CsvOptions& options) {
    write_csv_preamble(out, options);
    out << kValidationCsvHeader << '\n';
    for (const ValidationCheck& c : report.checks) {
        const ScenarioConfig& cfg = report.configs[c.config];
        out << c.config << ',' << format_real(cfg.t_ofdm) << ',' << format_real(cfg.t_pil) << ','
            << cfg.n_p << ',' << format_real(cfg.t_rep) << ',' << format_real(cfg.t_pulse) << ','
            << cfg.echo_delays.size() << ',' << c.check << ',' << c.m << ',' << format_real(c.value)
            << ',' << format_real(c.reference) << ',' << format_real(c.margin) << ','
            << (c.passed ? "pass" : "FAIL") << '\n';
    }
}

void write_validation_summary(std::ostream& out, const ValidationReport& report) {
    std::map<std::string, std::pair<std::size_t, std::size_t>> tally;
    for (const ValidationCheck& c : report.checks) {
        auto& [pass, fail] = tally[c.check];
        (c.passed ? pass : fail)++;
    }
    const auto worst = report.worst_margins();
    for (const auto& [check, counts] : tally) {
        out << check << ": " << counts.first << " passed, " << counts.second
            << " failed, worst margin " << format_real(worst.at(check)) << '\n';
    }
    out << (report.ok() ? "validation passed" : "validation FAILED") << " (" << report.passed() << '/'
        << report.checks.size() << " checks)\n";
}

}  // namespace pilotcoex
