#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "pilotcoex/monte_carlo.hpp"
#include "pilotcoex/scenario.hpp"
#include "pilotcoex/sweep.hpp"

namespace pilotcoex {

/// Random scenario for cross-checking. Ranges:
///   t_ofdm in [20, 100] us, t_pil = t_ofdm * U[1, 20], n_p in 1..8.
///   index % 10 == 0: t_rep = t_ofdm * U[0.5, 1]   (saturated)
///   index % 10 == 1: t_rep = k t_pil, k in 1..n_p (pilot multiple)
///   otherwise      : t_rep uniform on (t_ofdm, 3 t_csi]
///   index % 5 == 4 : adds t_pulse in [0, 0.2 t_ofdm] and one echo delay
///                    in [0, t_pil]
ScenarioConfig random_scenario(SplitMix64& rng, int index);

struct ValidationCheck {
    int config = 0;
    std::string check;  ///< bounds, monotone, closed_form, saturated, support, pilot_multiple, mc
    int m = 0;
    double value = 0.0;
    double reference = 0.0;
    double margin = 0.0;  ///< >= 0 when passed; how far from failing
    bool passed = true;
};

struct ValidationReport {
    std::vector<ScenarioConfig> configs;
    std::vector<ValidationCheck> checks;

    std::size_t passed() const noexcept;
    std::size_t failed() const noexcept;
    bool ok() const noexcept { return failed() == 0; }

    /// Smallest margin seen per check kind.
    std::map<std::string, double> worst_margins() const;
};

/// Draws n_configs random scenarios and checks, for every m: the bound
/// sandwich, monotonicity in m, closed-form agreement, the saturated regime,
/// the support prediction (boundary and undetermined points skipped), the
/// pilot-multiple closed form for k = 1..n_p, and Monte Carlo agreement
/// within 4 standard errors for m in {1, 2, ceil(n_p/2)}.
///
/// When the Monte Carlo estimate is exactly 0 or 1 its own standard error
/// vanishes; the exact value's binomial standard error is used instead.
ValidationReport run_validation(int n_configs, std::uint64_t mc_samples, std::uint64_t seed);

inline constexpr std::string_view kValidationCsvHeader =
    "config,t_ofdm,t_pil,n_p,t_rep,t_pulse,echoes,check,m,value,reference,margin,passed";

void write_validation_csv(std::ostream& out, const ValidationReport& report,
                          const CsvOptions& options);

/// One line per check kind: passes, failures, worst margin.
void write_validation_summary(std::ostream& out, const ValidationReport& report);

}  // namespace pilotcoex
