#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pilotcoex/closed_forms.hpp"
#include "pilotcoex/scenario.hpp"

namespace pilotcoex {

enum class SweepAxis { TRep, TCsi, M };

std::string_view label(SweepAxis a) noexcept;
/// Parses "t_rep" / "t_csi" / "m". Throws std::invalid_argument.
SweepAxis parse_axis(std::string_view text);

/// One parameter sweep over a base scenario.
///
/// Grid: with count N and the half-step offset, the points are
/// start + (i + 1/2)(stop - start)/N for i < N; without it they are
/// start + i (stop - start)/N for i <= N. The offset keeps grid points off
/// exact multiples of t_pil, where the support is decided by a
/// measure-zero coincidence. The t_csi axis never offsets (every point must
/// be a whole number of pilot spacings) and the m axis walks the integers
/// start..stop.
struct SweepSpec {
    ScenarioConfig base;
    SweepAxis axis = SweepAxis::TRep;
    double start = 0.0;
    double stop = 0.0;
    int count = 100;
    bool half_step_offset = true;
    std::vector<int> m_list{1};
    bool m_half_window = false;  ///< use m = ceil(n_p / 2) instead of m_list
    bool with_mc = false;
    std::uint64_t mc_samples = 0;
    std::uint64_t seed = 1;
};

struct SweepRow {
    double axis_value = 0.0;
    double t_rep = 0.0;
    double t_csi = 0.0;
    int n_p = 0;
    int m = 0;
    double p_exact = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    std::optional<ClosedForm> closed_form;
    Support support = Support::NonZero;
    std::optional<double> mc_estimate;
    std::optional<double> mc_stderr;
};

std::vector<double> sweep_grid(double start, double stop, int count, bool half_step_offset);

/// Rows ordered by grid index, then by m. Grid points are evaluated
/// concurrently; the output is identical for any worker count. Throws
/// std::invalid_argument (or ConfigError) naming the bad field.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// Runs several specs and concatenates their rows in order.
std::vector<SweepRow> run_sweeps(const std::vector<SweepSpec>& specs);

struct PresetOptions {
    int count = 0;  ///< 0 = preset default
    std::uint64_t mc_samples = 0;
    std::uint64_t seed = 1;
};

/// P[M >= 1] against t_rep for t_csi = 5 ms and n_p in {1, 2, 5, 10};
/// no offset, so the t_rep = k t_pil touch points are on the grid.
std::vector<SweepSpec> preset_fig3a(const PresetOptions& opt);
/// P[M >= m], m = 1..5, against t_rep for n_p = 5, t_pil = 1 ms.
std::vector<SweepSpec> preset_fig3b(const PresetOptions& opt);
/// P[M >= ceil(n_p/2)] over t_rep in [2, 3] ms for t_pil = 2 ms and
/// t_csi in {4, 8, 16, 32, 64} ms.
std::vector<SweepSpec> preset_fig4(const PresetOptions& opt);

/// Column order of the sweep CSV. Frozen.
inline constexpr std::string_view kSweepCsvHeader =
    "axis,axis_value,t_rep,t_csi,n_p,m,p_exact,lower,upper,closed_form,closed_form_case,"
    "support,mc_estimate,mc_stderr";

struct CsvOptions {
    bool timestamp = true;       ///< leading "# generated ..." line
    std::string comment;         ///< extra "# ..." line, e.g. preset and seed
};

/// "%.9e" for reals; empty fields for absent optionals.
std::string format_real(double x);

void write_sweep_csv(std::ostream& out, SweepAxis axis, const std::vector<SweepRow>& rows,
                     const CsvOptions& options);

/// Writes the optional timestamp and comment lines.
void write_csv_preamble(std::ostream& out, const CsvOptions& options);

}  // namespace pilotcoex
