#include "pilotcoex/sweep.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <ostream>
#include <stdexcept>

#include "pilotcoex/engine.hpp"
#include "pilotcoex/monte_carlo.hpp"
#include "pilotcoex/parallel.hpp"

namespace pilotcoex {

std::string_view label(SweepAxis a) noexcept {
    switch (a) {
        case SweepAxis::TRep: return "t_rep";
        case SweepAxis::TCsi: return "t_csi";
        case SweepAxis::M: return "m";
    }
    return "";
}

SweepAxis parse_axis(std::string_view text) {
    if (text == "t_rep") return SweepAxis::TRep;
    if (text == "t_csi") return SweepAxis::TCsi;
    if (text == "m") return SweepAxis::M;
    throw std::invalid_argument("unknown sweep axis '" + std::string(text) + "'");
}

std::vector<double> sweep_grid(double start, double stop, int count, bool half_step_offset) {
    if (!(start < stop)) throw std::invalid_argument("sweep: start must be < stop");
    if (count < 1) throw std::invalid_argument("sweep: count must be >= 1");
    std::vector<double> grid;
    const double span = stop - start;
    if (half_step_offset) {
        for (int i = 0; i < count; ++i) grid.push_back(start + (i + 0.5) * span / count);
    } else {
        for (int i = 0; i <= count; ++i) grid.push_back(start + i * span / count);
    }
    return grid;
}

namespace {

struct GridPoint {
    double value;
    ScenarioConfig config;
    std::vector<int> ms;
};

std::vector<GridPoint> expand(const SweepSpec& spec) {
    if (spec.with_mc && spec.mc_samples == 0) {
        throw std::invalid_argument("sweep: mc_samples must be >= 1 when Monte Carlo is enabled");
    }
    if (!spec.m_half_window && spec.axis != SweepAxis::M && spec.m_list.empty()) {
        throw std::invalid_argument("sweep: m_list must not be empty");
    }

    std::vector<double> values;
    switch (spec.axis) {
        case SweepAxis::TRep:
            values = sweep_grid(spec.start, spec.stop, spec.count, spec.half_step_offset);
            break;
        case SweepAxis::TCsi:
            values = sweep_grid(spec.start, spec.stop, spec.count, false);
            break;
        case SweepAxis::M:
            if (!(spec.start < spec.stop)) throw std::invalid_argument("sweep: start must be < stop");
            for (long long m = std::llround(spec.start); m <= std::llround(spec.stop); ++m) {
                values.push_back(static_cast<double>(m));
            }
            break;
    }

    std::vector<GridPoint> points;
    points.reserve(values.size());
    for (double v : values) {
        GridPoint p{v, spec.base, {}};
        if (spec.axis == SweepAxis::TRep) {
            p.config.t_rep = v;
        } else if (spec.axis == SweepAxis::TCsi) {
            const double n = v / spec.base.t_pil;
            const long long rounded = std::llround(n);
            if (rounded < 1 || std::abs(n - rounded) > 1e-9 * n) {
                throw std::invalid_argument("sweep: t_csi grid point " + format_real(v) +
                                            " is not a whole number of pilot spacings");
            }
            p.config.n_p = static_cast<int>(rounded);
        }

        const int n_p = p.config.n_p;
        if (spec.axis == SweepAxis::M) {
            p.ms = {static_cast<int>(v)};
        } else if (spec.m_half_window) {
            p.ms = {(n_p + 1) / 2};
        } else {
            p.ms = spec.m_list;
        }
        for (int m : p.ms) {
            if (m < 1 || m > n_p) {
                throw std::invalid_argument("sweep: m = " + std::to_string(m) + " outside [1, n_p = " +
                                            std::to_string(n_p) + "]");
            }
        }
        points.push_back(std::move(p));
    }
    return points;
}

std::vector<SweepRow> evaluate(const SweepSpec& spec, const GridPoint& point, std::size_t index) {
    const Scenario s = validate(point.config);
    const CoverageProfile profile = coverage_profile(s);

    std::vector<std::uint64_t> histogram;
    std::uint64_t point_seed = 0;
    if (spec.with_mc) {
        point_seed = SplitMix64::at(spec.seed, index);
        histogram = sample_hit_histogram(s, spec.mc_samples, point_seed);
    }

    std::vector<SweepRow> rows;
    for (int m : point.ms) {
        const ProbabilityReport r = prob_at_least(s, profile, m);
        SweepRow row{.axis_value = point.value,
                     .t_rep = s.t_rep(),
                     .t_csi = s.t_csi(),
                     .n_p = s.n_p(),
                     .m = m,
                     .p_exact = r.p_exact,
                     .lower = r.lower_bound,
                     .upper = r.upper_bound,
                     .closed_form = r.closed_form,
                     .support = r.support,
                     .mc_estimate = std::nullopt,
                     .mc_stderr = std::nullopt};
        if (spec.with_mc) {
            const MonteCarloEstimate mc = estimate_at_least(histogram, m, point_seed);
            row.mc_estimate = mc.estimate;
            row.mc_stderr = mc.std_error;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    const std::vector<GridPoint> points = expand(spec);
    std::vector<std::vector<SweepRow>> per_point(points.size());

    if (spec.with_mc) {
        // Sampling already spreads over every worker.
        for (std::size_t i = 0; i < points.size(); ++i) per_point[i] = evaluate(spec, points[i], i);
    } else {
        parallel_chunks(points.size(), [&](std::size_t begin, std::size_t end, std::size_t) {
            for (std::size_t i = begin; i < end; ++i) per_point[i] = evaluate(spec, points[i], i);
        });
    }

    std::vector<SweepRow> rows;
    for (auto& chunk : per_point) {
        rows.insert(rows.end(), std::make_move_iterator(chunk.begin()),
                    std::make_move_iterator(chunk.end()));
    }
    return rows;
}

std::vector<SweepRow> run_sweeps(const std::vector<SweepSpec>& specs) {
    std::vector<SweepRow> rows;
    for (const SweepSpec& spec : specs) {
        auto part = run_sweep(spec);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    return rows;
}

namespace {

constexpr double kFigOfdm = 71.43e-6;

SweepSpec preset_base(const PresetOptions& opt, int default_count) {
    SweepSpec spec;
    spec.axis = SweepAxis::TRep;
    spec.count = opt.count > 0 ? opt.count : default_count;
    spec.with_mc = opt.mc_samples > 0;
    spec.mc_samples = opt.mc_samples;
    spec.seed = opt.seed;
    spec.base.t_ofdm = kFigOfdm;
    return spec;
}

}  // namespace

std::vector<SweepSpec> preset_fig3a(const PresetOptions& opt) {
    std::vector<SweepSpec> specs;
    for (int n_p : {1, 2, 5, 10}) {
        SweepSpec spec = preset_base(opt, 990);
        spec.base.n_p = n_p;
        spec.base.t_pil = 5e-3 / n_p;
        spec.base.t_rep = 1e-3;
        spec.start = 0.1e-3;
        spec.stop = 10e-3;
        spec.half_step_offset = false;
        spec.m_list = {1};
        specs.push_back(spec);
    }
    return specs;
}

std::vector<SweepSpec> preset_fig3b(const PresetOptions& opt) {
    SweepSpec spec = preset_base(opt, 2000);
    spec.base.n_p = 5;
    spec.base.t_pil = 1e-3;
    spec.base.t_rep = 1e-3;
    spec.start = kFigOfdm;
    spec.stop = 6e-3;
    spec.m_list = {1, 2, 3, 4, 5};
    return {spec};
}

std::vector<SweepSpec> preset_fig4(const PresetOptions& opt) {
    std::vector<SweepSpec> specs;
    for (int t_csi_ms : {4, 8, 16, 32, 64}) {
        SweepSpec spec = preset_base(opt, 1000);
        spec.base.t_pil = 2e-3;
        spec.base.n_p = t_csi_ms / 2;
        spec.base.t_rep = 2e-3;
        spec.start = 2e-3;
        spec.stop = 3e-3;
        spec.m_half_window = true;
        specs.push_back(spec);
    }
    return specs;
}

std::string format_real(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9e", x);
    return buf;
}

void write_csv_preamble(std::ostream& out, const CsvOptions& options) {
    if (options.timestamp) {
        const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        std::tm utc{};
        gmtime_r(&now, &utc);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
        out << "# generated " << buf << '\n';
    }
    if (!options.comment.empty()) out << "# " << options.comment << '\n';
}

void write_sweep_csv(std::ostream& out, SweepAxis axis, const std::vector<SweepRow>& rows,
                     const CsvOptions& options) {
    write_csv_preamble(out, options);
    out << kSweepCsvHeader << '\n';
    for (const SweepRow& r : rows) {
        out << label(axis) << ',' << format_real(r.axis_value) << ',' << format_real(r.t_rep) << ','
            << format_real(r.t_csi) << ',' << r.n_p << ',' << r.m << ',' << format_real(r.p_exact)
            << ',' << format_real(r.lower) << ',' << format_real(r.upper) << ',';
        if (r.closed_form) {
            out << format_real(r.closed_form->value) << ',' << label(r.closed_form->kind);
        } else {
            out << ',';
        }
        out << ',' << label(r.support) << ',';
        if (r.mc_estimate) out << format_real(*r.mc_estimate);
        out << ',';
        if (r.mc_stderr) out << format_real(*r.mc_stderr);
        out << '\n';
    }
}

}  // namespace pilotcoex
