// Command-line front end for the pilot interference analysis library.
//
// Exit codes: 0 success, 1 validation failure, 2 bad input.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pilotcoex/advisor.hpp"
#include "pilotcoex/closed_forms.hpp"
#include "pilotcoex/engine.hpp"
#include "pilotcoex/json_io.hpp"
#include "pilotcoex/monte_carlo.hpp"
#include "pilotcoex/scenario.hpp"
#include "pilotcoex/sweep.hpp"
#include "pilotcoex/validation.hpp"

namespace {

using namespace pilotcoex;

constexpr int kExitOk = 0;
constexpr int kExitValidationFailed = 1;
constexpr int kExitBadInput = 2;

struct ScenarioArgs {
    std::string config_path;
    std::optional<double> t_ofdm;
    std::optional<double> t_pil;
    std::optional<int> n_p;
    std::optional<double> t_rep;
    std::optional<double> t_pulse;
    std::vector<double> echo_delays;
};

void add_scenario_options(CLI::App* cmd, ScenarioArgs& a) {
    cmd->add_option("--config", a.config_path, "JSON scenario file");
    cmd->add_option("--t-ofdm", a.t_ofdm, "OFDM symbol duration [s]");
    cmd->add_option("--t-pil", a.t_pil, "pilot spacing [s]");
    cmd->add_option("--n-p", a.n_p, "pilots per estimation window");
    cmd->add_option("--t-rep", a.t_rep, "radar repetition interval [s]");
    cmd->add_option("--t-pulse", a.t_pulse, "broadened pulse width [s]");
    cmd->add_option("--echo-delays", a.echo_delays, "echo delays [s], comma separated")
        ->delimiter(',');
}

ScenarioConfig build_config(const ScenarioArgs& a, bool need_t_rep = true) {
    ScenarioConfig c;
    bool have[4] = {false, false, false, false};
    if (!a.config_path.empty()) {
        c = load_scenario(a.config_path);
        have[0] = have[1] = have[2] = have[3] = true;
    }
    if (a.t_ofdm) c.t_ofdm = *a.t_ofdm, have[0] = true;
    if (a.t_pil) c.t_pil = *a.t_pil, have[1] = true;
    if (a.n_p) c.n_p = *a.n_p, have[2] = true;
    if (a.t_rep) c.t_rep = *a.t_rep, have[3] = true;
    if (a.t_pulse) c.t_pulse = *a.t_pulse;
    if (!a.echo_delays.empty()) c.echo_delays = a.echo_delays;

    const char* names[4] = {"--t-ofdm", "--t-pil", "--n-p", "--t-rep"};
    for (int i = 0; i < 4; ++i) {
        if (i == 3 && !need_t_rep && !have[3]) {
            c.t_rep = c.t_ofdm > 0.0 ? 2.0 * c.t_ofdm : 1.0;  // replaced by the sweep grid
            continue;
        }
        if (!have[i]) throw ConfigError(std::string("missing ") + names[i] + " (or --config)");
    }
    return c;
}

Scenario load_validated(const ScenarioArgs& a, bool need_t_rep = true) {
    Scenario s = validate(build_config(a, need_t_rep));
    for (const std::string& w : s.warnings()) std::cerr << "warning: " << w << '\n';
    return s;
}

/// Writes to --out when given, otherwise to standard output.
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw ConfigError("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void print_report(std::ostream& out, const ProbabilityReport& r) {
    out << "m=" << r.m << "  p_exact=" << format_real(r.p_exact) << "  bounds=["
        << format_real(r.lower_bound) << ", " << format_real(r.upper_bound) << "]";
    if (r.closed_form) {
        out << "  closed_form=" << format_real(r.closed_form->value) << " ("
            << label(r.closed_form->kind) << ")";
    }
    out << "  support=" << label(r.support) << '\n';
}

struct Common {
    std::uint64_t seed = 1;
    std::uint64_t mc_samples = 0;
    std::string out_path;
    bool json = false;
    bool no_timestamp = false;
};

void add_output_options(CLI::App* cmd, Common& c) {
    cmd->add_option("--seed", c.seed, "Monte Carlo seed");
    cmd->add_option("--mc-samples", c.mc_samples, "Monte Carlo samples (0 = off)");
    cmd->add_option("--out", c.out_path, "output file (CSV)");
    cmd->add_flag("--no-timestamp", c.no_timestamp, "omit the timestamp header line");
}

CsvOptions csv_options(const Common& c, std::string comment) {
    return {.timestamp = !c.no_timestamp, .comment = std::move(comment)};
}

std::string run_comment(const std::string& what, const Common& c) {
    std::string text = what + " seed=" + std::to_string(c.seed) + " rng=" + std::string(kRngAlgorithm);
    if (c.mc_samples > 0) text += " mc_samples=" + std::to_string(c.mc_samples);
    return text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pulsed-radar pilot interference analysis"};
    app.require_subcommand(1);

    ScenarioArgs scenario;
    Common common;
    int m = 0;

    auto* prob = app.add_subcommand("prob", "exact P[M >= m] with bounds and optional Monte Carlo");
    add_scenario_options(prob, scenario);
    prob->add_option("--m", m, "threshold m (default: every m)");
    prob->add_option("--seed", common.seed, "Monte Carlo seed");
    prob->add_option("--mc-samples", common.mc_samples, "Monte Carlo samples (0 = off)");
    prob->add_flag("--json", common.json, "machine-readable output");

    auto* bounds_cmd = app.add_subcommand("bounds", "analytical bounds on P[M >= m]");
    add_scenario_options(bounds_cmd, scenario);
    bounds_cmd->add_option("--m", m, "threshold m (default: every m)");
    bounds_cmd->add_flag("--json", common.json, "machine-readable output");

    struct {
        int m = 2;
        int n_p = 0;
        double t_pil = 0, t_ofdm = 0, trep_min = 0, trep_max = 0;
    } fs_args;
    auto* fs_cmd = app.add_subcommand("feasible-set", "repetition intervals where P[M >= m] can be non-zero");
    fs_cmd->add_option("--m", fs_args.m, "threshold m >= 2")->required();
    fs_cmd->add_option("--n-p", fs_args.n_p, "pilots per window")->required();
    fs_cmd->add_option("--t-pil", fs_args.t_pil, "pilot spacing [s]")->required();
    fs_cmd->add_option("--t-ofdm", fs_args.t_ofdm, "OFDM symbol duration [s]")->required();
    fs_cmd->add_option("--trep-min", fs_args.trep_min, "query range start [s]")->required();
    fs_cmd->add_option("--trep-max", fs_args.trep_max, "query range end [s]")->required();
    fs_cmd->add_flag("--json", common.json, "machine-readable output");

    struct {
        double t_rep = 0, t_coh = 0, t_ofdm = 0;
    } dmrs_args;
    auto* dmrs_cmd = app.add_subcommand("recommend-dmrs", "demodulation pilot spacing for a known t_rep");
    dmrs_cmd->add_option("--t-rep", dmrs_args.t_rep, "radar repetition interval [s]")->required();
    dmrs_cmd->add_option("--t-coh", dmrs_args.t_coh, "channel coherence time [s]")->required();
    dmrs_cmd->add_option("--t-ofdm", dmrs_args.t_ofdm, "OFDM symbol duration [s]")->required();
    dmrs_cmd->add_flag("--json", common.json, "machine-readable output");

    std::string scheme = "min";
    auto* scsi_cmd = app.add_subcommand("scsi-accuracy", "probability that limited feedback sees the interference channel");
    add_scenario_options(scsi_cmd, scenario);
    scsi_cmd->add_option("--scheme", scheme, "min or avg")->check(CLI::IsMember({"min", "avg"}));
    scsi_cmd->add_flag("--json", common.json, "machine-readable output");

    struct {
        std::string axis = "t_rep";
        double start = 0, stop = 0, step = 0;
        int count = 100;
        std::vector<int> m_list{1};
        bool m_half = false;
        bool no_offset = false;
    } sweep_args;
    auto* sweep_cmd = app.add_subcommand("sweep", "parameter sweep to CSV");
    add_scenario_options(sweep_cmd, scenario);
    add_output_options(sweep_cmd, common);
    sweep_cmd->add_option("--axis", sweep_args.axis, "t_rep, t_csi or m")
        ->check(CLI::IsMember({"t_rep", "t_csi", "m"}));
    sweep_cmd->add_option("--start", sweep_args.start, "first axis value")->required();
    sweep_cmd->add_option("--stop", sweep_args.stop, "last axis value")->required();
    sweep_cmd->add_option("--count", sweep_args.count, "number of grid intervals");
    sweep_cmd->add_option("--step", sweep_args.step, "grid step (overrides --count)");
    sweep_cmd->add_option("--m", sweep_args.m_list, "thresholds, comma separated")->delimiter(',');
    sweep_cmd->add_flag("--m-half", sweep_args.m_half, "use m = ceil(n_p/2)");
    sweep_cmd->add_flag("--no-offset", sweep_args.no_offset, "grid on exact start + i*step");

    int preset_count = 0;
    std::vector<CLI::App*> presets;
    for (const char* name : {"fig3a", "fig3b", "fig4"}) {
        auto* cmd = app.add_subcommand(name, std::string("preset sweep ") + name + " to CSV");
        add_output_options(cmd, common);
        cmd->add_option("--count", preset_count, "grid intervals (0 = preset default)");
        presets.push_back(cmd);
    }

    int n_configs = 100;
    auto* validate_cmd = app.add_subcommand("validate", "randomized cross-check of every invariant");
    add_output_options(validate_cmd, common);
    validate_cmd->add_option("--configs", n_configs, "number of random scenarios");
    common.mc_samples = 0;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (*prob) {
            const Scenario s = load_validated(scenario);
            std::vector<int> ms;
            if (m != 0) {
                ms.push_back(m);
            } else {
                for (int k = 1; k <= s.n_p(); ++k) ms.push_back(k);
            }
            const CoverageProfile profile = coverage_profile(s);
            std::vector<std::uint64_t> histogram;
            if (common.mc_samples > 0) histogram = sample_hit_histogram(s, common.mc_samples, common.seed);

            nlohmann::json doc{{"scenario", to_json(s.config())},
                               {"t_csi", s.t_csi()},
                               {"n_r", s.n_r()},
                               {"reports", nlohmann::json::array()}};
            for (int k : ms) {
                const ProbabilityReport r = prob_at_least(s, profile, k);
                nlohmann::json entry = to_json(r);
                if (!histogram.empty()) {
                    entry["monte_carlo"] = to_json(estimate_at_least(histogram, k, common.seed));
                }
                doc["reports"].push_back(entry);
                if (!common.json) {
                    print_report(std::cout, r);
                    if (!histogram.empty()) {
                        const auto mc = estimate_at_least(histogram, k, common.seed);
                        std::cout << "     mc=" << format_real(mc.estimate) << " +/- "
                                  << format_real(mc.std_error) << " (" << mc.rng << ", seed "
                                  << mc.seed << ")\n";
                    }
                }
            }
            if (common.json) std::cout << doc.dump(2) << '\n';
            return kExitOk;
        }

        if (*bounds_cmd) {
            const Scenario s = load_validated(scenario);
            nlohmann::json doc = nlohmann::json::array();
            for (int k = (m ? m : 1); k <= (m ? m : s.n_p()); ++k) {
                const Bounds b = bounds(s, k);
                doc.push_back({{"m", k}, {"lower", b.lower}, {"upper", b.upper}});
                if (!common.json) {
                    std::cout << "m=" << k << "  lower=" << format_real(b.lower)
                              << "  upper=" << format_real(b.upper) << '\n';
                }
            }
            if (common.json) std::cout << doc.dump(2) << '\n';
            return kExitOk;
        }

        if (*fs_cmd) {
            const FeasibleSet fs = feasible_set(fs_args.m, fs_args.n_p, fs_args.t_pil, fs_args.t_ofdm,
                                                fs_args.trep_min, fs_args.trep_max);
            if (common.json) {
                std::cout << to_json(fs).dump(2) << '\n';
            } else {
                std::cout << "m=" << fs.m << " n_p=" << fs.n_p << " k_max=" << fs.k_max
                          << " q_max=" << fs.q_max << " measure=" << format_real(fs.set.measure())
                          << '\n';
                for (const Interval& iv : fs.set.intervals()) {
                    std::cout << "  (" << format_real(iv.lo) << ", " << format_real(iv.hi) << ")\n";
                }
            }
            return kExitOk;
        }

        if (*dmrs_cmd) {
            const DmrsRecommendation r = recommend_dmrs(dmrs_args.t_rep, dmrs_args.t_coh, dmrs_args.t_ofdm);
            if (common.json) {
                std::cout << to_json(r).dump(2) << '\n';
            } else {
                std::cout << "k_opt=" << r.k_opt << "  t_dmrs=" << format_real(r.t_dmrs)
                          << "  p_interference=" << format_real(r.p_interference)
                          << "  coherence_ok=" << (r.coherence_ok ? "true" : "false") << '\n';
            }
            return kExitOk;
        }

        if (*scsi_cmd) {
            const Scenario s = load_validated(scenario);
            const ScsiAccuracy a =
                scsi_accuracy(s, scheme == "avg" ? FeedbackScheme::Avg : FeedbackScheme::Min);
            if (common.json) {
                std::cout << to_json(a).dump(2) << '\n';
            } else {
                std::cout << "scheme=" << label(a.scheme) << "  m=" << a.threshold_m
                          << "  p_accurate=" << format_real(a.p_accurate) << '\n';
            }
            return kExitOk;
        }

        if (*sweep_cmd) {
            SweepSpec spec;
            spec.axis = parse_axis(sweep_args.axis);
            spec.base = build_config(scenario, spec.axis != SweepAxis::TRep);
            spec.start = sweep_args.start;
            spec.stop = sweep_args.stop;
            spec.count = sweep_args.count;
            if (sweep_args.step > 0.0) {
                spec.count = static_cast<int>(tolerant_ceil((spec.stop - spec.start) / sweep_args.step));
            }
            spec.half_step_offset = !sweep_args.no_offset;
            spec.m_list = sweep_args.m_list;
            spec.m_half_window = sweep_args.m_half;
            spec.with_mc = common.mc_samples > 0;
            spec.mc_samples = common.mc_samples;
            spec.seed = common.seed;
            const auto rows = run_sweep(spec);
            Output out(common.out_path);
            write_sweep_csv(out.stream(), spec.axis, rows,
                            csv_options(common, run_comment("sweep axis=" + sweep_args.axis, common)));
            return kExitOk;
        }

        for (std::size_t i = 0; i < presets.size(); ++i) {
            if (!*presets[i]) continue;
            const PresetOptions opt{.count = preset_count, .mc_samples = common.mc_samples, .seed = common.seed};
            const auto specs = i == 0 ? preset_fig3a(opt) : i == 1 ? preset_fig3b(opt) : preset_fig4(opt);
            const auto rows = run_sweeps(specs);
            Output out(common.out_path);
            write_sweep_csv(out.stream(), SweepAxis::TRep, rows,
                            csv_options(common, run_comment(presets[i]->get_name(), common)));
            return kExitOk;
        }

        if (*validate_cmd) {
            const std::uint64_t samples = common.mc_samples > 0 ? common.mc_samples : 1000000;
            Common effective = common;
            effective.mc_samples = samples;
            const ValidationReport report = run_validation(n_configs, samples, common.seed);
            Output out(common.out_path);
            write_validation_csv(out.stream(), report,
                                 csv_options(common, run_comment("validate configs=" + std::to_string(n_configs), effective)));
            write_validation_summary(std::cerr, report);
            return report.ok() ? kExitOk : kExitValidationFailed;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
    return kExitBadInput;
}
