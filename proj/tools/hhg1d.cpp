#include <CLI11.hpp>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <string>

#include "hhg1d/pipeline.hpp"

namespace {

hhg1d::RunConfig load(const std::string& config_path, const std::string& out_dir, int threads,
                      bool plot) {
    hhg1d::RunConfig cfg =
        config_path.empty() ? hhg1d::RunConfig{} : hhg1d::parse_config(config_path);
    if (!out_dir.empty()) cfg.run.out_dir = out_dir;
    if (threads > 0) cfg.run.threads = threads;
    if (plot) cfg.output.svg = true;
    cfg.validate();
    return cfg;
}

void print_summary(const hhg1d::RunSummary& s) {
    std::printf("n0=%d  gap=%.6g eV (raw %.6g eV, depth_scale %.6g)\n", s.n0, s.gap_ev,
                s.raw_gap_ev, s.depth_scale);
    std::printf("gauge times: %d  s_max=%d  A0=%.6g a.u.  peak|F|=%.6g GV/m\n",
                s.n_gauge_times, s.s_max, s.a0_au, s.achieved_max_abs_f_gvm);
    std::printf("norm drift max: %.3e   max norm defect: %.3e\n", s.norm_drift_max,
                s.max_norm_defect);
    std::printf("delta_J=%.6e  delta_j=%.6e  delta_P=%.6e\n", s.deltas.delta_total,
                s.deltas.delta_intra, s.deltas.delta_inter);
    std::printf("acceleration-theorem displacement check: %s (max pattern mismatch %.3g)\n",
                s.displacement_ok ? "ok" : "FAILED", s.max_pattern_mismatch);
    std::printf("wall time: %.1f s\n", s.wall_seconds_total);
    if (!s.checks_passed) {
        std::printf("FAILED checks:");
        for (const auto& f : s.failed_checks) std::printf(" %s", f.c_str());
        std::printf("\n");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"1D crystal high-harmonic generation: velocity-gauge propagation with exact "
                 "length-gauge transforms at lattice-commensurate times"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string config_path, out_dir, in_csv;
    int threads = 0;
    bool plot = false;
    app.add_option("--config", config_path, "config file (JSON sections)");
    app.add_option("--out-dir", out_dir, "output directory (overrides config)");
    app.add_option("--threads", threads, "worker threads (0 = HHG1D_THREADS or hardware)");
    app.add_flag("--plot", plot, "also emit SVG plots");

    auto* cmd_bands = app.add_subcommand("bands", "band structure only -> bands.csv");
    auto* cmd_matels = app.add_subcommand("matels", "matrix-element summaries -> matels_*.csv");
    auto* cmd_run = app.add_subcommand("run", "full pipeline -> currents.csv, spectrum.csv, ...");
    auto* cmd_gauge = app.add_subcommand("gauge-check", "full run, gauge_report.csv only");
    auto* cmd_spec = app.add_subcommand("spectrum", "spectrum from an existing currents.csv");
    cmd_spec->add_option("--input", in_csv, "currents.csv produced by `run`")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        const hhg1d::RunConfig cfg = load(config_path, out_dir, threads, plot);
        if (cmd_bands->parsed()) {
            hhg1d::write_bands_csv(cfg);
        } else if (cmd_matels->parsed()) {
            hhg1d::write_matels_csv(cfg);
        } else if (cmd_run->parsed()) {
            const hhg1d::RunSummary s = hhg1d::run_pipeline(cfg);
            print_summary(s);
            return s.checks_passed ? 0 : 1;
        } else if (cmd_gauge->parsed()) {
            const hhg1d::RunSummary s = hhg1d::write_gauge_report(cfg);
            print_summary(s);
            return s.checks_passed ? 0 : 1;
        } else if (cmd_spec->parsed()) {
            const std::string out = (cfg.run.out_dir.empty() ? std::string(".") : cfg.run.out_dir) +
                                    "/spectrum.csv";
            std::filesystem::create_directories(cfg.run.out_dir);
            hhg1d::spectrum_from_csv(in_csv, cfg, out, cfg.output.svg);
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
