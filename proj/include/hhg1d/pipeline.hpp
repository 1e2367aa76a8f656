#ifndef HHG1D_PIPELINE_HPP
#define HHG1D_PIPELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "hhg1d/config.hpp"
#include "hhg1d/gauge.hpp"
#include "hhg1d/observables.hpp"
#include "hhg1d/spectrum.hpp"

namespace hhg1d {

// Everything the dynamics needs, built once from the config.
struct PreparedSystem {
    PotentialSpec spec;
    KGrid grid;
    PotentialSamples samples;
    BandStructure bands;
    PulseSpec pulse;
    std::vector<GaugeTime> times;
    MatrixElementSet matels;
    int n0 = 1;
    int threads = 1;
    double raw_gap = 0.0;  // Hartree; gap at the configured depth_scale
    std::optional<CalibrationResult> calibration;
};

PreparedSystem prepare_system(const RunConfig& cfg, bool need_matels = true);

struct RunSummary {
    bool checks_passed = false;
    std::vector<std::string> failed_checks;
    int n0 = 0;
    double raw_gap_ev = 0.0;
    double gap_ev = 0.0;
    double depth_scale = 1.0;
    int s_max = 0;
    int n_gauge_times = 0;
    double norm_drift_max = 0.0;
    double max_norm_defect = 0.0;
    double max_imag_residue = 0.0;
    double max_pattern_mismatch = 0.0;
    bool displacement_ok = false;
    GaugeDiscrepancy deltas;
    double a0_au = 0.0;
    double omega_au = 0.0;
    double achieved_max_abs_f_gvm = 0.0;
    double k_excursion_fraction = 0.0;  // |e0| A0 / hbar over pi/a
    double wall_seconds_total = 0.0;
};

// Full pipeline: potential -> bands -> matels -> propagate -> gauge ->
// observables -> spectrum; writes the configured artifacts into run.out_dir.
// checks_passed mirrors the internal physics checks (exit-code contract).
RunSummary run_pipeline(const RunConfig& cfg);

// Subcommand helpers.
void write_bands_csv(const RunConfig& cfg);    // bands.csv
void write_matels_csv(const RunConfig& cfg);   // matels_momentum.csv + matels_overlap.csv
RunSummary write_gauge_report(const RunConfig& cfg);  // full run, gauge_report.csv only
void spectrum_from_csv(const std::string& currents_csv, const RunConfig& cfg,
                       const std::string& out_csv, bool svg);

// Shared artifact writers (also used by tests).
void write_currents_csv_file(const std::string& path, const CurrentRecord& record);
CurrentRecord read_currents_csv(const std::string& path);

}  // namespace hhg1d

#endif
