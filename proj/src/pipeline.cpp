#include "hhg1d/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <sstream>

#include "hhg1d/csv.hpp"
#include "hhg1d/parallel.hpp"
#include "hhg1d/svg.hpp"
#include "hhg1d/units.hpp"

namespace hhg1d {

namespace fs = std::filesystem;
using nlohmann::json;

PreparedSystem prepare_system(const RunConfig& cfg, bool need_matels) {
    cfg.validate();
    PreparedSystem sys;
    sys.threads = resolve_threads(cfg.run.threads);
    sys.spec = cfg.make_potential_spec();
    sys.grid = KGrid::make(sys.spec.a, cfg.grid.m_points);

    sys.n0 = cfg.potential.n0 > 0
                 ? cfg.potential.n0
                 : default_valence_band(sys.spec, cfg.grid.n_points, sys.grid, sys.threads);

    auto gap_of = [&](const PotentialSpec& p) {
        const PotentialSamples s = periodize(p, cfg.grid.n_points);
        const int nb = std::min(cfg.grid.n_points, sys.n0 + 2);
        const BandStructure b = compute_band_structure(sys.grid, s, nb, sys.threads);
        return b.direct_gap(sys.n0);
    };

    if (cfg.potential.calibrate && sys.spec.kind != PotentialKind::free_electron) {
        const double target = units::to_internal(cfg.potential.target_gap_ev, units::Unit::eV);
        sys.calibration = calibrate_gap(sys.spec, target, gap_of);
        sys.spec.depth_scale = sys.calibration->depth_scale;
    }

    sys.samples = periodize(sys.spec, cfg.grid.n_points);
    sys.bands = compute_band_structure(sys.grid, sys.samples, cfg.grid.n_bands, sys.threads);
    sys.raw_gap = sys.n0 < cfg.grid.n_bands ? sys.bands.direct_gap(sys.n0) : 0.0;
    sys.pulse = cfg.make_pulse_spec();
    sys.times = gauge_times(sys.pulse, sys.grid.dk);
    if (need_matels)
        sys.matels = build_matrix_elements(sys.bands, max_abs_shift(sys.times), sys.threads);
    return sys;
}

void write_currents_csv_file(const std::string& path, const CurrentRecord& record) {
    CsvWriter csv({"t", "s", "A", "F", "J_v", "j_v", "Pdot_v", "J_l", "j_l", "Pdot_l"});
    for (const auto& s : record.samples)
        csv.add_row({s.t, static_cast<double>(s.shift), s.a_field, s.e_field, s.j_total_v,
                     s.j_intra_v, s.j_inter_v, s.j_total_l, s.j_intra_l, s.j_inter_l});
    csv.write(path);
}

CurrentRecord read_currents_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty currents csv");
    CurrentRecord rec;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string cell;
        std::vector<double> v;
        while (std::getline(ss, cell, ',')) v.push_back(std::stod(cell));
        if (v.size() != 10) throw std::runtime_error("currents csv: expected 10 columns");
        CurrentSample s;
        s.t = v[0];
        s.shift = static_cast<int>(v[1]);
        s.a_field = v[2];
        s.e_field = v[3];
        s.j_total_v = v[4];
        s.j_intra_v = v[5];
        s.j_inter_v = v[6];
        s.j_total_l = v[7];
        s.j_intra_l = v[8];
        s.j_inter_l = v[9];
        rec.samples.push_back(s);
    }
    return rec;
}

namespace {

void write_bands_file(const std::string& path, const BandStructure& bands) {
    CsvWriter csv({"k", "n", "E"});  // k in 1/Bohr, E in eV
    for (int j = 0; j < bands.grid.m_points; ++j)
        for (int n = 0; n < bands.n_bands; ++n)
            csv.add_row({bands.grid.k_at(j), static_cast<double>(n + 1),
                         units::from_internal(bands.blocks[j].energy[n], units::Unit::eV)});
    csv.write(path);
}

struct GaugeReportRow {
    double t;
    int shift;
    double norm_defect;
    int displacement;
    double mismatch;
    bool pass;
};

double measured_peak_field(const PulseSpec& pulse) {
    const int n = 20000;
    double fmax = 0.0;
    for (int i = 0; i <= n; ++i)
        fmax = std::max(fmax, std::abs(electric_field(pulse, pulse.duration * i / n)));
    return fmax;
}

}  // namespace

RunSummary run_pipeline(const RunConfig& cfg) {
    const auto t_start = std::chrono::steady_clock::now();
    PreparedSystem sys = prepare_system(cfg);

    const EnsembleSpec ens{cfg.ensemble_mode(), sys.n0};
    PropagationOptions opts;
    opts.steps_per_cycle = cfg.run.steps_per_cycle;
    opts.integrator = cfg.integrator_kind();

    std::vector<double> sample_ts(sys.times.size());
    for (std::size_t i = 0; i < sys.times.size(); ++i) sample_ts[i] = sys.times[i].t;

    const std::vector<BlockHistory> histories =
        propagate_ensemble(sys.bands, sys.matels, sys.pulse, ens, sample_ts, opts, sys.threads);

    CurrentNormalization norm;
    norm.volume = sys.grid.a * sys.grid.unique_points();
    norm.n_occupied = static_cast<double>(histories.size());

    const CurrentRecord record = assemble_record(histories, sys.times, sys.grid, sys.matels,
                                                 sys.pulse, norm, sys.threads);

    // gauge report rows + acceleration-theorem checks, parallel over times
    std::vector<GaugeReportRow> rows(sys.times.size());
    parallel_for(static_cast<int>(sys.times.size()), sys.threads, [&](int m) {
        const GaugeSnapshot snap =
            snapshot_ensemble(sys.grid, sys.matels, histories, m, sys.times[m]);
        const ShiftCheck chk = population_shift_check(sys.grid, snap, histories);
        rows[m] = {sys.times[m].t, sys.times[m].shift, snap.max_norm_defect,
                   chk.displacement, chk.pattern_mismatch_fraction, chk.passed()};
    });

    RunSummary sum;
    sum.n0 = sys.n0;
    sum.depth_scale = sys.spec.depth_scale;
    sum.raw_gap_ev = units::from_internal(
        sys.calibration ? sys.calibration->raw_gap : sys.raw_gap, units::Unit::eV);
    sum.gap_ev = units::from_internal(sys.raw_gap, units::Unit::eV);
    sum.s_max = max_abs_shift(sys.times);
    sum.n_gauge_times = static_cast<int>(sys.times.size());
    for (const auto& h : histories)
        sum.norm_drift_max = std::max(sum.norm_drift_max, h.max_norm_drift);
    sum.max_norm_defect = record.max_norm_defect();
    sum.max_imag_residue = record.max_imag_residue();
    sum.displacement_ok = true;
    for (const auto& r : rows) {
        sum.displacement_ok = sum.displacement_ok && r.pass;
        sum.max_pattern_mismatch = std::max(sum.max_pattern_mismatch, r.mismatch);
    }
    sum.deltas = gauge_discrepancy(record);
    sum.a0_au = sys.pulse.a0;
    sum.omega_au = sys.pulse.omega;
    sum.achieved_max_abs_f_gvm =
        units::from_internal(measured_peak_field(sys.pulse), units::Unit::gv_per_m);
    sum.k_excursion_fraction =
        (-units::e0 * sys.pulse.a0 / units::hbar) / (std::numbers::pi / sys.grid.a);

    const double j_scale = std::max(record.max_abs_total_v(), 1e-300);
    auto check = [&](bool ok, const std::string& name) {
        if (!ok) sum.failed_checks.push_back(name);
    };
    check(sum.norm_drift_max <= 1e-6, "norm_drift");
    check(sum.max_imag_residue <= 1e-10 * j_scale, "current_imag_residue");
    check(sum.displacement_ok, "population_shift");
    check(sum.deltas.delta_total <= cfg.run.gauge_tolerance, "gauge_invariance");
    sum.checks_passed = sum.failed_checks.empty();

    // artifacts
    const fs::path out_dir(cfg.run.out_dir);
    fs::create_directories(out_dir);
    if (cfg.output.bands_csv) write_bands_file((out_dir / "bands.csv").string(), sys.bands);
    if (cfg.output.currents_csv)
        write_currents_csv_file((out_dir / "currents.csv").string(), record);
    Spectrum sp;
    const bool have_spectrum = record.samples.size() >= 64;
    if (have_spectrum) sp = hhg_spectrum(record, GaugeChoice::velocity, sys.pulse);
    if (cfg.output.spectrum_csv && have_spectrum) {
        CsvWriter csv({"harmonic_order", "power"});
        for (std::size_t i = 0; i < sp.power.size(); ++i)
            csv.add_row({sp.harmonic_order[i], sp.power[i]});
        csv.write((out_dir / "spectrum.csv").string());
    }
    if (cfg.output.gauge_csv) {
        CsvWriter csv({"t", "s", "max_norm_defect", "displacement", "pattern_mismatch", "pass"});
        for (const auto& r : rows)
            csv.add_row({r.t, static_cast<double>(r.shift), r.norm_defect,
                         static_cast<double>(r.displacement), r.mismatch,
                         r.pass ? 1.0 : 0.0});
        csv.write((out_dir / "gauge_report.csv").string());
    }
    if (cfg.output.svg) {
        write_currents_svg((out_dir / "fig1.svg").string(), record, sys.pulse);
        if (have_spectrum) write_spectrum_svg((out_dir / "spectrum.svg").string(), sp);
    }

    sum.wall_seconds_total =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();

    if (cfg.output.metadata) {
        json meta;
        meta["config"] = json::parse(serialize_config(cfg));
        meta["n0"] = sum.n0;
        meta["depth_scale"] = sum.depth_scale;
        meta["raw_gap_ev"] = sum.raw_gap_ev;
        meta["achieved_gap_ev"] = sum.gap_ev;
        meta["calibrated"] = sys.calibration.has_value();
        meta["s_max"] = sum.s_max;
        meta["n_gauge_times"] = sum.n_gauge_times;
        meta["norm_drift_max"] = sum.norm_drift_max;
        meta["max_norm_defect"] = sum.max_norm_defect;
        meta["max_imag_residue"] = sum.max_imag_residue;
        meta["delta_J"] = sum.deltas.delta_total;
        meta["delta_j"] = sum.deltas.delta_intra;
        meta["delta_P"] = sum.deltas.delta_inter;
        meta["displacement_ok"] = sum.displacement_ok;
        meta["max_pattern_mismatch"] = sum.max_pattern_mismatch;
        meta["a0_au"] = sum.a0_au;
        meta["omega_au"] = sum.omega_au;
        meta["achieved_max_abs_f_gvm"] = sum.achieved_max_abs_f_gvm;
        meta["k_excursion_fraction_of_half_zone"] = sum.k_excursion_fraction;
        json defects = json::array();
        for (int s = 0; s <= sys.matels.max_shift; ++s)
            defects.push_back(sys.matels.max_unitarity_defect(s));
        meta["unitarity_defect_by_shift"] = defects;
        meta["checks_passed"] = sum.checks_passed;
        meta["failed_checks"] = sum.failed_checks;
        meta["wall_seconds_total"] = sum.wall_seconds_total;
        std::ofstream f(out_dir / "run_metadata.json");
        f << meta.dump(2) << '\n';
    }
    return sum;
}

void write_bands_csv(const RunConfig& cfg) {
    PreparedSystem sys = prepare_system(cfg, /*need_matels=*/false);
    fs::create_directories(cfg.run.out_dir);
    write_bands_file((fs::path(cfg.run.out_dir) / "bands.csv").string(), sys.bands);
}

void write_matels_csv(const RunConfig& cfg) {
    PreparedSystem sys = prepare_system(cfg);
    fs::create_directories(cfg.run.out_dir);
    {
        CsvWriter csv({"k", "p_max", "hermiticity_defect"});
        for (int j = 0; j < sys.grid.m_points; ++j) {
            const Eigen::MatrixXcd& p = sys.matels.momentum_at(j);
            csv.add_row({sys.grid.k_at(j), p.cwiseAbs().maxCoeff(),
                         (p - p.adjoint()).cwiseAbs().maxCoeff()});
        }
        csv.write((fs::path(cfg.run.out_dir) / "matels_momentum.csv").string());
    }
    {
        CsvWriter csv({"shift", "max_unitarity_defect"});
        for (int s = -sys.matels.max_shift; s <= sys.matels.max_shift; ++s)
            csv.add_row({static_cast<double>(s), sys.matels.max_unitarity_defect(s)});
        csv.write((fs::path(cfg.run.out_dir) / "matels_overlap.csv").string());
    }
}

RunSummary write_gauge_report(const RunConfig& cfg) {
    RunConfig c = cfg;
    c.output.bands_csv = false;
    c.output.currents_csv = false;
    c.output.spectrum_csv = false;
    c.output.svg = false;
    c.output.gauge_csv = true;
    return run_pipeline(c);
}

void spectrum_from_csv(const std::string& currents_csv, const RunConfig& cfg,
                       const std::string& out_csv, bool svg) {
    const CurrentRecord rec = read_currents_csv(currents_csv);
    const PulseSpec pulse = cfg.make_pulse_spec();
    const Spectrum sp = hhg_spectrum(rec, GaugeChoice::velocity, pulse);
    CsvWriter csv({"harmonic_order", "power"});
    for (std::size_t i = 0; i < sp.power.size(); ++i)
        csv.add_row({sp.harmonic_order[i], sp.power[i]});
    csv.write(out_csv);
    if (svg) {
        const fs::path p(out_csv);
        write_spectrum_svg((p.parent_path() / (p.stem().string() + ".svg")).string(), sp);
    }
}

}  // namespace hhg1d
