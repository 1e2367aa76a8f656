#ifndef HHG1D_CONFIG_HPP
#define HHG1D_CONFIG_HPP

#include <string>

#include "hhg1d/potential.hpp"
#include "hhg1d/propagate.hpp"

namespace hhg1d {

// Config-facing quantities keep the external units they are written in
// (nm, eV, fs, GV/m, um); conversion to atomic units happens in the builders.
struct RunConfig {
    struct Potential {
        std::string kind = "v1";
        double depth_ev = 25.0;
        double a_nm = 0.5;
        std::array<double, 2> centers{-0.2, 0.107};
        double width_scale = 0.15;
        double x0_bohr = 0.2475;
        double depth_scale = 1.0;
        bool calibrate = false;
        double target_gap_ev = 3.2;
        int n0 = 0;  // 0 = automatic valence-band rule
    } potential;

    struct Grid {
        int n_points = 256;  // real-space / plane-wave modes, even
        int m_points = 201;  // k-points including both zone edges
        int n_bands = 8;
    } grid;

    struct Pulse {
        double lambda_um = 3.0;
        double duration_fs = 300.0;
        double f0_gvm = 1.0;
        double a0_au = 0.0;  // 0 = derive A0 = F0/omega
    } pulse;

    struct Run {
        std::string ensemble = "full_band";  // or "single_k"
        int steps_per_cycle = 2048;
        std::string integrator = "cf4";  // or "rk4"
        int threads = 0;                 // 0 = env/hardware
        std::string out_dir = "out";
        long seed = 0;  // reserved, unused by the physics
        double gauge_tolerance = 5e-2;  // run-level gate on delta_J (full record)
    } run;

    struct Output {
        bool bands_csv = true;
        bool currents_csv = true;
        bool spectrum_csv = true;
        bool gauge_csv = true;
        bool metadata = true;
        bool svg = false;
    } output;

    void validate() const;  // throws std::invalid_argument naming the field

    PotentialSpec make_potential_spec() const;
    PulseSpec make_pulse_spec() const;
    EnsembleSpec::Mode ensemble_mode() const;
    Integrator integrator_kind() const;
};

// Structured key-value file (JSON object per section). Empty file = defaults.
// Unknown keys are rejected with their path; parse errors carry position info.
RunConfig parse_config(const std::string& path);
RunConfig parse_config_text(const std::string& text);
std::string serialize_config(const RunConfig& cfg);

}  // namespace hhg1d

#endif
