#include "hhg1d/config.hpp"

#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hhg1d/units.hpp"

namespace hhg1d {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, const std::string& section,
                    const std::set<std::string>& known) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!known.count(it.key()))
            throw std::invalid_argument("config: unknown key '" + section + it.key() + "'");
}

template <typename T>
void get_to(const json& obj, const char* key, T& out) {
    if (obj.contains(key)) obj.at(key).get_to(out);
}

}  // namespace

void RunConfig::validate() const {
    auto fail = [](const std::string& field, const std::string& why) {
        throw std::invalid_argument("config: " + field + " " + why);
    };
    if (grid.n_points < 8) fail("grid.n_points", "must be >= 8");
    if (grid.n_points % 2 != 0) fail("grid.n_points", "must be even");
    if (grid.m_points < 8) fail("grid.m_points", "must be >= 8");
    if (grid.n_bands < 1 || grid.n_bands > grid.n_points)
        fail("grid.n_bands", "must satisfy 1 <= n_bands <= n_points");
    if (!(potential.a_nm > 0)) fail("potential.a_nm", "must be positive");
    if (potential.kind != "free" && !(potential.depth_ev > 0))
        fail("potential.depth_ev", "must be positive");
    if (!(potential.depth_scale > 0)) fail("potential.depth_scale", "must be positive");
    if (potential.calibrate && !(potential.target_gap_ev > 0))
        fail("potential.target_gap_ev", "must be positive");
    if (potential.n0 < 0 || potential.n0 > grid.n_bands)
        fail("potential.n0", "must be 0 (auto) or a band index <= n_bands");
    if (!(pulse.lambda_um > 0)) fail("pulse.lambda_um", "must be positive");
    if (!(pulse.duration_fs > 0)) fail("pulse.duration_fs", "must be positive");
    if (pulse.f0_gvm < 0) fail("pulse.f0_gvm", "must be nonnegative");
    if (run.ensemble != "full_band" && run.ensemble != "single_k")
        fail("run.ensemble", "must be 'full_band' or 'single_k'");
    if (run.ensemble == "single_k" && grid.m_points % 2 == 0)
        fail("grid.m_points", "must be odd for single_k so that k = 0 is on the grid");
    if (run.steps_per_cycle < 4) fail("run.steps_per_cycle", "must be >= 4");
    if (run.integrator != "cf4" && run.integrator != "rk4")
        fail("run.integrator", "must be 'cf4' or 'rk4'");
    if (run.threads < 0) fail("run.threads", "must be >= 0");
    potential_kind_from_string(potential.kind);  // throws on unknown kind
}

PotentialSpec RunConfig::make_potential_spec() const {
    PotentialSpec p;
    p.kind = potential_kind_from_string(potential.kind);
    p.depth = units::to_internal(potential.depth_ev, units::Unit::eV);
    p.a = units::to_internal(potential.a_nm, units::Unit::nm);
    p.centers = potential.centers;
    p.width_scale = potential.width_scale;
    p.x0 = potential.x0_bohr;
    p.depth_scale = potential.depth_scale;
    return p;
}

PulseSpec RunConfig::make_pulse_spec() const {
    return PulseSpec::make(units::to_internal(pulse.lambda_um, units::Unit::um),
                           units::to_internal(pulse.duration_fs, units::Unit::fs),
                           units::to_internal(pulse.f0_gvm, units::Unit::gv_per_m),
                           pulse.a0_au);
}

EnsembleSpec::Mode RunConfig::ensemble_mode() const {
    return run.ensemble == "single_k" ? EnsembleSpec::Mode::single_k
                                      : EnsembleSpec::Mode::full_band;
}

Integrator RunConfig::integrator_kind() const {
    return run.integrator == "rk4" ? Integrator::rk4 : Integrator::cf4;
}

RunConfig parse_config_text(const std::string& text) {
    json root;
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
        root = json::object();
    } else {
        try {
            root = json::parse(text);
        } catch (const json::parse_error& e) {
            throw std::invalid_argument(std::string("config: ") + e.what());
        }
    }
    if (!root.is_object()) throw std::invalid_argument("config: top level must be an object");
    reject_unknown(root, "", {"potential", "grid", "pulse", "run", "output"});

    RunConfig cfg;
    if (root.contains("potential")) {
        const json& p = root["potential"];
        reject_unknown(p, "potential.",
                       {"kind", "depth_ev", "a_nm", "centers", "width_scale", "x0_bohr",
                        "depth_scale", "calibrate", "target_gap_ev", "n0"});
        get_to(p, "kind", cfg.potential.kind);
        get_to(p, "depth_ev", cfg.potential.depth_ev);
        get_to(p, "a_nm", cfg.potential.a_nm);
        get_to(p, "centers", cfg.potential.centers);
        get_to(p, "width_scale", cfg.potential.width_scale);
        get_to(p, "x0_bohr", cfg.potential.x0_bohr);
        get_to(p, "depth_scale", cfg.potential.depth_scale);
        get_to(p, "calibrate", cfg.potential.calibrate);
        get_to(p, "target_gap_ev", cfg.potential.target_gap_ev);
        get_to(p, "n0", cfg.potential.n0);
    }
    if (root.contains("grid")) {
        const json& g = root["grid"];
        reject_unknown(g, "grid.", {"n_points", "m_points", "n_bands"});
        get_to(g, "n_points", cfg.grid.n_points);
        get_to(g, "m_points", cfg.grid.m_points);
        get_to(g, "n_bands", cfg.grid.n_bands);
    }
    if (root.contains("pulse")) {
        const json& p = root["pulse"];
        reject_unknown(p, "pulse.", {"lambda_um", "duration_fs", "f0_gvm", "a0_au"});
        get_to(p, "lambda_um", cfg.pulse.lambda_um);
        get_to(p, "duration_fs", cfg.pulse.duration_fs);
        get_to(p, "f0_gvm", cfg.pulse.f0_gvm);
        get_to(p, "a0_au", cfg.pulse.a0_au);
    }
    if (root.contains("run")) {
        const json& r = root["run"];
        reject_unknown(r, "run.",
                       {"ensemble", "steps_per_cycle", "integrator", "threads", "out_dir",
                        "seed", "gauge_tolerance"});
        get_to(r, "ensemble", cfg.run.ensemble);
        get_to(r, "steps_per_cycle", cfg.run.steps_per_cycle);
        get_to(r, "integrator", cfg.run.integrator);
        get_to(r, "threads", cfg.run.threads);
        get_to(r, "out_dir", cfg.run.out_dir);
        get_to(r, "seed", cfg.run.seed);
        get_to(r, "gauge_tolerance", cfg.run.gauge_tolerance);
    }
    if (root.contains("output")) {
        const json& o = root["output"];
        reject_unknown(o, "output.",
                       {"bands_csv", "currents_csv", "spectrum_csv", "gauge_csv", "metadata", "svg"});
        get_to(o, "bands_csv", cfg.output.bands_csv);
        get_to(o, "currents_csv", cfg.output.currents_csv);
        get_to(o, "spectrum_csv", cfg.output.spectrum_csv);
        get_to(o, "gauge_csv", cfg.output.gauge_csv);
        get_to(o, "metadata", cfg.output.metadata);
        get_to(o, "svg", cfg.output.svg);
    }
    cfg.validate();
    return cfg;
}

RunConfig parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

std::string serialize_config(const RunConfig& cfg) {
    json root;
    root["potential"] = {{"kind", cfg.potential.kind},
                         {"depth_ev", cfg.potential.depth_ev},
                         {"a_nm", cfg.potential.a_nm},
                         {"centers", cfg.potential.centers},
                         {"width_scale", cfg.potential.width_scale},
                         {"x0_bohr", cfg.potential.x0_bohr},
                         {"depth_scale", cfg.potential.depth_scale},
                         {"calibrate", cfg.potential.calibrate},
                         {"target_gap_ev", cfg.potential.target_gap_ev},
                         {"n0", cfg.potential.n0}};
    root["grid"] = {{"n_points", cfg.grid.n_points},
                    {"m_points", cfg.grid.m_points},
                    {"n_bands", cfg.grid.n_bands}};
    root["pulse"] = {{"lambda_um", cfg.pulse.lambda_um},
                     {"duration_fs", cfg.pulse.duration_fs},
                     {"f0_gvm", cfg.pulse.f0_gvm},
                     {"a0_au", cfg.pulse.a0_au}};
    root["run"] = {{"ensemble", cfg.run.ensemble},
                   {"steps_per_cycle", cfg.run.steps_per_cycle},
                   {"integrator", cfg.run.integrator},
                   {"threads", cfg.run.threads},
                   {"out_dir", cfg.run.out_dir},
                   {"seed", cfg.run.seed},
                   {"gauge_tolerance", cfg.run.gauge_tolerance}};
    root["output"] = {{"bands_csv", cfg.output.bands_csv},
                      {"currents_csv", cfg.output.currents_csv},
                      {"spectrum_csv", cfg.output.spectrum_csv},
                      {"gauge_csv", cfg.output.gauge_csv},
                      {"metadata", cfg.output.metadata},
                      {"svg", cfg.output.svg}};
    return root.dump(2);
}

}  // namespace hhg1d
