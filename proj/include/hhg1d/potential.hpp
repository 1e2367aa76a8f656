#ifndef HHG1D_POTENTIAL_HPP
#define HHG1D_POTENTIAL_HPP

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace hhg1d {

enum class PotentialKind { v1, v2, free_electron };

// All lengths in Bohr, energies in Hartree. `centers` and `width_scale` are
// fractions of the lattice constant (V1); `x0` is in Bohr (V2).
struct PotentialSpec {
    PotentialKind kind = PotentialKind::v1;
    double depth = 0.0;
    double a = 0.0;
    std::array<double, 2> centers{-0.2, 0.107};
    double width_scale = 0.15;
    double x0 = 0.2475;
    double depth_scale = 1.0;

    void validate() const;  // throws std::invalid_argument
};

// Single-motif formulas as printed, not periodized. eval_cell dispatches on kind.
double eval_cell_v1(const PotentialSpec& spec, double x);
double eval_cell_v2(const PotentialSpec& spec, double x);
double eval_cell(const PotentialSpec& spec, double x);

struct PotentialSamples {
    double a = 0.0;
    std::vector<double> x;       // x_m = -a/2 + m*a/N, m = 0..N-1
    std::vector<double> values;  // Hartree
    int images_used = 0;
};

// Image sum over lattice translates; the number of images grows until the
// omitted tail is below 1e-12 * depth. Exactly a-periodic by construction.
PotentialSamples periodize(const PotentialSpec& spec, int n_points);

struct CalibrationResult {
    double depth_scale = 1.0;
    double achieved_gap = 0.0;  // Hartree
    double raw_gap = 0.0;       // gap at the input spec's depth_scale
    int iterations = 0;
};

// Bisection on depth_scale in [0.25, 4] until the solver-reported direct gap
// matches target_gap within 1e-3 eV. `gap_of` is the band-solver handle.
// Throws std::runtime_error when the target is not bracketed.
CalibrationResult calibrate_gap(const PotentialSpec& spec, double target_gap,
                                const std::function<double(const PotentialSpec&)>& gap_of);

std::string to_string(PotentialKind k);
PotentialKind potential_kind_from_string(const std::string& s);

}  // namespace hhg1d

#endif
