#ifndef HHG1D_UNITS_HPP
#define HHG1D_UNITS_HPP

#include <string_view>

// Internal unit system: Hartree atomic units (hbar = m_e = 1, e0 = -1).
// All physics kernels work in these units; conversions happen once at the
// config boundary and once at CSV output.

namespace hhg1d::units {

inline constexpr double hbar = 1.0;
inline constexpr double m_e = 1.0;
inline constexpr double e0 = -1.0;  // electron charge, negative

// CODATA 2018
inline constexpr double bohr_per_nm = 10.0 / 0.529177210903;
inline constexpr double bohr_per_um = 1.0e4 / 0.529177210903;
inline constexpr double hartree_per_eV = 1.0 / 27.211386245988;
inline constexpr double au_time_per_fs = 1.0e-15 / 2.4188843265857e-17;
inline constexpr double au_field_per_GVm = 1.0e9 / 5.14220674763e11;
inline constexpr double speed_of_light = 137.035999084;

enum class Unit { nm, um, eV, fs, gv_per_m };

// Accepts the config-facing tags: "nm", "um"/"μm", "eV", "fs", "GV/m".
// Throws std::invalid_argument on anything else.
Unit parse_unit(std::string_view tag);

double to_internal(double value, Unit u);
double from_internal(double value, Unit u);

}  // namespace hhg1d::units

#endif
