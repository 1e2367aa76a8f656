#ifndef HHG1D_SVG_HPP
#define HHG1D_SVG_HPP

#include <string>
#include <vector>

#include "hhg1d/observables.hpp"
#include "hhg1d/spectrum.hpp"

namespace hhg1d {

// Three stacked panels: total currents in both gauges with the driving field,
// a zoom around the strongest current peak, and the intraband currents.
void write_currents_svg(const std::string& path, const CurrentRecord& record,
                        const PulseSpec& pulse);

// log10 power vs harmonic order.
void write_spectrum_svg(const std::string& path, const Spectrum& spectrum);

}  // namespace hhg1d

#endif
