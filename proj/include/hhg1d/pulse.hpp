#ifndef HHG1D_PULSE_HPP
#define HHG1D_PULSE_HPP

#include <vector>

namespace hhg1d {

// A(t) = A0 sin^2(pi t / T) cos(omega t) on [0, T], identically zero outside;
// F(t) = -dA/dt. All values in atomic units.
struct PulseSpec {
    double lambda = 0.0;    // wavelength, Bohr
    double omega = 0.0;     // carrier angular frequency
    double duration = 0.0;  // T
    double f0 = 0.0;        // quoted peak field
    double a0 = 0.0;        // vector-potential amplitude

    double carrier_period() const;

    // a0_override <= 0 applies the default mapping A0 = F0 / omega.
    static PulseSpec make(double lambda, double duration, double f0, double a0_override = 0.0);
};

double vector_potential(const PulseSpec& p, double t);
double electric_field(const PulseSpec& p, double t);

// Gauge-commensurate instant: -e0 A(t_m)/hbar = shift * dk, i.e. the shift tag
// is the k-grid displacement of the length-gauge crystal momentum.
struct GaugeTime {
    double t = 0.0;
    int shift = 0;
};

// All commensurate instants in [0, T], ascending, t = 0 and t = T included
// (shift 0). Crossings are bracketed on a dense scan and refined by bisection
// until |(-e0 A/hbar)/dk - shift| <= 1e-12.
std::vector<GaugeTime> gauge_times(const PulseSpec& p, double dk, int scan_per_cycle = 256);

int max_abs_shift(const std::vector<GaugeTime>& times);

}  // namespace hhg1d

#endif
