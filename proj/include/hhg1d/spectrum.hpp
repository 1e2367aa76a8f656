#ifndef HHG1D_SPECTRUM_HPP
#define HHG1D_SPECTRUM_HPP

#include <complex>
#include <vector>

#include "hhg1d/observables.hpp"

namespace hhg1d {

struct Spectrum {
    std::vector<double> harmonic_order;  // omega / omega_carrier
    std::vector<double> power;           // |windowed FT of J(t)|^2, arbitrary norm
};

enum class GaugeChoice { velocity, length };

// Monotone cubic (Fritsch-Carlson) interpolation of (x, y) evaluated at xq;
// x must be strictly ascending.
std::vector<double> pchip_interpolate(const std::vector<double>& x,
                                      const std::vector<double>& y,
                                      const std::vector<double>& xq);

// In-place radix-2 FFT; size must be a power of two.
void fft_radix2(std::vector<std::complex<double>>& data);

// Resamples J(t_m) from the non-uniform gauge times onto a uniform n_fft grid,
// applies a Hann window, and returns power vs harmonic order. Requires at
// least 64 samples.
Spectrum hhg_spectrum(const CurrentRecord& record, GaugeChoice gauge, const PulseSpec& pulse,
                      int n_fft = 4096);

}  // namespace hhg1d

#endif
