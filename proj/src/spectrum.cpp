#include "hhg1d/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hhg1d {

std::vector<double> pchip_interpolate(const std::vector<double>& x,
                                      const std::vector<double>& y,
                                      const std::vector<double>& xq) {
    const std::size_t n = x.size();
    if (n < 2 || y.size() != n) throw std::invalid_argument("pchip: need >= 2 nodes");
    for (std::size_t i = 1; i < n; ++i)
        if (!(x[i] > x[i - 1])) throw std::invalid_argument("pchip: nodes must ascend");

    std::vector<double> h(n - 1), delta(n - 1), d(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = x[i + 1] - x[i];
        delta[i] = (y[i + 1] - y[i]) / h[i];
    }
    // Fritsch-Carlson slopes: harmonic weighting inside, one-sided limited ends.
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (delta[i - 1] * delta[i] <= 0.0) {
            d[i] = 0.0;
        } else {
            const double w1 = 2.0 * h[i] + h[i - 1];
            const double w2 = h[i] + 2.0 * h[i - 1];
            d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
        }
    }
    auto end_slope = [](double h0, double h1, double d0, double d1) {
        double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (s * d0 <= 0.0)
            s = 0.0;
        else if (d0 * d1 < 0.0 && std::abs(s) > 3.0 * std::abs(d0))
            s = 3.0 * d0;
        return s;
    };
    d[0] = end_slope(h[0], h[1 < n - 1 ? 1 : 0], delta[0], delta[1 < n - 1 ? 1 : 0]);
    d[n - 1] = end_slope(h[n - 2], h[n > 2 ? n - 3 : n - 2], delta[n - 2],
                         delta[n > 2 ? n - 3 : n - 2]);

    std::vector<double> out(xq.size());
    for (std::size_t q = 0; q < xq.size(); ++q) {
        double t = std::clamp(xq[q], x.front(), x.back());
        const auto it = std::upper_bound(x.begin(), x.end(), t);
        std::size_t i = std::min<std::size_t>(n - 2, it == x.begin() ? 0 : (it - x.begin() - 1));
        const double s = (t - x[i]) / h[i];
        const double s2 = s * s, s3 = s2 * s;
        out[q] = y[i] * (2 * s3 - 3 * s2 + 1) + h[i] * d[i] * (s3 - 2 * s2 + s) +
                 y[i + 1] * (-2 * s3 + 3 * s2) + h[i] * d[i + 1] * (s3 - s2);
    }
    return out;
}

void fft_radix2(std::vector<std::complex<double>>& data) {
    const std::size_t n = data.size();
    if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("fft: size must be a power of two");
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> wlen = std::polar(1.0, ang);
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w = 1.0;
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = data[i + k];
                const std::complex<double> v = data[i + k + len / 2] * w;
                data[i + k] = u + v;
                data[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

Spectrum hhg_spectrum(const CurrentRecord& record, GaugeChoice gauge, const PulseSpec& pulse,
                      int n_fft) {
    if (record.samples.size() < 64)
        throw std::invalid_argument("hhg_spectrum: need at least 64 time samples");
    if (n_fft < 2 || (n_fft & (n_fft - 1)) != 0)
        throw std::invalid_argument("hhg_spectrum: n_fft must be a power of two");

    std::vector<double> t, j;
    t.reserve(record.samples.size());
    j.reserve(record.samples.size());
    for (const auto& s : record.samples) {
        t.push_back(s.t);
        j.push_back(gauge == GaugeChoice::velocity ? s.j_total_v : s.j_total_l);
    }
    const double t0 = t.front(), t1 = t.back();
    std::vector<double> tq(n_fft);
    for (int i = 0; i < n_fft; ++i)
        tq[i] = t0 + (t1 - t0) * static_cast<double>(i) / n_fft;
    const std::vector<double> ju = pchip_interpolate(t, j, tq);

    std::vector<std::complex<double>> data(n_fft);
    for (int i = 0; i < n_fft; ++i) {
        const double hann =
            0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * i / (n_fft - 1)));
        data[i] = ju[i] * hann;
    }
    fft_radix2(data);

    const double dt = (t1 - t0) / n_fft;
    const double domega = 2.0 * std::numbers::pi / (n_fft * dt);
    Spectrum sp;
    sp.harmonic_order.resize(n_fft / 2);
    sp.power.resize(n_fft / 2);
    for (int k = 0; k < n_fft / 2; ++k) {
        sp.harmonic_order[k] = k * domega / pulse.omega;
        sp.power[k] = std::norm(data[k]);
    }
    return sp;
}

}  // namespace hhg1d
