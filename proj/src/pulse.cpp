#include "hhg1d/pulse.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hhg1d/units.hpp"

namespace hhg1d {

double PulseSpec::carrier_period() const { return 2.0 * std::numbers::pi / omega; }

PulseSpec PulseSpec::make(double lambda, double duration, double f0, double a0_override) {
    if (!(lambda > 0.0) || !(duration > 0.0))
        throw std::invalid_argument("pulse: wavelength and duration must be positive");
    PulseSpec p;
    p.lambda = lambda;
    p.omega = 2.0 * std::numbers::pi * units::speed_of_light / lambda;
    p.duration = duration;
    p.f0 = f0;
    p.a0 = a0_override > 0.0 ? a0_override : f0 / p.omega;
    return p;
}

double vector_potential(const PulseSpec& p, double t) {
    if (t <= 0.0 || t >= p.duration) return 0.0;
    const double env = std::sin(std::numbers::pi * t / p.duration);
    return p.a0 * env * env * std::cos(p.omega * t);
}

double electric_field(const PulseSpec& p, double t) {
    if (t <= 0.0 || t >= p.duration) return 0.0;
    const double w = p.omega, T = p.duration;
    const double s = std::sin(std::numbers::pi * t / T);
    return -p.a0 * ((std::numbers::pi / T) * std::sin(2.0 * std::numbers::pi * t / T) * std::cos(w * t)
                    - w * s * s * std::sin(w * t));
}

std::vector<GaugeTime> gauge_times(const PulseSpec& p, double dk, int scan_per_cycle) {
    if (!(dk > 0.0)) throw std::invalid_argument("gauge_times: dk must be positive");
    // g(t) in grid units of the length-gauge k displacement
    auto g = [&](double t) { return -units::e0 * vector_potential(p, t) / (units::hbar * dk); };

    const double n_cycles = p.duration / p.carrier_period();
    const long n_scan = std::max<long>(64, std::lround(std::ceil(n_cycles * scan_per_cycle)));

    std::vector<GaugeTime> out;
    out.push_back({0.0, 0});
    for (long i = 0; i < n_scan; ++i) {
        const double t_lo = p.duration * static_cast<double>(i) / n_scan;
        const double t_hi = p.duration * static_cast<double>(i + 1) / n_scan;
        const double g_lo = g(t_lo), g_hi = g(t_hi);
        const double lvl_min = std::ceil(std::min(g_lo, g_hi));
        const double lvl_max = std::floor(std::max(g_lo, g_hi));
        for (double lvl = lvl_min; lvl <= lvl_max; lvl += 1.0) {
            if (g_lo == lvl) continue;  // owned by the previous interval
            double a = t_lo, b = t_hi, fa = g_lo - lvl;
            double mid = a, fm = fa;
            for (int it = 0; it < 200; ++it) {
                mid = 0.5 * (a + b);
                fm = g(mid) - lvl;
                if (std::abs(fm) <= 1e-12 || (b - a) < 1e-16 * p.duration) break;
                if ((fa < 0.0) == (fm < 0.0)) {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
            }
            out.push_back({mid, static_cast<int>(lvl)});
        }
    }
    out.push_back({p.duration, 0});
    std::sort(out.begin(), out.end(), [](const GaugeTime& x, const GaugeTime& y) { return x.t < y.t; });
    std::vector<GaugeTime> dedup;
    dedup.push_back(out.front());
    for (std::size_t i = 1; i < out.size(); ++i) {
        if (out[i].t - dedup.back().t > 1e-10 * p.carrier_period() || out[i].shift != dedup.back().shift)
            dedup.push_back(out[i]);
    }
    return dedup;
}

int max_abs_shift(const std::vector<GaugeTime>& times) {
    int s = 0;
    for (const auto& g : times) s = std::max(s, std::abs(g.shift));
    return s;
}

}  // namespace hhg1d
