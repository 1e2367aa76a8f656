#include "hhg1d/potential.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hhg1d {

void PotentialSpec::validate() const {
    if (kind == PotentialKind::free_electron) {
        if (!(a > 0.0)) throw std::invalid_argument("potential: a must be positive");
        return;
    }
    if (!(a > 0.0)) throw std::invalid_argument("potential: a must be positive");
    if (!(depth > 0.0)) throw std::invalid_argument("potential: depth must be positive");
    if (!(depth_scale > 0.0)) throw std::invalid_argument("potential: depth_scale must be positive");
    if (kind == PotentialKind::v1) {
        if (!(width_scale > 0.0)) throw std::invalid_argument("potential: width_scale must be positive");
        for (double c : centers)
            if (!(c > -0.5 && c < 0.5))
                throw std::invalid_argument("potential: V1 centers must lie inside (-a/2, a/2)");
    }
    if (kind == PotentialKind::v2 && !(x0 > 0.0))
        throw std::invalid_argument("potential: x0 must be positive");
}

double eval_cell_v1(const PotentialSpec& spec, double x) {
    const double d = spec.depth * spec.depth_scale;
    const double denom = spec.width_scale * spec.a;
    double v = 0.0;
    for (double c : spec.centers) {
        const double arg = std::numbers::pi * (x - c * spec.a) / denom;
        if (std::abs(arg) <= std::numbers::pi / 2) {
            const double co = std::cos(arg);
            v -= d * co * co;
        }
    }
    return v;
}

double eval_cell_v2(const PotentialSpec& spec, double x) {
    const double d = spec.depth * spec.depth_scale;
    return -d * (1.0 + std::tanh(x + spec.x0)) * (1.0 + std::tanh(-x + spec.x0));
}

double eval_cell(const PotentialSpec& spec, double x) {
    switch (spec.kind) {
        case PotentialKind::v1: return eval_cell_v1(spec, x);
        case PotentialKind::v2: return eval_cell_v2(spec, x);
        case PotentialKind::free_electron: return 0.0;
    }
    return 0.0;
}

PotentialSamples periodize(const PotentialSpec& spec, int n_points) {
    if (n_points < 8) throw std::invalid_argument("periodize: need at least 8 grid points");
    spec.validate();

    PotentialSamples s;
    s.a = spec.a;
    s.x.resize(n_points);
    s.values.assign(n_points, 0.0);
    for (int m = 0; m < n_points; ++m) s.x[m] = -spec.a / 2 + spec.a * m / n_points;

    if (spec.kind == PotentialKind::free_electron) return s;

    const double depth = spec.depth * spec.depth_scale;
    const double tail_tol = 1e-12 * depth;

    // j = 0 ring plus symmetric rings outward; stop when a whole ring falls
    // below the tail tolerance everywhere on the grid.
    for (int m = 0; m < n_points; ++m) s.values[m] = eval_cell(spec, s.x[m]);
    constexpr int j_cap = 10000;
    int j = 1;
    for (; j <= j_cap; ++j) {
        double ring_max = 0.0;
        for (int m = 0; m < n_points; ++m) {
            const double plus = eval_cell(spec, s.x[m] - j * spec.a);
            const double minus = eval_cell(spec, s.x[m] + j * spec.a);
            s.values[m] += plus + minus;
            ring_max = std::max(ring_max, std::max(std::abs(plus), std::abs(minus)));
        }
        if (ring_max < tail_tol) break;
    }
    if (j > j_cap) throw std::runtime_error("periodize: image sum did not converge");
    s.images_used = std::min(j, j_cap);
    return s;
}

CalibrationResult calibrate_gap(const PotentialSpec& spec, double target_gap,
                                const std::function<double(const PotentialSpec&)>& gap_of) {
    if (!(target_gap > 0.0)) throw std::invalid_argument("calibrate_gap: target gap must be positive");
    constexpr double tol = 1e-3 / 27.211386245988;  // 1e-3 eV

    CalibrationResult res;
    res.raw_gap = gap_of(spec);

    double lo = 0.25, hi = 4.0;
    auto at = [&](double scale) {
        PotentialSpec p = spec;
        p.depth_scale = scale;
        return gap_of(p);
    };
    const double glo = at(lo), ghi = at(hi);
    if (!((glo - target_gap) * (ghi - target_gap) <= 0.0)) {
        throw std::runtime_error(
            "calibrate_gap: target gap not bracketed; depth_scale in [0.25, 4] gives gaps in [" +
            std::to_string(std::min(glo, ghi) * 27.211386245988) + ", " +
            std::to_string(std::max(glo, ghi) * 27.211386245988) + "] eV");
    }
    const bool increasing = ghi > glo;
    double mid = 1.0, g = res.raw_gap;
    for (int it = 0; it < 60; ++it) {
        mid = 0.5 * (lo + hi);
        g = at(mid);
        ++res.iterations;
        if (std::abs(g - target_gap) < tol) break;
        if ((g < target_gap) == increasing)
            lo = mid;
        else
            hi = mid;
    }
    if (std::abs(g - target_gap) >= tol)
        throw std::runtime_error("calibrate_gap: bisection did not reach the target tolerance");
    res.depth_scale = mid;
    res.achieved_gap = g;
    return res;
}

std::string to_string(PotentialKind k) {
    switch (k) {
        case PotentialKind::v1: return "v1";
        case PotentialKind::v2: return "v2";
        case PotentialKind::free_electron: return "free";
    }
    return "?";
}

PotentialKind potential_kind_from_string(const std::string& s) {
    if (s == "v1" || s == "V1") return PotentialKind::v1;
    if (s == "v2" || s == "V2") return PotentialKind::v2;
    if (s == "free" || s == "zero") return PotentialKind::free_electron;
    throw std::invalid_argument("unknown potential kind: '" + s + "'");
}

}  // namespace hhg1d
