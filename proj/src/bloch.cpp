#include "hhg1d/bloch.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hhg1d/parallel.hpp"

namespace hhg1d {

using cplx = std::complex<double>;

int fourier_mode(int position, int n) {
    return position < (n + 1) / 2 ? position : position - n;
}

Eigen::VectorXcd potential_fourier_coeffs(const PotentialSamples& samples) {
    const int n = static_cast<int>(samples.values.size());
    if (n % 2 != 0) throw std::invalid_argument("potential grid size must be even");
    Eigen::VectorXcd vt(n);
    const double w = -2.0 * std::numbers::pi / n;
    // Real samples: compute d <= N/2 and mirror the rest as exact conjugates,
    // so the circulant potential matrix is Hermitian to the bit.
    for (int d = 0; d <= n / 2; ++d) {
        cplx acc = 0.0;
        for (int m = 0; m < n; ++m) acc += samples.values[m] * std::polar(1.0, w * d * m);
        // e^{-i G_d x_m} with x_m offset by -a/2 contributes (-1)^d
        vt[d] = acc / double(n) * (d % 2 == 0 ? 1.0 : -1.0);
    }
    vt[0] = vt[0].real();
    vt[n / 2] = vt[n / 2].real();
    for (int d = 1; d < n / 2; ++d) vt[n - d] = std::conj(vt[d]);
    return vt;
}

Eigen::MatrixXcd build_bloch_hamiltonian(double k, const PotentialSamples& samples) {
    const int n = static_cast<int>(samples.values.size());
    const Eigen::VectorXcd vt = potential_fourier_coeffs(samples);
    Eigen::MatrixXcd h(n, n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) h(p, q) = vt[((p - q) % n + n) % n];
    for (int p = 0; p < n; ++p) {
        const double g = 2.0 * std::numbers::pi * fourier_mode(p, n) / samples.a;
        h(p, p) += 0.5 * (g + k) * (g + k);
    }
    return h;
}

void fix_phase(Eigen::Ref<Eigen::VectorXcd> col, double a, PhaseConvention convention) {
    const int n = static_cast<int>(col.size());
    cplx pivot;
    if (convention == PhaseConvention::dominant_fourier) {
        // Largest magnitude; exact ties resolved by lowest mode (|j|, then j).
        int best = 0;
        double best_mag = std::abs(col[0]);
        auto mode_key = [n](int p) {
            const int j = fourier_mode(p, n);
            return std::pair<int, int>(std::abs(j), j);
        };
        for (int p = 1; p < n; ++p) {
            const double mag = std::abs(col[p]);
            if (mag > best_mag || (mag == best_mag && mode_key(p) < mode_key(best))) {
                best = p;
                best_mag = mag;
            }
        }
        pivot = col[best];
    } else {
        // First real-space sample above a magnitude floor.
        const double scale = std::sqrt(static_cast<double>(n) / a) / std::sqrt(static_cast<double>(n));
        int first = -1;
        for (int m = 0; m < n && first < 0; ++m) {
            cplx u = 0.0;
            for (int p = 0; p < n; ++p) {
                const double g = 2.0 * std::numbers::pi * fourier_mode(p, n) / a;
                const double x = -a / 2 + a * m / n;
                u += col[p] * std::polar(1.0, g * x);
            }
            if (std::abs(u * scale) > 1e-8) {
                first = m;
                pivot = u;
            }
        }
        if (first < 0) throw std::runtime_error("fix_phase: zero vector");
    }
    const double mag = std::abs(pivot);
    if (mag == 0.0) throw std::runtime_error("fix_phase: zero pivot");
    col *= std::conj(pivot) / mag;
}

BlochBlock solve_bands(double k, const PotentialSamples& samples, int n_bands,
                       PhaseConvention convention) {
    const int n = static_cast<int>(samples.values.size());
    if (n_bands < 1 || n_bands > n)
        throw std::invalid_argument("solve_bands: need 1 <= n_bands <= N");
    const Eigen::MatrixXcd h = build_bloch_hamiltonian(k, samples);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("solve_bands: eigensolver failed at k = " + std::to_string(k));
    BlochBlock b;
    b.k = k;
    b.energy = es.eigenvalues().head(n_bands);
    b.fourier = es.eigenvectors().leftCols(n_bands);
    for (int c = 0; c < n_bands; ++c) fix_phase(b.fourier.col(c), samples.a, convention);
    return b;
}

Eigen::VectorXcd BandStructure::u_realspace(int k_index, int band) const {
    const int n = n_grid;
    const double a = grid.a;
    Eigen::VectorXcd u(n);
    const double scale = 1.0 / std::sqrt(a);
    for (int m = 0; m < n; ++m) {
        cplx acc = 0.0;
        const double x = -a / 2 + a * m / n;
        for (int p = 0; p < n; ++p) {
            const double g = 2.0 * std::numbers::pi * fourier_mode(p, n) / a;
            acc += blocks[k_index].fourier(p, band) * std::polar(1.0, g * x);
        }
        u[m] = acc * scale;
    }
    return u;
}

double BandStructure::direct_gap(int n0) const {
    return blocks[direct_gap_k_index(n0)].energy[n0] - blocks[direct_gap_k_index(n0)].energy[n0 - 1];
}

int BandStructure::direct_gap_k_index(int n0) const {
    if (n0 < 1 || n0 >= n_bands) throw std::invalid_argument("direct_gap: need 1 <= n0 < n_bands");
    int best = 0;
    double best_gap = std::numeric_limits<double>::infinity();
    for (int j = 0; j < grid.unique_points(); ++j) {
        const double g = blocks[j].energy[n0] - blocks[j].energy[n0 - 1];
        if (g < best_gap) {
            best_gap = g;
            best = j;
        }
    }
    return best;
}

BandStructure compute_band_structure(const KGrid& grid, const PotentialSamples& samples,
                                     int n_bands, int threads, PhaseConvention convention) {
    BandStructure bs;
    bs.grid = grid;
    bs.n_bands = n_bands;
    bs.n_grid = static_cast<int>(samples.values.size());
    bs.blocks.resize(grid.m_points);
    parallel_for(grid.m_points, threads, [&](int j) {
        bs.blocks[j] = solve_bands(grid.k_at(j), samples, n_bands, convention);
    });
    return bs;
}

int default_valence_band(const PotentialSpec& spec, int n_grid, const KGrid& grid, int threads) {
    if (spec.kind == PotentialKind::free_electron) return 1;
    PotentialSpec raw = spec;
    raw.depth_scale = 1.0;
    const PotentialSamples samples = periodize(raw, n_grid);
    const int nb = std::min(8, n_grid);
    const BandStructure bs = compute_band_structure(grid, samples, nb, threads);
    int n0 = 1;
    for (int n = 1; n <= nb; ++n) {
        double emax = -std::numeric_limits<double>::infinity();
        for (int j = 0; j < grid.unique_points(); ++j)
            emax = std::max(emax, bs.blocks[j].energy[n - 1]);
        if (emax < 0.0) n0 = n;
    }
    return n0;
}

}  // namespace hhg1d
