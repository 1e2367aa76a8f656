#ifndef HHG1D_BLOCH_HPP
#define HHG1D_BLOCH_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "hhg1d/grid.hpp"
#include "hhg1d/potential.hpp"

namespace hhg1d {

// Deterministic phase convention for eigenvectors (matrix elements and overlap
// blocks are phase-convention dependent entry-wise; observables are not).
enum class PhaseConvention {
    dominant_fourier,  // largest-|coefficient| Fourier mode made real positive
    first_realspace,   // first nonzero real-space sample made real positive
};

// Fourier mode integer j for array position p, FFT layout: 0,1,..,N/2-1,-N/2,..,-1.
int fourier_mode(int position, int n);

// Complex Fourier coefficients of the sampled potential, V~(G_d) including the
// half-cell grid offset phase; exactly circulant in (p - q) mod N for even N.
Eigen::VectorXcd potential_fourier_coeffs(const PotentialSamples& samples);

// H_{pq} = delta_{pq} (G_p + k)^2 / 2 + V~[(p - q) mod N] in the N-mode
// plane-wave basis; Hermitian for real samples.
Eigen::MatrixXcd build_bloch_hamiltonian(double k, const PotentialSamples& samples);

// One k-point: lowest n_bands eigenpairs, ascending, phase-fixed. `fourier`
// columns are unit vectors in the plane-wave basis; real-space samples follow
// u(x_m) = sqrt(N/a) * sum_p v_p exp(i G_p x_m) / sqrt(N), cell-normalized so
// (a/N) sum_m |u(x_m)|^2 = 1.
struct BlochBlock {
    double k = 0.0;
    Eigen::VectorXd energy;    // n_bands
    Eigen::MatrixXcd fourier;  // n_grid x n_bands
};

void fix_phase(Eigen::Ref<Eigen::VectorXcd> fourier_column, double a,
               PhaseConvention convention);

BlochBlock solve_bands(double k, const PotentialSamples& samples, int n_bands,
                       PhaseConvention convention = PhaseConvention::dominant_fourier);

struct BandStructure {
    KGrid grid;
    int n_bands = 0;
    int n_grid = 0;  // N real-space / Fourier points
    std::vector<BlochBlock> blocks;  // size M, both zone edges included

    const Eigen::VectorXd& energies(int k_index) const { return blocks[k_index].energy; }

    Eigen::VectorXcd u_realspace(int k_index, int band) const;

    // Minimal direct gap E_{n0+1} - E_{n0} over the unique zone points (n0 is
    // 1-based) and the index where it is attained.
    double direct_gap(int n0) const;
    int direct_gap_k_index(int n0) const;
};

BandStructure compute_band_structure(const KGrid& grid, const PotentialSamples& samples,
                                     int n_bands, int threads = 1,
                                     PhaseConvention convention = PhaseConvention::dominant_fourier);

// Valence-band rule: highest band with max_k E_n(k) < 0, evaluated at
// depth_scale = 1; falls back to band 1 when nothing is fully bound.
int default_valence_band(const PotentialSpec& spec, int n_grid, const KGrid& grid, int threads = 1);

}  // namespace hhg1d

#endif
