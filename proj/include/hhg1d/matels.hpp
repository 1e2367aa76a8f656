#ifndef HHG1D_MATELS_HPP
#define HHG1D_MATELS_HPP

#include <Eigen/Dense>
#include <vector>

#include "hhg1d/bloch.hpp"

namespace hhg1d {

// Momentum matrix P_{nn'}(k) = hbar k delta_{nn'} + D_{nn'}(k) with
// D = -i hbar (a/N) sum_m u*_n d/dx u_n' ; the derivative is spectral, so
// D_{nn'} = hbar sum_p G_p v*_n[p] v_n'[p], Hermitian term by term.
Eigen::MatrixXcd momentum_matrix(const BandStructure& bs, int k_index);

// Velocity-gauge interaction block: (-e0/m) P(k) A + (e0^2 A^2 / 2m) I.
Eigen::MatrixXcd hext_v_matrix(const Eigen::MatrixXcd& momentum, double a_field);

// Overlap block S^{k',k0}_{n'n} for k' = k(j_to_unwrapped), where
// j_to_unwrapped may run outside the unique-point range; the Bloch wrap
// multiplies the integrand by exp(i w G x) which is a circular shift of the
// source Fourier coefficients by w modes.
Eigen::MatrixXcd overlap_matrix(const BandStructure& bs, int j_to_unwrapped, int j_from);

// ||S S^H - I||_max
double unitarity_defect(const Eigen::MatrixXcd& s);

struct MatrixElementSet {
    int n_bands = 0;
    int max_shift = 0;
    std::vector<Eigen::MatrixXcd> momentum;  // per grid point, size M
    // overlap[j0 * (2*max_shift+1) + (s + max_shift)] = S^{k0+s dk, k0},
    // j0 over the unique points.
    std::vector<Eigen::MatrixXcd> overlap;
    int unique_points = 0;

    const Eigen::MatrixXcd& momentum_at(int k_index) const { return momentum[k_index]; }
    const Eigen::MatrixXcd& overlap_block(int j0, int shift) const;
    double max_unitarity_defect(int shift) const;
    double max_hermiticity_defect() const;
};

// Precomputes P for every grid point and S for every (unique k, shift) pair
// with |shift| <= max_shift (the pulse excursion range).
MatrixElementSet build_matrix_elements(const BandStructure& bs, int max_shift, int threads = 1);

}  // namespace hhg1d

#endif
