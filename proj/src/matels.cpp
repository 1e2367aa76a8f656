#include "hhg1d/matels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hhg1d/parallel.hpp"
#include "hhg1d/units.hpp"

namespace hhg1d {

Eigen::MatrixXcd momentum_matrix(const BandStructure& bs, int k_index) {
    const int nb = bs.n_bands;
    const int n = bs.n_grid;
    const Eigen::MatrixXcd& v = bs.blocks[k_index].fourier;
    Eigen::MatrixXcd p(nb, nb);
    for (int r = 0; r < nb; ++r) {
        for (int c = 0; c < nb; ++c) {
            std::complex<double> acc = 0.0;
            for (int q = 0; q < n; ++q) {
                const double g = 2.0 * std::numbers::pi * fourier_mode(q, n) / bs.grid.a;
                acc += g * std::conj(v(q, r)) * v(q, c);
            }
            p(r, c) = units::hbar * acc;
        }
    }
    const double hk = units::hbar * bs.grid.k_at(k_index);
    for (int r = 0; r < nb; ++r) p(r, r) += hk;
    return p;
}

Eigen::MatrixXcd hext_v_matrix(const Eigen::MatrixXcd& momentum, double a_field) {
    const double e = units::e0, m = units::m_e;
    Eigen::MatrixXcd h = (-e / m * a_field) * momentum;
    h.diagonal().array() += e * e * a_field * a_field / (2.0 * m);
    return h;
}

Eigen::MatrixXcd overlap_matrix(const BandStructure& bs, int j_to_unwrapped, int j_from) {
    const int n = bs.n_grid;
    int wraps = 0;
    const int j_to = bs.grid.wrap_unique_index(j_to_unwrapped, wraps);
    const Eigen::MatrixXcd& vto = bs.blocks[j_to].fourier;
    const Eigen::MatrixXcd& vfrom = bs.blocks[j_from].fourier;
    if (wraps == 0) return vto.adjoint() * vfrom;
    Eigen::MatrixXcd shifted(n, bs.n_bands);
    for (int q = 0; q < n; ++q) {
        const int src = ((q - wraps) % n + n) % n;
        shifted.row(q) = vfrom.row(src);
    }
    return vto.adjoint() * shifted;
}

double unitarity_defect(const Eigen::MatrixXcd& s) {
    const Eigen::MatrixXcd d =
        s * s.adjoint() - Eigen::MatrixXcd::Identity(s.rows(), s.cols());
    return d.cwiseAbs().maxCoeff();
}

const Eigen::MatrixXcd& MatrixElementSet::overlap_block(int j0, int shift) const {
    if (std::abs(shift) > max_shift)
        throw std::out_of_range("overlap block: pulse excursion exceeded the precomputed shift range (|s| = " +
                                std::to_string(std::abs(shift)) + " > " + std::to_string(max_shift) + ")");
    return overlap[static_cast<std::size_t>(j0) * (2 * max_shift + 1) + (shift + max_shift)];
}

double MatrixElementSet::max_unitarity_defect(int shift) const {
    double worst = 0.0;
    for (int j0 = 0; j0 < unique_points; ++j0)
        worst = std::max(worst, unitarity_defect(overlap_block(j0, shift)));
    return worst;
}

double MatrixElementSet::max_hermiticity_defect() const {
    double worst = 0.0;
    for (const auto& p : momentum)
        worst = std::max(worst, (p - p.adjoint()).cwiseAbs().maxCoeff());
    return worst;
}

MatrixElementSet build_matrix_elements(const BandStructure& bs, int max_shift, int threads) {
    MatrixElementSet set;
    set.n_bands = bs.n_bands;
    set.max_shift = max_shift;
    set.unique_points = bs.grid.unique_points();
    set.momentum.resize(bs.grid.m_points);
    parallel_for(bs.grid.m_points, threads,
                 [&](int j) { set.momentum[j] = momentum_matrix(bs, j); });
    const int n_shifts = 2 * max_shift + 1;
    set.overlap.resize(static_cast<std::size_t>(set.unique_points) * n_shifts);
    parallel_for(set.unique_points, threads, [&](int j0) {
        for (int s = -max_shift; s <= max_shift; ++s)
            set.overlap[static_cast<std::size_t>(j0) * n_shifts + (s + max_shift)] =
                overlap_matrix(bs, j0 + s, j0);
    });
    return set;
}

}  // namespace hhg1d
