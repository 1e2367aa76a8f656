#include "hhg1d/propagate.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hhg1d/parallel.hpp"
#include "hhg1d/units.hpp"

namespace hhg1d {

namespace {
constexpr std::complex<double> I1(0.0, 1.0);

Eigen::MatrixXcd hamiltonian(const BandStructure& bs, const MatrixElementSet& matels,
                             const PulseSpec& pulse, int k_index, double t, bool drop_a2) {
    const double a_field = vector_potential(pulse, t);
    Eigen::MatrixXcd h = hext_v_matrix(matels.momentum_at(k_index), a_field);
    if (drop_a2)
        h.diagonal().array() -=
            units::e0 * units::e0 * a_field * a_field / (2.0 * units::m_e);
    h.diagonal() += bs.blocks[k_index].energy.cast<std::complex<double>>();
    return h;
}

// exp(-i dt H) c for Hermitian H
void apply_exp(const Eigen::MatrixXcd& h, double dt, Eigen::VectorXcd& c) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    Eigen::VectorXcd phases(h.rows());
    for (int i = 0; i < h.rows(); ++i)
        phases[i] = std::polar(1.0, -dt * es.eigenvalues()[i]);
    c = es.eigenvectors() * (phases.asDiagonal() * (es.eigenvectors().adjoint() * c));
}
}  // namespace

Eigen::VectorXcd init_state(int n0, int n_bands) {
    if (n0 < 1 || n0 > n_bands) throw std::invalid_argument("init_state: need 1 <= n0 <= n_bands");
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n_bands);
    c[n0 - 1] = 1.0;
    return c;
}

Eigen::VectorXcd rhs(const Eigen::VectorXcd& c, double t, const BandStructure& bs,
                     const MatrixElementSet& matels, const PulseSpec& pulse, int k_index,
                     bool drop_a2_phase) {
    return (-I1 / units::hbar) * (hamiltonian(bs, matels, pulse, k_index, t, drop_a2_phase) * c);
}

BlockHistory propagate_block(const BandStructure& bs, const MatrixElementSet& matels,
                             const PulseSpec& pulse, int k_index, int n0,
                             std::span<const double> sample_times,
                             const PropagationOptions& opts) {
    if (sample_times.empty()) throw std::invalid_argument("propagate_block: no sample times");
    for (std::size_t i = 1; i < sample_times.size(); ++i)
        if (!(sample_times[i] > sample_times[i - 1]))
            throw std::invalid_argument("propagate_block: sample times must ascend");

    const double dt_base = pulse.carrier_period() / opts.steps_per_cycle;
    // Gauss nodes and CF4 weights (a1 + a2 = 1/2)
    const double gauss_lo = 0.5 - std::sqrt(3.0) / 6.0;
    const double gauss_hi = 0.5 + std::sqrt(3.0) / 6.0;
    const double w1 = 0.25 + std::sqrt(3.0) / 6.0;
    const double w2 = 0.25 - std::sqrt(3.0) / 6.0;

    BlockHistory hist;
    hist.k_index = k_index;
    hist.c.reserve(sample_times.size());

    Eigen::VectorXcd c = init_state(n0, bs.n_bands);
    hist.c.push_back(c);

    auto h_at = [&](double t) {
        return hamiltonian(bs, matels, pulse, k_index, t, opts.drop_a2_phase);
    };

    double t = sample_times[0];
    for (std::size_t i = 1; i < sample_times.size(); ++i) {
        const double span = sample_times[i] - t;
        const int nsub = std::max(1, static_cast<int>(std::ceil(span / dt_base - 1e-12)));
        const double h = span / nsub;
        for (int q = 0; q < nsub; ++q) {
            const double t0 = t + q * h;
            if (opts.integrator == Integrator::cf4) {
                const Eigen::MatrixXcd h1 = h_at(t0 + gauss_lo * h);
                const Eigen::MatrixXcd h2 = h_at(t0 + gauss_hi * h);
                apply_exp(w1 * h1 + w2 * h2, h, c);
                apply_exp(w2 * h1 + w1 * h2, h, c);
            } else {
                const Eigen::VectorXcd k1 = -I1 * (h_at(t0) * c);
                const Eigen::VectorXcd k2 = -I1 * (h_at(t0 + 0.5 * h) * (c + 0.5 * h * k1));
                const Eigen::VectorXcd k3 = -I1 * (h_at(t0 + 0.5 * h) * (c + 0.5 * h * k2));
                const Eigen::VectorXcd k4 = -I1 * (h_at(t0 + h) * (c + h * k3));
                c += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            }
        }
        t = sample_times[i];
        const double drift = std::abs(c.squaredNorm() - 1.0);
        hist.max_norm_drift = std::max(hist.max_norm_drift, drift);
        if (drift > opts.norm_abort)
            throw std::runtime_error("propagate_block: norm drift " + std::to_string(drift) +
                                     " at t = " + std::to_string(t) + ", k index " +
                                     std::to_string(k_index) + " (step too large)");
        hist.c.push_back(c);
    }
    return hist;
}

std::vector<int> occupied_blocks(const KGrid& grid, const EnsembleSpec& ens) {
    if (ens.mode == EnsembleSpec::Mode::full_band) {
        std::vector<int> all(grid.unique_points());
        for (int j = 0; j < grid.unique_points(); ++j) all[j] = j;
        return all;
    }
    if (grid.m_points % 2 == 0)
        throw std::invalid_argument("single_k ensemble needs odd M so that k = 0 is on the grid");
    return {grid.unique_points() / 2};
}

std::vector<BlockHistory> propagate_ensemble(const BandStructure& bs,
                                             const MatrixElementSet& matels,
                                             const PulseSpec& pulse, const EnsembleSpec& ens,
                                             std::span<const double> sample_times,
                                             const PropagationOptions& opts, int threads) {
    const std::vector<int> blocks = occupied_blocks(bs.grid, ens);
    std::vector<BlockHistory> out(blocks.size());
    parallel_for(static_cast<int>(blocks.size()), threads, [&](int i) {
        out[i] = propagate_block(bs, matels, pulse, blocks[i], ens.n0, sample_times, opts);
    });
    return out;
}

}  // namespace hhg1d
