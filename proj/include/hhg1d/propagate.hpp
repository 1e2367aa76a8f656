#ifndef HHG1D_PROPAGATE_HPP
#define HHG1D_PROPAGATE_HPP

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "hhg1d/matels.hpp"
#include "hhg1d/pulse.hpp"

namespace hhg1d {

enum class Integrator {
    cf4,  // 4th-order commutator-free Magnus, unitary by construction (default)
    rk4,  // classic explicit Runge-Kutta
};

struct PropagationOptions {
    int steps_per_cycle = 2048;
    Integrator integrator = Integrator::cf4;
    bool drop_a2_phase = false;  // the A^2 term is a global phase per block
    double norm_abort = 1e-6;
};

struct EnsembleSpec {
    enum class Mode { single_k, full_band };
    Mode mode = Mode::full_band;
    int n0 = 1;  // valence band, 1-based
};

// c_{n,k0}(0) = delta_{n,n0}
Eigen::VectorXcd init_state(int n0, int n_bands);

// dc/dt = -(i/hbar) [diag(E_n(k0)) + H_ext^v(k0, A(t))] c
Eigen::VectorXcd rhs(const Eigen::VectorXcd& c, double t, const BandStructure& bs,
                     const MatrixElementSet& matels, const PulseSpec& pulse, int k_index,
                     bool drop_a2_phase = false);

struct BlockHistory {
    int k_index = 0;
    std::vector<Eigen::VectorXcd> c;  // one entry per sample time
    double max_norm_drift = 0.0;
};

// Fixed-step integration with base step T_carrier / steps_per_cycle and exact
// landing on every sample time (each inter-sample interval is subdivided into
// equal steps). sample_times must be ascending within [0, T].
BlockHistory propagate_block(const BandStructure& bs, const MatrixElementSet& matels,
                             const PulseSpec& pulse, int k_index, int n0,
                             std::span<const double> sample_times,
                             const PropagationOptions& opts);

std::vector<int> occupied_blocks(const KGrid& grid, const EnsembleSpec& ens);

// One task per k-block; deterministic output order (ascending k index).
std::vector<BlockHistory> propagate_ensemble(const BandStructure& bs,
                                             const MatrixElementSet& matels,
                                             const PulseSpec& pulse, const EnsembleSpec& ens,
                                             std::span<const double> sample_times,
                                             const PropagationOptions& opts, int threads = 1);

}  // namespace hhg1d

#endif
