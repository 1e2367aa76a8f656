#ifndef HHG1D_GAUGE_HPP
#define HHG1D_GAUGE_HPP

#include <Eigen/Dense>
#include <vector>

#include "hhg1d/matels.hpp"
#include "hhg1d/propagate.hpp"

namespace hhg1d {

// Length-gauge expansion of one velocity-gauge block at a commensurate time:
// b_{n'} = sum_n S^{k', k0}_{n'n} c_n with k' = k0 + shift*dk wrapped into the
// zone. The shift sign is fixed by U = exp(-i e0 A x / hbar): k' = k0 - e0 A/hbar.
struct BlockSnapshot {
    int from_index = 0;  // k0, unique-point index
    int to_index = 0;    // k', unique-point index (wrapped)
    Eigen::VectorXcd b;
    double norm_defect = 0.0;  // | ||b||^2 - ||c||^2 |
};

struct GaugeSnapshot {
    double t = 0.0;
    int shift = 0;
    std::vector<BlockSnapshot> blocks;
    double max_norm_defect = 0.0;
};

// shift = 0 returns b = c exactly (U is the identity when A = 0).
BlockSnapshot to_length_gauge(const KGrid& grid, const MatrixElementSet& matels,
                              const Eigen::VectorXcd& c, int from_index, int shift);

GaugeSnapshot snapshot_ensemble(const KGrid& grid, const MatrixElementSet& matels,
                                const std::vector<BlockHistory>& histories,
                                std::size_t time_index, const GaugeTime& gt);

struct ShiftCheck {
    bool displacement_uniform = false;  // same displacement for every block
    int displacement = 0;               // measured k-index displacement (unwrapped)
    bool matches_shift_tag = false;     // displacement == s_m from the pulse
    double pattern_mismatch_fraction = 0.0;  // argmax-band pattern vs the t = 0 pattern
    bool passed() const { return displacement_uniform && matches_shift_tag; }
};

// Acceleration-theorem check: the length-gauge k-resolved population pattern is
// the t = 0 pattern displaced by exactly s_m grid units. The displacement is
// measured per block from the snapshot; the band-argmax pattern comparison is
// reported as a mismatch fraction (value comparison is not meaningful across
// gauges).
ShiftCheck population_shift_check(const KGrid& grid, const GaugeSnapshot& snap,
                                  const std::vector<BlockHistory>& histories);

}  // namespace hhg1d

#endif
