#include "hhg1d/gauge.hpp"

#include <cmath>
#include <stdexcept>

namespace hhg1d {

BlockSnapshot to_length_gauge(const KGrid& grid, const MatrixElementSet& matels,
                              const Eigen::VectorXcd& c, int from_index, int shift) {
    BlockSnapshot out;
    out.from_index = from_index;
    if (shift == 0) {
        out.to_index = from_index;
        out.b = c;
        out.norm_defect = 0.0;
        return out;
    }
    int wraps = 0;
    out.to_index = grid.wrap_unique_index(from_index + shift, wraps);
    out.b = matels.overlap_block(from_index, shift) * c;
    out.norm_defect = std::abs(out.b.squaredNorm() - c.squaredNorm());
    return out;
}

GaugeSnapshot snapshot_ensemble(const KGrid& grid, const MatrixElementSet& matels,
                                const std::vector<BlockHistory>& histories,
                                std::size_t time_index, const GaugeTime& gt) {
    GaugeSnapshot snap;
    snap.t = gt.t;
    snap.shift = gt.shift;
    snap.blocks.reserve(histories.size());
    for (const auto& h : histories) {
        snap.blocks.push_back(
            to_length_gauge(grid, matels, h.c.at(time_index), h.k_index, gt.shift));
        snap.max_norm_defect = std::max(snap.max_norm_defect, snap.blocks.back().norm_defect);
    }
    return snap;
}

ShiftCheck population_shift_check(const KGrid& grid, const GaugeSnapshot& snap,
                                  const std::vector<BlockHistory>& histories) {
    if (snap.blocks.empty()) throw std::invalid_argument("population_shift_check: empty snapshot");
    const int mu = grid.unique_points();

    ShiftCheck check;
    check.displacement_uniform = true;

    // Per-block displacement, unwrapped into (-mu/2, mu/2].
    auto unwrap = [mu](int d) {
        d = ((d % mu) + mu) % mu;
        if (d > mu / 2) d -= mu;
        return d;
    };
    const int want = unwrap(snap.shift);
    check.displacement = unwrap(snap.blocks.front().to_index - snap.blocks.front().from_index);
    int mismatched_bands = 0;
    for (std::size_t i = 0; i < snap.blocks.size(); ++i) {
        const auto& blk = snap.blocks[i];
        if (unwrap(blk.to_index - blk.from_index) != check.displacement)
            check.displacement_uniform = false;
        // band argmax of the length-gauge populations vs the initial state
        int arg_l = 0;
        blk.b.cwiseAbs2().maxCoeff(&arg_l);
        int arg_0 = 0;
        histories[i].c.front().cwiseAbs2().maxCoeff(&arg_0);
        if (arg_l != arg_0) ++mismatched_bands;
    }
    check.matches_shift_tag = (check.displacement == want);
    check.pattern_mismatch_fraction =
        static_cast<double>(mismatched_bands) / static_cast<double>(snap.blocks.size());
    return check;
}

}  // namespace hhg1d
