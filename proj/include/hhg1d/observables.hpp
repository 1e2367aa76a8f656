#ifndef HHG1D_OBSERVABLES_HPP
#define HHG1D_OBSERVABLES_HPP

#include <vector>

#include "hhg1d/gauge.hpp"
#include "hhg1d/matels.hpp"
#include "hhg1d/propagate.hpp"

namespace hhg1d {

// Kahan compensated accumulator; summation order is fixed by the callers so
// results are independent of the thread count.
struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double x) {
        const double y = x - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

struct CurrentParts {
    double total = 0.0;  // J = intra + inter, exact by construction
    double intra = 0.0;  // j
    double inter = 0.0;  // P-dot
    double imag_residue = 0.0;  // |Im| of the interband sum before discarding
};

// Normalization: volume = a * (M-1), n_occupied = number of occupied blocks.
struct CurrentNormalization {
    double volume = 0.0;
    double n_occupied = 0.0;
};

// j_v = (e0/Vm) sum |c|^2 P_nn - (N e0^2/Vm) A ;  Pdot_v = (e0/Vm) sum_{n/=n'} c* c P.
CurrentParts current_velocity(const std::vector<BlockHistory>& histories,
                              std::size_t time_index, double a_field,
                              const MatrixElementSet& matels, const CurrentNormalization& norm);

// Same assembly at the shifted indices delivered by the gauge transform; no A term.
CurrentParts current_length(const GaugeSnapshot& snap, const MatrixElementSet& matels,
                            const CurrentNormalization& norm);

struct CurrentSample {
    double t = 0.0;
    int shift = 0;
    double a_field = 0.0;
    double e_field = 0.0;
    double j_total_v = 0.0, j_intra_v = 0.0, j_inter_v = 0.0;
    double j_total_l = 0.0, j_intra_l = 0.0, j_inter_l = 0.0;
    double imag_residue = 0.0;   // larger of the two gauges, not written to CSV
    double norm_defect = 0.0;    // max over blocks at this time
};

struct CurrentRecord {
    std::vector<CurrentSample> samples;
    double max_abs_total_v() const;
    double max_imag_residue() const;
    double max_norm_defect() const;
};

struct GaugeDiscrepancy {
    double delta_total = 0.0;
    double delta_intra = 0.0;
    double delta_inter = 0.0;
};

// delta_X = max_m |X_v - X_l| / max_m |J_v|
GaugeDiscrepancy gauge_discrepancy(const CurrentRecord& record);

CurrentRecord assemble_record(const std::vector<BlockHistory>& histories,
                              const std::vector<GaugeTime>& times, const KGrid& grid,
                              const MatrixElementSet& matels, const PulseSpec& pulse,
                              const CurrentNormalization& norm, int threads = 1);

}  // namespace hhg1d

#endif
