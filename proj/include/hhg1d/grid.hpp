#ifndef HHG1D_GRID_HPP
#define HHG1D_GRID_HPP

#include <vector>

namespace hhg1d {

// Discrete Brillouin-zone grid k_j = -pi/a + j*dk, j = 0..M-1, with
// (M-1)*dk = 2*pi/a. Both zone edges are present and physically identified;
// zone sums run over the M-1 unique points (indices 0..M-2).
struct KGrid {
    double a = 0.0;
    int m_points = 0;
    double dk = 0.0;

    static KGrid make(double a, int m_points);

    int unique_points() const { return m_points - 1; }

    // Endpoints are exact by construction: k_at(0) = -pi/a, k_at(M-1) = +pi/a.
    double k_at(int j) const;

    std::vector<double> points() const;

    // Maps an unwrapped unique-point index j (any integer) into 0..M-2 and
    // reports how many reciprocal-lattice vectors 2*pi/a were subtracted.
    int wrap_unique_index(int j, int& wraps) const;
};

}  // namespace hhg1d

#endif
