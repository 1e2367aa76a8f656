#include "hhg1d/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hhg1d {

KGrid KGrid::make(double a, int m_points) {
    if (!(a > 0.0)) throw std::invalid_argument("KGrid: lattice constant must be positive");
    if (m_points < 2) throw std::invalid_argument("KGrid: need at least 2 k-points");
    KGrid g;
    g.a = a;
    g.m_points = m_points;
    g.dk = 2.0 * std::numbers::pi / (a * (m_points - 1));
    return g;
}

double KGrid::k_at(int j) const {
    return (2.0 * j / (m_points - 1) - 1.0) * std::numbers::pi / a;
}

std::vector<double> KGrid::points() const {
    std::vector<double> k(m_points);
    for (int j = 0; j < m_points; ++j) k[j] = k_at(j);
    return k;
}

int KGrid::wrap_unique_index(int j, int& wraps) const {
    const int mu = unique_points();
    wraps = 0;
    while (j >= mu) {
        j -= mu;
        ++wraps;
    }
    while (j < 0) {
        j += mu;
        --wraps;
    }
    return j;
}

}  // namespace hhg1d
