#include "parareal/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace parareal {

SpatialGrid build_grid(const TransformedProblem& tp, int m) {
    if (m < 2) throw std::domain_error("grid needs at least 2 sub-intervals");
    SpatialGrid g;
    g.x_minus = tp.x_minus;
    g.x_plus = tp.x_plus;
    g.m = m;
    g.h = (tp.x_plus - tp.x_minus) / m;
    if (!(g.h > 0.0)) throw std::domain_error("degenerate spatial domain");
    return g;
}

double interpolate_at(const StateVector& s, const SpatialGrid& grid,
                      const TransformedProblem& tp, double x) {
    const double pos = (x - grid.x_minus) / grid.h;
    if (pos < -1e-9 || pos > grid.m + 1e-9)
        throw std::domain_error("interpolation point outside the grid");

    auto value_at_node = [&](int i) {
        if (i <= 0) return boundary_values(s.tau, tp).left;
        if (i >= grid.m) return boundary_values(s.tau, tp).right;
        return s.values[static_cast<std::size_t>(i - 1)];
    };

    // Snap to the node when x is one: keeps node reads exact instead of
    // blending in a neighbour through a last-ulp weight.
    const double nearest = std::round(pos);
    if (std::abs(pos - nearest) < 1e-9)
        return value_at_node(static_cast<int>(nearest));

    const int i = std::clamp(static_cast<int>(std::floor(pos)), 0, grid.m - 1);
    const double w = pos - i;
    return (1.0 - w) * value_at_node(i) + w * value_at_node(i + 1);
}

}  // namespace parareal
