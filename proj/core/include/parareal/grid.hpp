#pragma once

#include "parareal/option.hpp"
#include "parareal/state.hpp"

namespace parareal {

/// Uniform spatial grid over the truncated domain.
/// Node i sits at x_minus + i*h for i = 0..m; nodes 0 and m are boundary nodes.
struct SpatialGrid {
    double x_minus = 0.0;
    double x_plus = 0.0;
    int m = 0;        ///< number of equal sub-intervals, >= 2
    double h = 0.0;   ///< cell width (x_plus - x_minus) / m

    double node(int i) const { return x_minus + i * h; }
    int interior_count() const { return m - 1; }
};

/// Grid with m equal cells spanning the transformed domain. m < 2 is a domain error.
SpatialGrid build_grid(const TransformedProblem& tp, int m);

/// Linear interpolation of the solution at an arbitrary x in [x_minus, x_plus].
/// Boundary node values are taken from boundary_values(s.tau). Exact at nodes.
double interpolate_at(const StateVector& s, const SpatialGrid& grid,
                      const TransformedProblem& tp, double x);

}  // namespace parareal
