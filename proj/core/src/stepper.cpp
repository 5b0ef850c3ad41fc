#include "parareal/stepper.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace parareal {

StateVector initial_state(const SpatialGrid& grid, const TransformedProblem& tp) {
    StateVector s;
    s.tau = 0.0;
    s.values.resize(static_cast<std::size_t>(grid.interior_count()));
    for (int i = 1; i < grid.m; ++i)
        s.values[static_cast<std::size_t>(i - 1)] = initial_condition(grid.node(i), tp);
    return s;
}

TridiagonalSystem backward_euler_matrix(double dtau, const SpatialGrid& grid) {
    const double mu = dtau / (grid.h * grid.h);
    const int n = grid.interior_count();
    TridiagonalSystem sys;
    sys.sub.assign(static_cast<std::size_t>(n), -mu);
    sys.super.assign(static_cast<std::size_t>(n), -mu);
    sys.diag.assign(static_cast<std::size_t>(n), 1.0 + 2.0 * mu);
    // Interior row sums collapse to 1; dominance of the solve hinges on it.
    assert(n < 3 || std::abs(sys.diag[1] + sys.sub[1] + sys.super[1] - 1.0) <=
                        1e-12 * (1.0 + 2.0 * mu));
    return sys;
}

StateVector backward_euler_step_with_bc(const StateVector& s, double dtau,
                                        const SpatialGrid& grid,
                                        double left, double right) {
    if (!(dtau > 0.0)) throw std::domain_error("time step must be positive");
    const int n = grid.interior_count();
    if (static_cast<int>(s.values.size()) != n)
        throw std::domain_error("state size does not match the grid");

    const double mu = dtau / (grid.h * grid.h);
    const TridiagonalSystem sys = backward_euler_matrix(dtau, grid);

    std::vector<double> rhs = s.values;
    rhs.front() += mu * left;
    rhs.back() += mu * right;

    StateVector out;
    out.tau = s.tau + dtau;
    out.values = solve_tridiagonal(sys, rhs);
    return out;
}

StateVector backward_euler_step(const StateVector& s, double dtau,
                                const SpatialGrid& grid, const TransformedProblem& tp) {
    const double tau_new = s.tau + dtau;
    const BoundaryPair bc = boundary_values(tau_new, tp);
    return backward_euler_step_with_bc(s, dtau, grid, bc.left, bc.right);
}

StateVector propagate(const StateVector& s, int n_steps, double dtau,
                      const SpatialGrid& grid, const TransformedProblem& tp) {
    if (n_steps < 1) throw std::domain_error("propagate needs at least one step");
    StateVector cur = s;
    for (int i = 0; i < n_steps; ++i) cur = backward_euler_step(cur, dtau, grid, tp);
    return cur;
}

}  // namespace parareal
