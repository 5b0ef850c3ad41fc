#pragma once

#include "parareal/grid.hpp"
#include "parareal/option.hpp"
#include "parareal/state.hpp"
#include "parareal/tridiagonal.hpp"

namespace parareal {

/// Samples the transformed payoff on the interior nodes; tau = 0.
StateVector initial_state(const SpatialGrid& grid, const TransformedProblem& tp);

/// Backward-Euler matrix (I + mu*L) for the 3-point Laplacian stencil,
/// mu = dtau / h^2. Interior row sums are 1 up to round-off.
TridiagonalSystem backward_euler_matrix(double dtau, const SpatialGrid& grid);

/// One fully implicit step: solves (I + mu*L) u_new = u_old + boundary lift,
/// with Dirichlet values evaluated at the new time s.tau + dtau.
StateVector backward_euler_step(const StateVector& s, double dtau,
                                const SpatialGrid& grid, const TransformedProblem& tp);

/// Same step with caller-supplied Dirichlet values (test harness hook).
StateVector backward_euler_step_with_bc(const StateVector& s, double dtau,
                                        const SpatialGrid& grid,
                                        double left, double right);

/// n_steps repeated backward-Euler steps of size dtau.
StateVector propagate(const StateVector& s, int n_steps, double dtau,
                      const SpatialGrid& grid, const TransformedProblem& tp);

}  // namespace parareal
