#pragma once

#include <span>
#include <vector>

#include "parareal/decomposition.hpp"
#include "parareal/grid.hpp"
#include "parareal/option.hpp"
#include "parareal/state.hpp"
#include "parareal/stepper.hpp"

namespace parareal {

struct PararealConfig {
    MarketOption option;
    TransformedProblem problem;
    SpatialGrid grid;
    TimeDecomposition decomposition;
    double tol = 1e-8;     ///< relative sup-norm interface increment
    int max_iter = 100;
    int fine_workers = 1;  ///< threads for the fine solves; result is identical for any value
};

/// Builds a consistent configuration from the option and discretization knobs.
PararealConfig make_config(const MarketOption& mo, int n_slices, double delta_t,
                           double dt, int m, double tol = 1e-8, int max_iter = 100);

struct PararealResult {
    std::vector<StateVector> lambdas;    ///< N+1 interface states, lambdas[n] at tau = n*delta_tau
    int iterations = 0;
    std::vector<double> residual_trace;  ///< one entry per iteration
    double price = 0.0;
    bool converged = false;
};

/// One backward-Euler step over a whole slice (the coarse propagator).
StateVector coarse_propagate(const StateVector& lambda, const PararealConfig& cfg);

/// fine_steps_per_slice backward-Euler steps across one slice (the fine propagator).
StateVector fine_propagate(const StateVector& lambda, const PararealConfig& cfg);

/// Coarse sweep producing the iteration-0 interfaces: lambda[0] = u0,
/// lambda[n+1] = coarse_propagate(lambda[n]).
std::vector<StateVector> initialize_coarse(const StateVector& u0, const PararealConfig& cfg);

/// Predictor-corrector combination fine_old + (coarse_new - coarse_old).
/// Written in this order so the correction vanishes bitwise once the
/// coarse inputs coincide, which makes finite termination exact.
StateVector parareal_update(const StateVector& fine_old, const StateVector& coarse_new,
                            const StateVector& coarse_old);

/// max over n >= 1 of ||next[n] - prev[n]||_inf / max(||next[n]||_inf, 1).
double interface_residual(std::span<const StateVector> prev, std::span<const StateVector> next);

/// Reads the solution at x0 and undoes the change of variables.
double price_of(const StateVector& final_state, const PararealConfig& cfg);

/// Synchronous predictor-corrector iteration. Stops when the interface
/// residual drops below cfg.tol, or after N iterations (the scheme then
/// reproduces the sequential fine interfaces exactly), or at max_iter,
/// in which case the result is flagged non-converged.
PararealResult parareal_solve(const PararealConfig& cfg);

struct SequentialReference {
    std::vector<StateVector> interfaces;  ///< N+1 states from one uninterrupted fine run
    double price = 0.0;
};

/// Single fine propagation over [0, tau_max]; the convergence oracle for
/// both parareal variants.
SequentialReference sequential_reference(const PararealConfig& cfg);

}  // namespace parareal
