#pragma once

#include "parareal/option.hpp"

namespace parareal {

/// Decomposition of [0, T] into n_slices windows of width delta_t_fin,
/// expressed both in financial years and in heat time.
struct TimeDecomposition {
    int n_slices = 0;              ///< N
    double delta_t_fin = 0.0;      ///< slice width in years
    double dt_fin = 0.0;           ///< fine step in years
    double delta_tau = 0.0;        ///< sigma^2 * delta_t / 2
    double dtau_fine = 0.0;        ///< sigma^2 * dt / 2
    int fine_steps_per_slice = 0;  ///< delta_t / dt, exact integer
};

/// Validates and converts the slicing. Rejects (domain error):
/// non-integer delta_t/dt, n_slices < 1, non-positive steps, and a
/// maturity inconsistent with n_slices * delta_t.
TimeDecomposition make_decomposition(const MarketOption& mo, int n_slices,
                                     double delta_t, double dt);

}  // namespace parareal
