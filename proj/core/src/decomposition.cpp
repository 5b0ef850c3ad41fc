#include "parareal/decomposition.hpp"

#include <cmath>
#include <stdexcept>

namespace parareal {

TimeDecomposition make_decomposition(const MarketOption& mo, int n_slices,
                                     double delta_t, double dt) {
    mo.validate();
    if (n_slices < 1) throw std::domain_error("need at least one time slice");
    if (!(delta_t > 0.0) || !(dt > 0.0))
        throw std::domain_error("time steps must be positive");

    const double ratio = delta_t / dt;
    const double rounded = std::round(ratio);
    if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-9 * rounded)
        throw std::domain_error("delta_t/dt must be a positive integer");

    if (std::abs(n_slices * delta_t - mo.maturity) > 1e-9 * std::max(1.0, mo.maturity))
        throw std::domain_error("maturity must equal n_slices * delta_t");

    TimeDecomposition d;
    d.n_slices = n_slices;
    d.delta_t_fin = delta_t;
    d.dt_fin = dt;
    const double half_sigma_sq = 0.5 * mo.sigma * mo.sigma;
    d.delta_tau = half_sigma_sq * delta_t;
    d.dtau_fine = half_sigma_sq * dt;
    d.fine_steps_per_slice = static_cast<int>(rounded);
    return d;
}

}  // namespace parareal
