#pragma once

#include <span>
#include <vector>

namespace parareal {

/// Solution values at the interior grid nodes at one heat time.
/// Boundary nodes are not stored; they are recomputed from tau, so a state
/// handed between threads can never carry stale boundary data.
struct StateVector {
    double tau = 0.0;
    std::vector<double> values;
};

double sup_norm(std::span<const double> v);

/// Max absolute componentwise difference. Sizes must match (domain error).
double sup_distance(std::span<const double> a, std::span<const double> b);

}  // namespace parareal
