#pragma once

#include <span>
#include <vector>

namespace parareal {

/// Coefficient bands of a tridiagonal system. All bands have length n;
/// sub[0] and super[n-1] are ignored.
struct TridiagonalSystem {
    std::vector<double> sub;
    std::vector<double> diag;
    std::vector<double> super;

    int size() const { return static_cast<int>(diag.size()); }
};

/// Thomas algorithm. Requires a diagonally dominant system; a vanishing
/// pivot raises std::runtime_error (unreachable for dominant systems).
std::vector<double> solve_tridiagonal(const TridiagonalSystem& sys,
                                      std::span<const double> rhs);

}  // namespace parareal
