#include "parareal/tridiagonal.hpp"

#include <cmath>
#include <stdexcept>

namespace parareal {

std::vector<double> solve_tridiagonal(const TridiagonalSystem& sys,
                                      std::span<const double> rhs) {
    const int n = sys.size();
    if (n == 0 || static_cast<int>(rhs.size()) != n ||
        static_cast<int>(sys.sub.size()) != n || static_cast<int>(sys.super.size()) != n)
        throw std::domain_error("solve_tridiagonal: band/rhs size mismatch");

    std::vector<double> c(n, 0.0);  // modified superdiagonal
    std::vector<double> x(n, 0.0);

    double pivot = sys.diag[0];
    if (pivot == 0.0) throw std::runtime_error("solve_tridiagonal: zero pivot");
    c[0] = sys.super[0] / pivot;
    x[0] = rhs[0] / pivot;
    for (int i = 1; i < n; ++i) {
        pivot = sys.diag[i] - sys.sub[i] * c[i - 1];
        if (pivot == 0.0) throw std::runtime_error("solve_tridiagonal: zero pivot");
        if (i < n - 1) c[i] = sys.super[i] / pivot;
        x[i] = (rhs[i] - sys.sub[i] * x[i - 1]) / pivot;
    }
    for (int i = n - 2; i >= 0; --i) x[i] -= c[i] * x[i + 1];
    return x;
}

}  // namespace parareal
