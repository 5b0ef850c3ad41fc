#include "parareal/state.hpp"

#include <cmath>
#include <stdexcept>

namespace parareal {

double sup_norm(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

double sup_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw std::domain_error("sup_distance: size mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace parareal
