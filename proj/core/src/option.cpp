#include "parareal/option.hpp"

#include <cmath>
#include <stdexcept>

namespace parareal {

void MarketOption::validate() const {
    if (!(sigma > 0.0)) throw std::domain_error("volatility must be positive");
    if (!(rate >= 0.0)) throw std::domain_error("rate must be non-negative");
    if (!(spot > 0.0)) throw std::domain_error("spot must be positive");
    if (!(strike > 0.0)) throw std::domain_error("strike must be positive");
    if (!(maturity > 0.0)) throw std::domain_error("maturity must be positive");
}

TransformedProblem derive_transform(const MarketOption& mo) {
    mo.validate();
    TransformedProblem tp;
    tp.kappa = 2.0 * mo.rate / (mo.sigma * mo.sigma);
    tp.alpha = 0.5 * (tp.kappa - 1.0);
    tp.beta = 0.5 * (tp.kappa + 1.0);
    tp.x0 = std::log(mo.spot / mo.strike);
    const double log4 = std::log(4.0);
    tp.x_minus = std::min(tp.x0, 0.0) - log4;
    tp.x_plus = std::max(tp.x0, 0.0) + log4;
    tp.tau_max = mo.maturity * mo.sigma * mo.sigma / 2.0;
    return tp;
}

double initial_condition(double x, const TransformedProblem& tp) {
    return std::max(std::exp(tp.beta * x) - std::exp(tp.alpha * x), 0.0);
}

BoundaryPair boundary_values(double tau, const TransformedProblem& tp) {
    const double slack = 1e-9 * std::max(1.0, tp.tau_max);
    if (tau < -slack || tau > tp.tau_max + slack)
        throw std::domain_error("heat time outside [0, tau_max]");
    const double right = std::exp(tp.beta * tp.x_plus + tp.beta * tp.beta * tau) -
                         std::exp(tp.alpha * tp.x_plus + tp.alpha * tp.alpha * tau);
    return {0.0, right};
}

double recover_price(double u_at_x0, const TransformedProblem& tp, double strike) {
    return strike * std::exp(-tp.alpha * tp.x0 - tp.beta * tp.beta * tp.tau_max) * u_at_x0;
}

double std_normal_cdf(double z) {
    return 0.5 * std::erfc(-z * M_SQRT1_2);
}

double exact_price(const MarketOption& mo) {
    mo.validate();
    const double vol_sqrt_t = mo.sigma * std::sqrt(mo.maturity);
    const double d1 = (std::log(mo.spot / mo.strike) +
                       (mo.rate + 0.5 * mo.sigma * mo.sigma) * mo.maturity) /
                      vol_sqrt_t;
    const double d2 = d1 - vol_sqrt_t;
    return mo.spot * std_normal_cdf(d1) -
           mo.strike * std::exp(-mo.rate * mo.maturity) * std_normal_cdf(d2);
}

}  // namespace parareal
