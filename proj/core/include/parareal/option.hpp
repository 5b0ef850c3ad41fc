#pragma once

namespace parareal {

/// European call option under the Black-Scholes model.
struct MarketOption {
    double sigma;     ///< volatility per sqrt(year), > 0
    double rate;      ///< risk-free rate per year, >= 0
    double spot;      ///< current asset price S, > 0
    double strike;    ///< exercise price E, > 0
    double maturity;  ///< time to maturity T in years, > 0

    /// Throws std::domain_error if any invariant is violated.
    void validate() const;
};

/// Dimensionless heat-equation form of the Black-Scholes problem.
///
/// The option PDE in (S, t) maps onto u_tau = u_xx on the log-price line
/// via S = E e^x, t = T - 2 tau / sigma^2 and an exponential scaling of
/// the unknown. The infinite interval is truncated to [x_minus, x_plus]
/// with Dirichlet data.
struct TransformedProblem {
    double kappa;    ///< 2 r / sigma^2
    double alpha;    ///< (kappa - 1) / 2, exponent of the scaling factor
    double beta;     ///< (kappa + 1) / 2 = alpha + 1
    double x0;       ///< log-moneyness ln(S/E), where the price is read
    double x_minus;  ///< left truncation, min(x0, 0) - ln 4
    double x_plus;   ///< right truncation, max(x0, 0) + ln 4
    double tau_max;  ///< heat-time horizon T sigma^2 / 2
};

/// Pair of Dirichlet values at the truncated endpoints.
struct BoundaryPair {
    double left;
    double right;
};

/// Maps a validated option onto its heat-equation form.
TransformedProblem derive_transform(const MarketOption& mo);

/// Transformed payoff u(x, 0) = max(e^{beta x} - e^{alpha x}, 0).
double initial_condition(double x, const TransformedProblem& tp);

/// Dirichlet data at heat time tau: left endpoint is 0, the right endpoint
/// carries the exact far-field solution of the untruncated problem.
/// tau outside [0, tau_max] (beyond a small rounding slack) is a domain error.
BoundaryPair boundary_values(double tau, const TransformedProblem& tp);

/// Undoes the change of variables: V = E e^{-alpha x0 - beta^2 tau_max} u(x0, tau_max).
double recover_price(double u_at_x0, const TransformedProblem& tp, double strike);

/// Standard normal CDF, accurate to better than 1e-10 absolute.
double std_normal_cdf(double z);

/// Closed-form European call price (the pricing oracle).
double exact_price(const MarketOption& mo);

}  // namespace parareal
