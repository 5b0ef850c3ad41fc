#include "parareal/parareal.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "parareal/log.hpp"

namespace parareal {

namespace {

double tau_slack(const TransformedProblem& tp) {
    return 1e-9 * std::max(1.0, tp.tau_max);
}

void check_slice_input(const StateVector& lambda, const PararealConfig& cfg) {
    if (static_cast<int>(lambda.values.size()) != cfg.grid.interior_count())
        throw std::domain_error("interface state does not match the grid");
    if (lambda.tau + cfg.decomposition.delta_tau > cfg.problem.tau_max + tau_slack(cfg.problem))
        throw std::domain_error("slice starts past tau_max");
}

/// Fine solves of one iteration; every slot depends only on its own input,
/// so any worker count yields the serial result bitwise.
void run_fine_phase(std::span<const StateVector> lambdas, const PararealConfig& cfg,
                    std::vector<StateVector>& fine) {
    const int n_slices = cfg.decomposition.n_slices;
    const int workers = std::min(std::max(cfg.fine_workers, 1), n_slices);
    if (workers == 1) {
        for (int n = 0; n < n_slices; ++n) fine[n] = fine_propagate(lambdas[n], cfg);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            for (int n = t; n < n_slices; n += workers)
                fine[n] = fine_propagate(lambdas[n], cfg);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

PararealConfig make_config(const MarketOption& mo, int n_slices, double delta_t,
                           double dt, int m, double tol, int max_iter) {
    if (!(tol >= 0.0)) throw std::domain_error("tolerance must be non-negative");
    if (max_iter < 1) throw std::domain_error("max_iter must be at least 1");
    PararealConfig cfg;
    cfg.option = mo;
    cfg.problem = derive_transform(mo);
    cfg.grid = build_grid(cfg.problem, m);
    cfg.decomposition = make_decomposition(mo, n_slices, delta_t, dt);
    cfg.tol = tol;
    cfg.max_iter = max_iter;
    return cfg;
}

StateVector coarse_propagate(const StateVector& lambda, const PararealConfig& cfg) {
    check_slice_input(lambda, cfg);
    return backward_euler_step(lambda, cfg.decomposition.delta_tau, cfg.grid, cfg.problem);
}

StateVector fine_propagate(const StateVector& lambda, const PararealConfig& cfg) {
    check_slice_input(lambda, cfg);
    return propagate(lambda, cfg.decomposition.fine_steps_per_slice,
                     cfg.decomposition.dtau_fine, cfg.grid, cfg.problem);
}

std::vector<StateVector> initialize_coarse(const StateVector& u0, const PararealConfig& cfg) {
    if (std::abs(u0.tau) > tau_slack(cfg.problem))
        throw std::domain_error("initial state must sit at tau = 0");
    std::vector<StateVector> lambdas;
    lambdas.reserve(static_cast<std::size_t>(cfg.decomposition.n_slices) + 1);
    lambdas.push_back(u0);
    for (int n = 0; n < cfg.decomposition.n_slices; ++n)
        lambdas.push_back(coarse_propagate(lambdas.back(), cfg));
    return lambdas;
}

StateVector parareal_update(const StateVector& fine_old, const StateVector& coarse_new,
                            const StateVector& coarse_old) {
    const std::size_t n = fine_old.values.size();
    if (coarse_new.values.size() != n || coarse_old.values.size() != n)
        throw std::domain_error("parareal_update: state size mismatch");
    StateVector out;
    out.tau = coarse_new.tau;
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        out.values[i] = fine_old.values[i] + (coarse_new.values[i] - coarse_old.values[i]);
    return out;
}

double interface_residual(std::span<const StateVector> prev, std::span<const StateVector> next) {
    if (prev.size() != next.size() || prev.empty())
        throw std::domain_error("interface_residual: sequence shape mismatch");
    double res = 0.0;
    for (std::size_t n = 1; n < next.size(); ++n) {
        const double diff = sup_distance(prev[n].values, next[n].values);
        const double scale = std::max(sup_norm(next[n].values), 1.0);
        res = std::max(res, diff / scale);
    }
    return res;
}

double price_of(const StateVector& final_state, const PararealConfig& cfg) {
    const double u = interpolate_at(final_state, cfg.grid, cfg.problem, cfg.problem.x0);
    return recover_price(u, cfg.problem, cfg.option.strike);
}

PararealResult parareal_solve(const PararealConfig& cfg) {
    const int n_slices = cfg.decomposition.n_slices;

    PararealResult out;
    out.lambdas = initialize_coarse(initial_state(cfg.grid, cfg.problem), cfg);

    // G applied to the current iterate, per slice. After the init sweep
    // lambdas[n+1] is exactly that value; each corrector sweep refreshes it.
    std::vector<StateVector> coarse_prev(out.lambdas.begin() + 1, out.lambdas.end());
    std::vector<StateVector> fine(static_cast<std::size_t>(n_slices));

    for (int it = 1; it <= cfg.max_iter; ++it) {
        run_fine_phase(out.lambdas, cfg, fine);

        std::vector<StateVector> next;
        next.reserve(out.lambdas.size());
        next.push_back(out.lambdas[0]);  // the initial interface is never corrected
        for (int n = 0; n < n_slices; ++n) {
            StateVector coarse_new = coarse_propagate(next[static_cast<std::size_t>(n)], cfg);
            next.push_back(parareal_update(fine[static_cast<std::size_t>(n)], coarse_new,
                                           coarse_prev[static_cast<std::size_t>(n)]));
            coarse_prev[static_cast<std::size_t>(n)] = std::move(coarse_new);
        }

        const double res = interface_residual(out.lambdas, next);
        out.lambdas = std::move(next);
        out.residual_trace.push_back(res);
        out.iterations = it;
        if (log_enabled(LogLevel::info))
            log_line(LogLevel::info,
                     "sync iter " + std::to_string(it) + " residual " + std::to_string(res));

        if (res < cfg.tol) {
            out.converged = true;
            break;
        }
        if (it >= n_slices) {
            // After N corrections every interface equals the sequential fine
            // value, so further sweeps cannot change the iterate.
            out.converged = true;
            break;
        }
    }

    out.price = price_of(out.lambdas.back(), cfg);
    return out;
}

SequentialReference sequential_reference(const PararealConfig& cfg) {
    SequentialReference ref;
    ref.interfaces.reserve(static_cast<std::size_t>(cfg.decomposition.n_slices) + 1);
    ref.interfaces.push_back(initial_state(cfg.grid, cfg.problem));
    for (int n = 0; n < cfg.decomposition.n_slices; ++n)
        ref.interfaces.push_back(fine_propagate(ref.interfaces.back(), cfg));
    ref.price = price_of(ref.interfaces.back(), cfg);
    return ref;
}

}  // namespace parareal
