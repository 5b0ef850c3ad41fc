#include "parareal/async.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "parareal/log.hpp"

namespace parareal {

std::uint64_t AsyncRunStats::min_updates() const {
    if (worker_updates.empty()) return 0;
    return *std::min_element(worker_updates.begin(), worker_updates.end());
}

std::uint64_t AsyncRunStats::max_updates() const {
    if (worker_updates.empty()) return 0;
    return *std::max_element(worker_updates.begin(), worker_updates.end());
}

double AsyncRunStats::mean_updates() const {
    if (worker_updates.empty()) return 0.0;
    const auto total = std::accumulate(worker_updates.begin(), worker_updates.end(),
                                       std::uint64_t{0});
    return static_cast<double>(total) / static_cast<double>(worker_updates.size());
}

ConvergenceDetector::ConvergenceDetector(double tol, int n_workers)
    : tol_(tol), n_workers_(n_workers) {
    if (n_workers < 1) throw std::domain_error("detector needs at least one worker");
}

bool ConvergenceDetector::observe(std::span<const double> residuals,
                                  std::span<const std::uint64_t> update_counts) {
    if (static_cast<int>(update_counts.size()) != n_workers_)
        throw std::domain_error("detector: update count shape mismatch");

    bool quiet = true;
    for (double r : residuals)
        if (!(r < tol_)) quiet = false;

    bool progressed = have_previous_;
    if (have_previous_)
        for (int i = 0; i < n_workers_; ++i)
            if (update_counts[static_cast<std::size_t>(i)] <
                previous_counts_[static_cast<std::size_t>(i)] + 1)
                progressed = false;

    const bool fire = quiet && previous_quiet_ && progressed;
    previous_quiet_ = quiet;
    previous_counts_.assign(update_counts.begin(), update_counts.end());
    have_previous_ = true;
    return fire;
}

void worker_update(int slice, InterfaceBuffer& buffers, const PararealConfig& cfg) {
    // Stale read feeds the expensive fine solve; the second read absorbs
    // anything published while it ran, so the cheap coarse prediction uses
    // the freshest interface available.
    const auto stale = buffers.read(slice);
    StateVector fine = fine_propagate(*stale.state, cfg);
    const auto fresh = buffers.read(slice);
    StateVector coarse_fresh = coarse_propagate(*fresh.state, cfg);
    StateVector coarse_stale = coarse_propagate(*stale.state, cfg);
    if (log_enabled(LogLevel::trace))
        log_line(LogLevel::trace, "worker " + std::to_string(slice) + " read v" +
                                      std::to_string(stale.version) + "/v" +
                                      std::to_string(fresh.version));
    buffers.publish(slice + 1, parareal_update(fine, coarse_fresh, coarse_stale));
}

AsyncResult async_solve(const PararealConfig& cfg, int workers,
                        const DetectionParams& detection) {
    const int n_slices = cfg.decomposition.n_slices;
    if (workers != n_slices)
        throw std::domain_error("async runtime pins one slice per worker: workers must equal N");

    // Safety net, not a tuning knob: generous enough that only a genuinely
    // stuck run ever hits it.
    const std::uint64_t cap = detection.max_total_updates
                                  ? detection.max_total_updates
                                  : 16ull * static_cast<std::uint64_t>(n_slices) *
                                        static_cast<std::uint64_t>(cfg.max_iter);

    InterfaceBuffer buffers(initialize_coarse(initial_state(cfg.grid, cfg.problem), cfg));

    auto counts = std::make_unique<std::atomic<std::uint64_t>[]>(
        static_cast<std::size_t>(n_slices));
    for (int i = 0; i < n_slices; ++i) counts[static_cast<std::size_t>(i)] = 0;
    std::atomic<std::uint64_t> total_updates{0};
    std::atomic<bool> stop{false};
    std::atomic<bool> detected{false};

    const auto t0 = std::chrono::steady_clock::now();

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_slices));
    for (int n = 0; n < n_slices; ++n) {
        pool.emplace_back([&, n] {
            while (!stop.load(std::memory_order_relaxed)) {
                worker_update(n, buffers, cfg);
                counts[static_cast<std::size_t>(n)].fetch_add(1, std::memory_order_relaxed);
                if (total_updates.fetch_add(1, std::memory_order_relaxed) + 1 >= cap)
                    stop.store(true, std::memory_order_relaxed);
                // Oversubscribed hosts: hand the core on so no slice stalls.
                std::this_thread::yield();
            }
        });
    }

    ConvergenceDetector detector(cfg.tol, n_slices);
    AsyncRunStats stats;
    std::vector<double> sweep_trace;
    std::vector<std::uint64_t> count_snapshot(static_cast<std::size_t>(n_slices));
    int interval_us = std::max(detection.sweep_interval_us, 1);
    while (!stop.load(std::memory_order_relaxed)) {
        std::this_thread::sleep_for(std::chrono::microseconds(interval_us));
        interval_us = std::min(interval_us + interval_us / 2 + 1,
                               std::max(detection.max_sweep_interval_us, interval_us));
        const std::vector<double> residuals = buffers.residual_sweep();
        for (int i = 0; i < n_slices; ++i)
            count_snapshot[static_cast<std::size_t>(i)] =
                counts[static_cast<std::size_t>(i)].load(std::memory_order_relaxed);
        ++stats.detection_sweeps;
        sweep_trace.push_back(*std::max_element(residuals.begin(), residuals.end()));
        if (log_enabled(LogLevel::info))
            log_line(LogLevel::info, "async sweep " + std::to_string(stats.detection_sweeps) +
                                         " max residual " + std::to_string(sweep_trace.back()));
        if (detector.observe(residuals, count_snapshot)) {
            detected.store(true, std::memory_order_relaxed);
            stop.store(true, std::memory_order_relaxed);
        }
    }
    for (auto& th : pool) th.join();

    stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    stats.worker_updates.resize(static_cast<std::size_t>(n_slices));
    for (int i = 0; i < n_slices; ++i)
        stats.worker_updates[static_cast<std::size_t>(i)] =
            counts[static_cast<std::size_t>(i)].load();

    AsyncResult out;
    out.result.lambdas = buffers.latest();
    const std::vector<double> final_residuals = buffers.residual_sweep();
    sweep_trace.push_back(*std::max_element(final_residuals.begin(), final_residuals.end()));
    out.result.residual_trace = std::move(sweep_trace);
    out.result.iterations = static_cast<int>(stats.max_updates());
    out.result.converged = detected.load();
    out.result.price = price_of(out.result.lambdas.back(), cfg);
    out.stats = std::move(stats);
    return out;
}

PararealResult simulate_schedule(const PararealConfig& cfg, const Schedule& schedule) {
    return simulate_schedule(cfg, schedule,
                             initialize_coarse(initial_state(cfg.grid, cfg.problem), cfg));
}

PararealResult simulate_schedule(const PararealConfig& cfg, const Schedule& schedule,
                                 std::vector<StateVector> initial) {
    const int n_slices = cfg.decomposition.n_slices;
    const ScheduleCheck chk = check_admissible(schedule, n_slices);
    if (!chk) throw std::domain_error("inadmissible schedule: " + chk.violation);
    if (static_cast<int>(initial.size()) != n_slices + 1)
        throw std::domain_error("simulate_schedule: need N+1 initial interfaces");

    // Full iterate history: rho/mu versions index into it.
    std::vector<std::vector<StateVector>> history;
    history.push_back(std::move(initial));

    PararealResult out;
    for (std::size_t k = 0; k < schedule.events.size(); ++k) {
        const auto& cur = history[k];
        std::vector<StateVector> next = cur;  // inactive components carry over
        for (const auto& up : schedule.events[k].updates) {
            const std::size_t n = static_cast<std::size_t>(up.slice);
            const StateVector& base = history[up.base_version][n];
            // mu may name the iterate being built; slices are processed in
            // ascending order, so next[n] is already final here.
            const StateVector& freshest =
                up.fresh_version == k + 1 ? next[n] : history[up.fresh_version][n];
            StateVector fine = fine_propagate(base, cfg);
            StateVector coarse_fresh = coarse_propagate(freshest, cfg);
            StateVector coarse_base = coarse_propagate(base, cfg);
            next[n + 1] = parareal_update(fine, coarse_fresh, coarse_base);
        }
        out.residual_trace.push_back(interface_residual(cur, next));
        if (log_enabled(LogLevel::trace))
            log_line(LogLevel::trace, "simulate event " + std::to_string(k) + " residual " +
                                          std::to_string(out.residual_trace.back()));
        history.push_back(std::move(next));
    }

    out.lambdas = history.back();
    out.iterations = static_cast<int>(schedule.events.size());
    out.converged = out.residual_trace.back() < cfg.tol;
    out.price = price_of(out.lambdas.back(), cfg);
    return out;
}

}  // namespace parareal
