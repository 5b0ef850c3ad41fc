#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "parareal/buffer.hpp"
#include "parareal/parareal.hpp"
#include "parareal/schedule.hpp"

namespace parareal {

struct DetectionParams {
    /// Initial coordinator poll period. The coordinator backs the interval
    /// off geometrically (up to max_sweep_interval_us) so the progress guard
    /// eventually spans a full scheduling rotation even when workers
    /// outnumber hardware threads.
    int sweep_interval_us = 1000;
    int max_sweep_interval_us = 200000;
    std::uint64_t max_total_updates = 0;  ///< 0 means 16 * n_slices * max_iter
};

struct AsyncRunStats {
    std::vector<std::uint64_t> worker_updates;  ///< per-slice update counts
    std::uint64_t detection_sweeps = 0;
    double wall_seconds = 0.0;

    std::uint64_t min_updates() const;
    std::uint64_t max_updates() const;
    double mean_updates() const;
};

/// Termination check for the free-running workers: fires only when two
/// consecutive sweeps see every local residual below tol AND every worker
/// completed at least one full update in between. A single quiet sweep can
/// be a transient; the progress guard rules it out.
class ConvergenceDetector {
public:
    ConvergenceDetector(double tol, int n_workers);

    /// residuals: slots 1..N; update_counts: one per worker. True once converged.
    bool observe(std::span<const double> residuals,
                 std::span<const std::uint64_t> update_counts);

private:
    double tol_;
    int n_workers_;
    bool have_previous_ = false;
    bool previous_quiet_ = false;
    std::vector<std::uint64_t> previous_counts_;
};

/// One asynchronous update of slice n: snapshot the left interface, run the
/// fine solve on it, re-read the interface (absorbing anything published
/// meanwhile), then publish fine + (coarse(fresh) - coarse(stale)) to the
/// right interface. Slot 0 is never written.
void worker_update(int slice, InterfaceBuffer& buffers, const PararealConfig& cfg);

struct AsyncResult {
    PararealResult result;
    AsyncRunStats stats;
};

/// Barrier-free iteration with one worker thread per slice (workers must
/// equal N). Workers loop worker_update until the detector fires or the
/// total update cap is hit (then flagged non-converged).
AsyncResult async_solve(const PararealConfig& cfg, int workers,
                        const DetectionParams& detection = {});

/// Single-threaded deterministic replay of an admissible schedule; event k
/// applies the asynchronous update with exactly the versions named by the
/// schedule. Bitwise reproducible; the synchronous schedule reproduces
/// parareal_solve iterate for iterate.
PararealResult simulate_schedule(const PararealConfig& cfg, const Schedule& schedule);

/// Replay starting from caller-supplied interfaces (N+1 states) instead of
/// the coarse initialization.
PararealResult simulate_schedule(const PararealConfig& cfg, const Schedule& schedule,
                                 std::vector<StateVector> initial);

}  // namespace parareal
