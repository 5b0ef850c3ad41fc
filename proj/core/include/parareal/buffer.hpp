#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <mutex>
#include <vector>

#include "parareal/state.hpp"

namespace parareal {

/// Shared interface states for the asynchronous runtime, one slot per slice
/// boundary n = 0..N. Writers publish whole states by pointer swap under a
/// briefly held per-slot lock; readers always get a consistent
/// (value, version) snapshot, never a torn state.
class InterfaceBuffer {
public:
    struct Snapshot {
        std::shared_ptr<const StateVector> state;
        std::uint64_t version = 0;
    };

    explicit InterfaceBuffer(std::vector<StateVector> initial);

    int slots() const { return static_cast<int>(count_); }

    Snapshot read(int slot) const;

    /// Swaps in the new state, bumps the version and records the relative
    /// sup-norm change against the previous content. Slot 0 is immutable.
    void publish(int slot, StateVector next);

    std::uint64_t version(int slot) const;
    double local_residual(int slot) const;

    /// Residuals of slots 1..N in one sweep (slot 0 never changes).
    std::vector<double> residual_sweep() const;

    /// Copies of the latest states, one per slot.
    std::vector<StateVector> latest() const;

private:
    struct Slot {
        mutable std::mutex mtx;
        std::shared_ptr<const StateVector> state;
        std::uint64_t version = 0;
        double residual = std::numeric_limits<double>::infinity();
    };

    std::size_t count_ = 0;
    std::unique_ptr<Slot[]> slots_;
};

}  // namespace parareal
