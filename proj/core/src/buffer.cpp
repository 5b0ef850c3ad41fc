#include "parareal/buffer.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace parareal {

InterfaceBuffer::InterfaceBuffer(std::vector<StateVector> initial) {
    if (initial.size() < 2)
        throw std::domain_error("interface buffer needs at least two slots");
    count_ = initial.size();
    slots_ = std::make_unique<Slot[]>(count_);
    for (std::size_t i = 0; i < count_; ++i)
        slots_[i].state = std::make_shared<const StateVector>(std::move(initial[i]));
    slots_[0].residual = 0.0;  // never written
}

InterfaceBuffer::Snapshot InterfaceBuffer::read(int slot) const {
    const Slot& s = slots_[static_cast<std::size_t>(slot)];
    std::lock_guard lock(s.mtx);
    return {s.state, s.version};
}

void InterfaceBuffer::publish(int slot, StateVector next) {
    if (slot < 1 || slot >= static_cast<int>(count_))
        throw std::domain_error("publish: slot 0 is immutable, slot must be in [1, N]");
    auto fresh = std::make_shared<const StateVector>(std::move(next));

    Slot& s = slots_[static_cast<std::size_t>(slot)];
    std::shared_ptr<const StateVector> previous;  // dropped outside the lock
    {
        std::lock_guard lock(s.mtx);
        const double diff = sup_distance(s.state->values, fresh->values);
        const double scale = std::max(sup_norm(fresh->values), 1.0);
        previous = std::exchange(s.state, std::move(fresh));
        s.residual = diff / scale;
        ++s.version;
    }
}

std::uint64_t InterfaceBuffer::version(int slot) const {
    const Slot& s = slots_[static_cast<std::size_t>(slot)];
    std::lock_guard lock(s.mtx);
    return s.version;
}

double InterfaceBuffer::local_residual(int slot) const {
    const Slot& s = slots_[static_cast<std::size_t>(slot)];
    std::lock_guard lock(s.mtx);
    return s.residual;
}

std::vector<double> InterfaceBuffer::residual_sweep() const {
    std::vector<double> out;
    out.reserve(count_ - 1);
    for (std::size_t i = 1; i < count_; ++i) out.push_back(local_residual(static_cast<int>(i)));
    return out;
}

std::vector<StateVector> InterfaceBuffer::latest() const {
    std::vector<StateVector> out;
    out.reserve(count_);
    for (std::size_t i = 0; i < count_; ++i) out.push_back(*read(static_cast<int>(i)).state);
    return out;
}

}  // namespace parareal
