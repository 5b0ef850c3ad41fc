#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace parareal {

/// One slice activation inside an event: the slice updates its right
/// interface reading two (possibly different) historical versions of its
/// left interface. base_version feeds the fine solve and the subtracted
/// coarse term; fresh_version feeds the added coarse term and may be one
/// iterate ahead (flexible communication).
struct ScheduleEntry {
    int slice = 0;
    std::uint64_t base_version = 0;   ///< rho_n(k) <= k
    std::uint64_t fresh_version = 0;  ///< mu_n(k)  <= k+1
};

/// Event k of a deterministic replay; entries are kept in ascending slice order.
struct ScheduleEvent {
    std::vector<ScheduleEntry> updates;
};

struct Schedule {
    std::vector<ScheduleEvent> events;
};

struct ScheduleCheck {
    bool ok = true;
    std::string violation;  ///< first violated condition when !ok
    explicit operator bool() const { return ok; }
};

/// Finite-prefix admissibility: non-empty activation sets, version caps
/// rho <= k and mu <= k+1, and every slice active within every window of
/// `window` consecutive events (0 means one window spanning the schedule).
ScheduleCheck check_admissible(const Schedule& s, int n_slices, int window = 0);

/// Line-oriented text form, one event per line:
///   k; P={n,...}; rho={n:v,...}; mu={n:v,...}
std::string serialize_schedule(const Schedule& s);
Schedule parse_schedule(std::istream& in);
Schedule parse_schedule_file(const std::string& path);

/// The schedule that replays the synchronous iteration: every event
/// activates all slices with base = k and fresh = k+1.
Schedule synchronous_schedule(int n_slices, int n_iterations);

/// Seeded random schedule with read delays <= max_delay and every slice
/// forced active at least once every four events. Admissible by construction.
Schedule bounded_delay_schedule(int n_slices, int n_events, int max_delay,
                                std::uint64_t seed);

}  // namespace parareal
