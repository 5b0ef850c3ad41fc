#include "parareal/schedule.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace parareal {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Strips "name={...}" and returns the brace contents.
std::string brace_body(const std::string& field, const std::string& name, std::size_t line_no) {
    const std::string t = trim(field);
    const std::string prefix = name + "={";
    if (!t.starts_with(prefix) || !t.ends_with("}"))
        throw std::runtime_error("schedule line " + std::to_string(line_no) +
                                 ": expected " + name + "={...}");
    return t.substr(prefix.size(), t.size() - prefix.size() - 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    return out;
}

std::uint64_t parse_uint(const std::string& tok, std::size_t line_no) {
    const std::string t = trim(tok);
    try {
        std::size_t used = 0;
        const std::uint64_t v = std::stoull(t, &used);
        if (used != t.size() || t.empty() || t[0] == '-') throw std::invalid_argument(t);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error("schedule line " + std::to_string(line_no) +
                                 ": bad integer '" + t + "'");
    }
}

}  // namespace

ScheduleCheck check_admissible(const Schedule& s, int n_slices, int window) {
    if (s.events.empty()) return {false, "schedule has no events"};
    if (n_slices < 1) return {false, "schedule needs at least one slice"};

    for (std::size_t k = 0; k < s.events.size(); ++k) {
        const auto& ev = s.events[k];
        if (ev.updates.empty())
            return {false, "event " + std::to_string(k) + " has an empty activation set"};
        int prev_slice = -1;
        for (const auto& up : ev.updates) {
            if (up.slice < 0 || up.slice >= n_slices)
                return {false, "event " + std::to_string(k) + " activates unknown slice " +
                                   std::to_string(up.slice)};
            if (up.slice <= prev_slice)
                return {false, "event " + std::to_string(k) +
                                   " has duplicate or unordered slices"};
            prev_slice = up.slice;
            if (up.base_version > k)
                return {false, "event " + std::to_string(k) + " slice " +
                                   std::to_string(up.slice) + " reads rho version " +
                                   std::to_string(up.base_version) + " > k"};
            if (up.fresh_version > k + 1)
                return {false, "event " + std::to_string(k) + " slice " +
                                   std::to_string(up.slice) + " reads mu version " +
                                   std::to_string(up.fresh_version) + " > k+1"};
        }
    }

    const int len = static_cast<int>(s.events.size());
    const int w = window > 0 ? std::min(window, len) : len;
    for (int start = 0; start + w <= len; ++start) {
        std::set<int> seen;
        for (int k = start; k < start + w; ++k)
            for (const auto& up : s.events[static_cast<std::size_t>(k)].updates)
                seen.insert(up.slice);
        for (int n = 0; n < n_slices; ++n)
            if (!seen.contains(n))
                return {false, "slice " + std::to_string(n) +
                                   " never active in events [" + std::to_string(start) +
                                   ", " + std::to_string(start + w) + ")"};
    }
    return {};
}

std::string serialize_schedule(const Schedule& s) {
    std::ostringstream out;
    for (std::size_t k = 0; k < s.events.size(); ++k) {
        const auto& ev = s.events[k];
        out << k << "; P={";
        for (std::size_t i = 0; i < ev.updates.size(); ++i)
            out << (i ? "," : "") << ev.updates[i].slice;
        out << "}; rho={";
        for (std::size_t i = 0; i < ev.updates.size(); ++i)
            out << (i ? "," : "") << ev.updates[i].slice << ':' << ev.updates[i].base_version;
        out << "}; mu={";
        for (std::size_t i = 0; i < ev.updates.size(); ++i)
            out << (i ? "," : "") << ev.updates[i].slice << ':' << ev.updates[i].fresh_version;
        out << "}\n";
    }
    return out.str();
}

Schedule parse_schedule(std::istream& in) {
    Schedule s;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto fields = split(line, ';');
        if (fields.size() != 4)
            throw std::runtime_error("schedule line " + std::to_string(line_no) +
                                     ": expected 'k; P={..}; rho={..}; mu={..}'");

        const std::size_t k = parse_uint(fields[0], line_no);
        if (k != s.events.size())
            throw std::runtime_error("schedule line " + std::to_string(line_no) +
                                     ": event index " + std::to_string(k) + " out of order");

        ScheduleEvent ev;
        for (const auto& tok : split(brace_body(fields[1], "P", line_no), ',')) {
            if (trim(tok).empty()) continue;
            ScheduleEntry e;
            e.slice = static_cast<int>(parse_uint(tok, line_no));
            ev.updates.push_back(e);
        }
        auto lookup = [&](int slice) -> ScheduleEntry& {
            for (auto& e : ev.updates)
                if (e.slice == slice) return e;
            throw std::runtime_error("schedule line " + std::to_string(line_no) +
                                     ": version for slice " + std::to_string(slice) +
                                     " not in P");
        };
        for (const auto& tok : split(brace_body(fields[2], "rho", line_no), ',')) {
            if (trim(tok).empty()) continue;
            const auto kv = split(tok, ':');
            if (kv.size() != 2)
                throw std::runtime_error("schedule line " + std::to_string(line_no) +
                                         ": bad rho entry '" + tok + "'");
            lookup(static_cast<int>(parse_uint(kv[0], line_no))).base_version =
                parse_uint(kv[1], line_no);
        }
        for (const auto& tok : split(brace_body(fields[3], "mu", line_no), ',')) {
            if (trim(tok).empty()) continue;
            const auto kv = split(tok, ':');
            if (kv.size() != 2)
                throw std::runtime_error("schedule line " + std::to_string(line_no) +
                                         ": bad mu entry '" + tok + "'");
            lookup(static_cast<int>(parse_uint(kv[0], line_no))).fresh_version =
                parse_uint(kv[1], line_no);
        }
        std::sort(ev.updates.begin(), ev.updates.end(),
                  [](const ScheduleEntry& a, const ScheduleEntry& b) { return a.slice < b.slice; });
        s.events.push_back(std::move(ev));
    }
    return s;
}

Schedule parse_schedule_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open schedule file: " + path);
    return parse_schedule(in);
}

Schedule synchronous_schedule(int n_slices, int n_iterations) {
    Schedule s;
    s.events.resize(static_cast<std::size_t>(n_iterations));
    for (int k = 0; k < n_iterations; ++k) {
        auto& ev = s.events[static_cast<std::size_t>(k)];
        ev.updates.reserve(static_cast<std::size_t>(n_slices));
        for (int n = 0; n < n_slices; ++n)
            ev.updates.push_back({n, static_cast<std::uint64_t>(k),
                                  static_cast<std::uint64_t>(k) + 1});
    }
    return s;
}

Schedule bounded_delay_schedule(int n_slices, int n_events, int max_delay,
                                std::uint64_t seed) {
    if (n_slices < 1 || n_events < 1 || max_delay < 0)
        throw std::domain_error("bounded_delay_schedule: bad shape");
    // Modulo draws instead of std::uniform_int_distribution so the same seed
    // reproduces the same schedule on any standard library.
    std::mt19937_64 rng(seed);
    Schedule s;
    std::vector<int> last_active(static_cast<std::size_t>(n_slices), -1);

    for (int k = 0; k < n_events; ++k) {
        ScheduleEvent ev;
        for (int n = 0; n < n_slices; ++n) {
            const bool forced = k - last_active[static_cast<std::size_t>(n)] >= 3;
            const bool drawn = rng() % 100 < 60;
            if (forced || drawn) {
                ScheduleEntry e;
                e.slice = n;
                const auto back_r = rng() % static_cast<std::uint64_t>(max_delay + 1);
                const auto back_m = rng() % static_cast<std::uint64_t>(max_delay + 1);
                const auto uk = static_cast<std::uint64_t>(k);
                e.base_version = back_r > uk ? 0 : uk - back_r;
                e.fresh_version = back_m > uk + 1 ? 0 : uk + 1 - back_m;
                ev.updates.push_back(e);
                last_active[static_cast<std::size_t>(n)] = k;
            }
        }
        if (ev.updates.empty()) {
            const int n = static_cast<int>(rng() % static_cast<std::uint64_t>(n_slices));
            ev.updates.push_back({n, static_cast<std::uint64_t>(k),
                                  static_cast<std::uint64_t>(k) + 1});
            last_active[static_cast<std::size_t>(n)] = k;
        }
        s.events.push_back(std::move(ev));
    }
    return s;
}

}  // namespace parareal
