#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace parareal::bench {

/// Bad flags, bad config values, or inconsistent combinations. Exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExperimentSpec {
    std::string mode;  ///< exact|sequential|sync|async|simulate|table1|table3
    double sigma = 0.2;
    double rate = 0.05;
    double spot = 15.0;
    double strike = 20.0;
    double maturity = 0.0;  ///< 0 = derive as slices * delta_t
    double delta_t = 0.1;
    double dt = 0.001;
    int n_slices = 16;
    int m = 250;
    double tol = 1e-8;
    int max_iter = 100;
    int repetitions = 5;
    std::uint64_t seed = 42;
    int workers = 0;  ///< 0 = auto (N for async, hardware for the sync fine pool)
    std::string schedule_path;
    std::string out_path;
};

/// Parses CLI flags plus an optional --config key=value file (flags win).
/// args excludes the program name. Throws UsageError; help text is raised
/// as CLI11's help exception and handled by cli_main.
ExperimentSpec parse_spec(const std::vector<std::string>& args);

struct Table1Row {
    double delta_t = 0.0;
    double va = 0.0;
    double ve = 0.0;
    double eps_a = 0.0;
    double eps_r = 0.0;
    double time_s = 0.0;
};

struct Table3Row {
    int n_slices = 0;
    double sync_iter = 0.0;
    double sync_time_s = 0.0;
    double async_iter_min = 0.0;
    double async_iter_max = 0.0;
    double async_iter_mean = 0.0;
    double async_time_s = 0.0;
};

struct RunReport {
    enum class Kind { table1, table3 };
    Kind kind = Kind::table1;
    std::vector<Table1Row> table1;
    std::vector<Table3Row> table3;
    bool all_converged = true;
};

/// CSV with a fixed header per kind. Numbers are rendered with shortest
/// exact representations so parse_csv(to_csv(r)) reproduces every field.
std::string to_csv(const RunReport& report);
RunReport parse_csv(std::istream& in);
void write_csv(const RunReport& report, const std::string& path);

/// Price sweep over delta_t in {0.1, ..., 1.0} with the asynchronous scheme.
RunReport run_table1(const ExperimentSpec& spec);

/// Synchronous vs asynchronous comparison over N in {16, 32, 64}.
RunReport run_table3(const ExperimentSpec& spec);

/// One run of mode exact|sequential|sync|async|simulate as a one-row report.
RunReport run_single(const ExperimentSpec& spec);

/// Full dispatch: parse, run, emit CSV. Exit codes: 0 ok, 2 usage error,
/// 3 non-convergence.
int cli_main(int argc, const char* const* argv);

}  // namespace parareal::bench
