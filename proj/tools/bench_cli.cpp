#include "bench_cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "parareal/async.hpp"
#include "parareal/parareal.hpp"
#include "parareal/schedule.hpp"

namespace parareal::bench {

namespace {

struct HelpRequested {
    std::string text;
};

constexpr const char* kTable1Header = "dT,Va,Ve,eps_a,eps_r,time_s";
constexpr const char* kTable3Header =
    "N,sync_iter,sync_time_s,async_iter_min,async_iter_max,async_iter_mean,async_time_s";
constexpr int kScheduleMaxDelay = 3;

std::string fmt(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& tok) {
    try {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error("CSV: bad number '" + tok + "'");
    }
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream in(line);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(tok);
    return out;
}

MarketOption option_of(const ExperimentSpec& spec, double maturity) {
    return {spec.sigma, spec.rate, spec.spot, spec.strike, maturity};
}

PararealConfig config_of(const ExperimentSpec& spec, int n_slices, double delta_t,
                         double maturity) {
    try {
        PararealConfig cfg = make_config(option_of(spec, maturity), n_slices, delta_t,
                                         spec.dt, spec.m, spec.tol, spec.max_iter);
        return cfg;
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }
}

int sync_pool_size(const ExperimentSpec& spec) {
    if (spec.workers > 0) return spec.workers;
    const unsigned hw = std::thread::hardware_concurrency();
    return std::max(1, static_cast<int>(hw ? hw : 1));
}

double mean(const std::vector<double>& xs) {
    double sum = 0.0;
    for (double x : xs) sum += x;
    return xs.empty() ? 0.0 : sum / static_cast<double>(xs.size());
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

Table1Row price_row(const ExperimentSpec& spec, double delta_t, double va,
                    double time_s) {
    Table1Row row;
    row.delta_t = delta_t;
    row.va = va;
    row.ve = exact_price(option_of(spec, spec.n_slices * delta_t));
    row.eps_a = std::abs(row.va - row.ve);
    row.eps_r = row.eps_a / row.ve;
    row.time_s = time_s;
    return row;
}

void validate(ExperimentSpec& spec) {
    if (spec.sigma <= 0.0 || spec.spot <= 0.0 || spec.strike <= 0.0)
        throw UsageError("sigma, spot and strike must be positive");
    if (spec.rate < 0.0) throw UsageError("rate must be non-negative");
    if (spec.tol <= 0.0) throw UsageError("tol must be positive");
    if (spec.max_iter < 1) throw UsageError("max-iter must be at least 1");
    if (spec.repetitions < 1) throw UsageError("reps must be at least 1");
    if (spec.m < 2) throw UsageError("m must be at least 2");
    if (spec.n_slices < 1) throw UsageError("slices must be at least 1");
    if (spec.delta_t <= 0.0 || spec.dt <= 0.0) throw UsageError("dT and dt must be positive");

    const double ratio = spec.delta_t / spec.dt;
    if (std::abs(ratio - std::round(ratio)) > 1e-9 * std::max(1.0, ratio))
        throw UsageError("dT/dt must be an integer number of fine steps");

    if (spec.maturity == 0.0) {
        spec.maturity = spec.n_slices * spec.delta_t;
    } else if (spec.mode != "exact" &&
               std::abs(spec.n_slices * spec.delta_t - spec.maturity) >
                   1e-9 * std::max(1.0, spec.maturity)) {
        throw UsageError("maturity must equal slices * dT");
    }
    if (spec.maturity <= 0.0) throw UsageError("maturity must be positive");

    if (spec.mode == "async" && spec.workers != 0 && spec.workers != spec.n_slices)
        throw UsageError("async mode pins one worker per slice: workers must equal slices");
}

void print_table1_row(const char* mode, const Table1Row& r) {
    std::printf("%-10s dT=%-4g Va=%-10.6f Ve=%-10.6f eps_a=%.3e eps_r=%.3e time=%.3fs\n",
                mode, r.delta_t, r.va, r.ve, r.eps_a, r.eps_r, r.time_s);
}

}  // namespace

ExperimentSpec parse_spec(const std::vector<std::string>& args) {
    ExperimentSpec spec;
    CLI::App app{"Time-parallel Black-Scholes pricing benchmarks"};
    app.set_config("--config", "", "flat key=value config file; flags take precedence");

    app.add_option("--mode", spec.mode, "exact|sequential|sync|async|simulate|table1|table3")
        ->required()
        ->check(CLI::IsMember(
            {"exact", "sequential", "sync", "async", "simulate", "table1", "table3"}));
    app.add_option("--sigma", spec.sigma, "volatility per sqrt(year)");
    app.add_option("--rate", spec.rate, "risk-free rate per year");
    app.add_option("--spot", spec.spot, "asset price S");
    app.add_option("--strike", spec.strike, "exercise price E");
    app.add_option("--maturity", spec.maturity, "maturity T in years (default slices*dT)");
    app.add_option("--dT", spec.delta_t, "slice width in years");
    app.add_option("--dt", spec.dt, "fine step in years");
    app.add_option("--slices", spec.n_slices, "number of time slices N");
    app.add_option("--m", spec.m, "spatial sub-intervals");
    app.add_option("--tol", spec.tol, "relative interface increment tolerance");
    app.add_option("--max-iter", spec.max_iter, "iteration cap (and simulate event count)");
    app.add_option("--reps", spec.repetitions, "repetitions for averaged modes");
    app.add_option("--seed", spec.seed, "base seed; repetition i uses seed+i");
    app.add_option("--workers", spec.workers,
                   "fine-solve threads (sync) / worker check (async); 0 = auto");
    app.add_option("--schedule", spec.schedule_path,
                   "schedule file for simulate mode (default: generated from seed)");
    app.add_option("--out", spec.out_path, "CSV destination");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }
    // The comparison sweep has its own canonical setup; explicit values
    // (flags or config file) still win.
    if (spec.mode == "table3") {
        if (app.count("--spot") == 0) spec.spot = 25.0;
        if (app.count("--strike") == 0) spec.strike = 30.0;
        if (app.count("--m") == 0) spec.m = 150;
    }
    validate(spec);
    return spec;
}

std::string to_csv(const RunReport& report) {
    std::string out;
    if (report.kind == RunReport::Kind::table1) {
        out = std::string(kTable1Header) + "\n";
        for (const auto& r : report.table1)
            out += fmt(r.delta_t) + "," + fmt(r.va) + "," + fmt(r.ve) + "," + fmt(r.eps_a) +
                   "," + fmt(r.eps_r) + "," + fmt(r.time_s) + "\n";
    } else {
        out = std::string(kTable3Header) + "\n";
        for (const auto& r : report.table3)
            out += std::to_string(r.n_slices) + "," + fmt(r.sync_iter) + "," +
                   fmt(r.sync_time_s) + "," + fmt(r.async_iter_min) + "," +
                   fmt(r.async_iter_max) + "," + fmt(r.async_iter_mean) + "," +
                   fmt(r.async_time_s) + "\n";
    }
    return out;
}

RunReport parse_csv(std::istream& in) {
    RunReport report;
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("CSV: empty input");
    if (line == kTable1Header) {
        report.kind = RunReport::Kind::table1;
    } else if (line == kTable3Header) {
        report.kind = RunReport::Kind::table3;
    } else {
        throw std::runtime_error("CSV: unrecognized header '" + line + "'");
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto tok = split_csv(line);
        if (report.kind == RunReport::Kind::table1) {
            if (tok.size() != 6) throw std::runtime_error("CSV: expected 6 columns");
            report.table1.push_back({parse_double(tok[0]), parse_double(tok[1]),
                                     parse_double(tok[2]), parse_double(tok[3]),
                                     parse_double(tok[4]), parse_double(tok[5])});
        } else {
            if (tok.size() != 7) throw std::runtime_error("CSV: expected 7 columns");
            Table3Row r;
            r.n_slices = std::stoi(tok[0]);
            r.sync_iter = parse_double(tok[1]);
            r.sync_time_s = parse_double(tok[2]);
            r.async_iter_min = parse_double(tok[3]);
            r.async_iter_max = parse_double(tok[4]);
            r.async_iter_mean = parse_double(tok[5]);
            r.async_time_s = parse_double(tok[6]);
            report.table3.push_back(r);
        }
    }
    return report;
}

void write_csv(const RunReport& report, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open CSV destination: " + path);
    out << to_csv(report);
    if (!out) throw std::runtime_error("failed writing CSV: " + path);
}

RunReport run_single(const ExperimentSpec& spec) {
    RunReport report;
    report.kind = RunReport::Kind::table1;

    if (spec.mode == "exact") {
        Timer timer;
        const double ve = exact_price(option_of(spec, spec.maturity));
        Table1Row row;
        row.delta_t = spec.delta_t;
        row.va = ve;
        row.ve = ve;
        row.time_s = timer.seconds();
        report.table1.push_back(row);
        print_table1_row("exact", row);
        return report;
    }

    PararealConfig cfg = config_of(spec, spec.n_slices, spec.delta_t, spec.maturity);

    if (spec.mode == "sequential") {
        Timer timer;
        const SequentialReference ref = sequential_reference(cfg);
        const Table1Row row = price_row(spec, spec.delta_t, ref.price, timer.seconds());
        report.table1.push_back(row);
        print_table1_row("sequential", row);
        return report;
    }

    if (spec.mode == "sync") {
        cfg.fine_workers = sync_pool_size(spec);
        Timer timer;
        const PararealResult res = parareal_solve(cfg);
        const Table1Row row = price_row(spec, spec.delta_t, res.price, timer.seconds());
        report.table1.push_back(row);
        report.all_converged = res.converged;
        print_table1_row("sync", row);
        std::printf("           iterations=%d converged=%s\n", res.iterations,
                    res.converged ? "yes" : "no");
        return report;
    }

    if (spec.mode == "async") {
        std::vector<double> prices, times;
        bool all_ok = true;
        AsyncRunStats last_stats;
        for (int rep = 0; rep < spec.repetitions; ++rep) {
            Timer timer;
            const AsyncResult res = async_solve(cfg, cfg.decomposition.n_slices);
            prices.push_back(res.result.price);
            times.push_back(timer.seconds());
            all_ok = all_ok && res.result.converged;
            last_stats = res.stats;
        }
        const Table1Row row = price_row(spec, spec.delta_t, mean(prices), mean(times));
        report.table1.push_back(row);
        report.all_converged = all_ok;
        print_table1_row("async", row);
        std::printf("           last rep iterations min=%llu max=%llu mean=%.1f\n",
                    static_cast<unsigned long long>(last_stats.min_updates()),
                    static_cast<unsigned long long>(last_stats.max_updates()),
                    last_stats.mean_updates());
        return report;
    }

    if (spec.mode == "simulate") {
        std::vector<double> prices;
        bool all_ok = true;
        int last_events = 0;
        for (int rep = 0; rep < spec.repetitions; ++rep) {
            Schedule schedule;
            if (spec.schedule_path.empty()) {
                schedule = bounded_delay_schedule(spec.n_slices, spec.max_iter,
                                                  kScheduleMaxDelay,
                                                  spec.seed + static_cast<std::uint64_t>(rep));
            } else {
                try {
                    schedule = parse_schedule_file(spec.schedule_path);
                } catch (const std::exception& e) {
                    throw UsageError(e.what());
                }
            }
            const PararealResult res = simulate_schedule(cfg, schedule);
            prices.push_back(res.price);
            all_ok = all_ok && res.converged;
            last_events = res.iterations;
        }
        // Deterministic replay: the wall clock is not part of the result.
        const Table1Row row = price_row(spec, spec.delta_t, mean(prices), 0.0);
        report.table1.push_back(row);
        report.all_converged = all_ok;
        print_table1_row("simulate", row);
        std::printf("           events=%d converged=%s\n", last_events, all_ok ? "yes" : "no");
        return report;
    }

    throw UsageError("unknown mode: " + spec.mode);
}

RunReport run_table1(const ExperimentSpec& spec) {
    RunReport report;
    report.kind = RunReport::Kind::table1;
    for (int i = 1; i <= 10; ++i) {
        const double delta_t = static_cast<double>(i) / 10.0;
        const PararealConfig cfg =
            config_of(spec, spec.n_slices, delta_t, spec.n_slices * delta_t);
        std::vector<double> prices, times;
        bool row_ok = true;
        for (int rep = 0; rep < spec.repetitions; ++rep) {
            Timer timer;
            const AsyncResult res = async_solve(cfg, cfg.decomposition.n_slices);
            prices.push_back(res.result.price);
            times.push_back(timer.seconds());
            row_ok = row_ok && res.result.converged;
        }
        report.all_converged = report.all_converged && row_ok;
        const Table1Row row = price_row(spec, delta_t, mean(prices), mean(times));
        report.table1.push_back(row);
        print_table1_row("table1", row);
        if (!row_ok) std::printf("           row dT=%g NON-CONVERGED\n", delta_t);
    }
    return report;
}

RunReport run_table3(const ExperimentSpec& spec) {
    RunReport report;
    report.kind = RunReport::Kind::table3;
    for (int n_slices : {16, 32, 64}) {
        const PararealConfig cfg =
            config_of(spec, n_slices, spec.delta_t, n_slices * spec.delta_t);

        Table3Row row;
        row.n_slices = n_slices;
        bool row_ok = true;

        std::vector<double> sync_times;
        double sync_iters = 0.0;
        for (int rep = 0; rep < spec.repetitions; ++rep) {
            PararealConfig sync_cfg = cfg;
            sync_cfg.fine_workers = sync_pool_size(spec);
            Timer timer;
            const PararealResult res = parareal_solve(sync_cfg);
            sync_times.push_back(timer.seconds());
            sync_iters = res.iterations;  // deterministic, identical each rep
            row_ok = row_ok && res.converged;
        }
        row.sync_iter = sync_iters;
        row.sync_time_s = mean(sync_times);

        std::vector<double> mins, maxs, means, times;
        for (int rep = 0; rep < spec.repetitions; ++rep) {
            Timer timer;
            const AsyncResult res = async_solve(cfg, n_slices);
            times.push_back(timer.seconds());
            mins.push_back(static_cast<double>(res.stats.min_updates()));
            maxs.push_back(static_cast<double>(res.stats.max_updates()));
            means.push_back(res.stats.mean_updates());
            row_ok = row_ok && res.result.converged;
        }
        row.async_iter_min = mean(mins);
        row.async_iter_max = mean(maxs);
        row.async_iter_mean = mean(means);
        row.async_time_s = mean(times);

        report.all_converged = report.all_converged && row_ok;
        report.table3.push_back(row);
        std::printf(
            "table3 N=%-3d sync_iter=%-4g sync_time=%.3fs async_iter(min/max/mean)="
            "%.1f/%.1f/%.1f async_time=%.3fs%s\n",
            row.n_slices, row.sync_iter, row.sync_time_s, row.async_iter_min,
            row.async_iter_max, row.async_iter_mean, row.async_time_s,
            row_ok ? "" : " NON-CONVERGED");
    }
    return report;
}

int cli_main(int argc, const char* const* argv) {
    try {
        std::vector<std::string> args;
        for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
        const ExperimentSpec spec = parse_spec(args);

        RunReport report;
        if (spec.mode == "table1") {
            report = run_table1(spec);
        } else if (spec.mode == "table3") {
            report = run_table3(spec);
        } else {
            report = run_single(spec);
        }

        if (!spec.out_path.empty()) write_csv(report, spec.out_path);
        if (!report.all_converged) {
            std::fprintf(stderr, "error: at least one run did not converge\n");
            return 3;
        }
        return 0;
    } catch (const HelpRequested& help) {
        std::printf("%s", help.text.c_str());
        return 0;
    } catch (const UsageError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}

}  // namespace parareal::bench
