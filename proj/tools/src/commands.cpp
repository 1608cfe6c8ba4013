#include "plncsim/cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "plncsim/cli/csv.hpp"
#include "plncsim/errors.hpp"
#include "plncsim/field.hpp"
#include "plncsim/monte_carlo.hpp"
#include "plncsim/protocol.hpp"
#include "plncsim/throughput.hpp"

namespace plncsim::cli {

namespace {

constexpr const char* kUsage =
    "usage: plncsim <command> [options]\n"
    "\n"
    "commands:\n"
    "  eval       throughput of every strategy at one (K, a, P) point\n"
    "  sweep-a    strategy throughput over a grid of access probabilities\n"
    "  sweep-k    strategy throughput for K = 1..max at fixed (a, P)\n"
    "  rank-prob  Monte-Carlo decoding-success rate per ratio scale\n"
    "  simulate   one protocol configuration, empirical vs analytic throughput\n"
    "\n"
    "Run 'plncsim <command> --help' for the command's options. Options may\n"
    "also come from a key=value file via --config; command-line flags win.\n";

struct CommonFlags {
    std::string output; // empty = stdout
};

void add_output_flags(CLI::App& app, CommonFlags& flags) {
    app.add_option("--output", flags.output, "Write the CSV to this path instead of stdout");
    app.set_config("--config", "", "Read option defaults from a key=value file");
    app.allow_config_extras(false); // unknown config keys are errors
}

int parse_or_exit(CLI::App& app, const std::string& name, int argc, const char* const* argv,
                  std::ostream& out, std::ostream& err) {
    std::vector<const char*> args;
    args.reserve(static_cast<std::size_t>(argc));
    const std::string program = "plncsim " + name;
    args.push_back(program.c_str());
    for (int i = 2; i < argc; ++i) args.push_back(argv[i]);
    try {
        app.parse(static_cast<int>(args.size()), args.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }
    return -1; // parsed, keep going
}

int emit_table(const CsvTable& table, const CommonFlags& flags, std::ostream& out,
               std::ostream& err) {
    if (flags.output.empty()) {
        table.write(out);
        return 0;
    }
    std::ofstream file(flags.output, std::ios::binary);
    if (!file) {
        err << "error: cannot open output file '" << flags.output << "'\n";
        return 1;
    }
    table.write(file);
    if (!file.good()) {
        err << "error: failed writing '" << flags.output << "'\n";
        return 1;
    }
    return 0;
}

int check_field_size(std::uint64_t q, std::ostream& err) {
    try {
        PrimeField probe(q);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return -1;
}

std::vector<std::string> report_row(const ThroughputReport& r) {
    return {format_real(r.access_prob), format_int(r.users),      format_real(r.power),
            format_real(r.aloha),       format_real(r.mpr),       format_int(r.mpr_kstar),
            format_real(r.ignore_csi),  format_real(r.plnc),      format_real(r.upper)};
}

const std::vector<std::string> kReportHeader = {"a",          "K",    "P",
                                                "aloha",      "mpr",  "mpr_kstar",
                                                "ignore_csi", "plnc", "upper"};

int run_eval(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    SystemParams params;
    CommonFlags flags;
    CLI::App app{"Throughput of every strategy at one parameter point"};
    app.add_option("--users", params.users, "Number of users K")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--access-prob", params.access_prob, "Access probability a")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 1.0));
    app.add_option("--power", params.power, "Average transmit power P")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    add_output_flags(app, flags);
    if (int code = parse_or_exit(app, "eval", argc, argv, out, err); code >= 0) return code;

    CsvTable table(kReportHeader);
    table.add_row(report_row(evaluate_all(params)));
    return emit_table(table, flags, out, err);
}

int run_sweep_a(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    SystemParams params;
    CommonFlags flags;
    double start = 0.01, stop = 1.0, step = 0.01;
    CLI::App app{"Strategy throughput over a grid of access probabilities"};
    app.add_option("--users", params.users, "Number of users K")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--power", params.power, "Average transmit power P")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--a-start", start, "First access probability")->capture_default_str();
    app.add_option("--a-stop", stop, "Last access probability")->capture_default_str();
    app.add_option("--a-step", step, "Grid step")->capture_default_str();
    add_output_flags(app, flags);
    if (int code = parse_or_exit(app, "sweep-a", argc, argv, out, err); code >= 0) return code;

    if (!(start >= 0.0 && start <= stop && stop <= 1.0 && step > 0.0)) {
        err << "error: grid must satisfy 0 <= a-start <= a-stop <= 1 with a-step > 0\n";
        return 2;
    }

    CsvTable table(kReportHeader);
    const int points = static_cast<int>(std::floor((stop - start) / step + 1e-9)) + 1;
    for (int j = 0; j < points; ++j) {
        params.access_prob = start + j * step;
        table.add_row(report_row(evaluate_all(params)));
    }
    return emit_table(table, flags, out, err);
}

int run_sweep_k(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    SystemParams params;
    params.access_prob = 0.2;
    CommonFlags flags;
    int max_users = 30;
    CLI::App app{"Strategy throughput for K = 1..max at fixed (a, P)"};
    app.add_option("--access-prob", params.access_prob, "Access probability a")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 1.0));
    app.add_option("--power", params.power, "Average transmit power P")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--max-users", max_users, "Largest user count")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    add_output_flags(app, flags);
    if (int code = parse_or_exit(app, "sweep-k", argc, argv, out, err); code >= 0) return code;

    CsvTable table(kReportHeader);
    for (int users = 1; users <= max_users; ++users) {
        params.users = users;
        table.add_row(report_row(evaluate_all(params)));
    }
    return emit_table(table, flags, out, err);
}

void add_protocol_flags(CLI::App& app, SystemParams& params, int& trials, std::uint64_t& seed,
                        int& workers) {
    app.add_option("--users", params.users, "Number of users K")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--access-prob", params.access_prob, "Access probability a")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 1.0));
    app.add_option("--power", params.power, "Average transmit power P")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--field", params.field_size, "Prime field size q")->capture_default_str();
    app.add_option("--block-len", params.block_len, "Channel uses per block B")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--blocks", params.num_blocks, "Blocks per transmission N")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--trials", trials, "Monte-Carlo trials per configuration")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "Master seed for the trial streams")->capture_default_str();
    app.add_option("--workers", workers, "Worker threads (result is identical for any count)")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
}

int run_rank_prob(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    SystemParams params;
    CommonFlags flags;
    int trials = 200;
    std::uint64_t seed = 1;
    int workers = 1;
    std::vector<double> scales = {0.5, 0.9, 1.1, 1.5};
    CLI::App app{"Monte-Carlo decoding-success rate per ratio scale"};
    add_protocol_flags(app, params, trials, seed, workers);
    app.add_option("--ratio-scale", scales,
                   "Ratio scales to test (repeatable or comma separated)")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    add_output_flags(app, flags);
    if (int code = parse_or_exit(app, "rank-prob", argc, argv, out, err); code >= 0) return code;
    if (int code = check_field_size(params.field_size, err); code >= 0) return code;

    const SweepResult rows = threshold_sweep(params, scales, trials, seed, workers);

    CsvTable table({"ratio_scale", "Lb", "N", "trials", "successes", "success_rate",
                    "empirical_throughput"});
    for (const SweepRow& row : rows) {
        if (row.skipped) {
            // Marked by Lb=0/trials=0; a real run always has Lb >= 1.
            err << "note: ratio scale " << format_real(row.ratio_scale)
                << " skipped (degenerate configuration)\n";
        }
        table.add_row({format_real(row.ratio_scale), format_int(row.substrings_per_user),
                       format_int(row.num_blocks), format_int(row.trials),
                       format_int(row.successes), format_real(row.success_rate),
                       format_real(row.empirical_throughput)});
    }
    return emit_table(table, flags, out, err);
}

int run_simulate(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    SystemParams params;
    CommonFlags flags;
    int trials = 200;
    std::uint64_t seed = 1;
    int workers = 1;
    double ratio_scale = 0.9;
    CLI::App app{"Run one protocol configuration end to end"};
    add_protocol_flags(app, params, trials, seed, workers);
    app.add_option("--ratio-scale", ratio_scale, "Scale on the threshold substrings-per-block ratio")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    add_output_flags(app, flags);
    if (int code = parse_or_exit(app, "simulate", argc, argv, out, err); code >= 0) return code;
    if (int code = check_field_size(params.field_size, err); code >= 0) return code;

    ProtocolConfig config;
    try {
        config = derive_config(params, ratio_scale);
    } catch (const DegenerateConfigError& e) {
        err << "error: degenerate configuration: " << e.what() << '\n';
        return 1;
    }

    const SuccessEstimate estimate = estimate_success(config, trials, seed, workers);
    const double analytic = plnc_throughput(params);

    err << "simulate: K=" << params.users << " a=" << format_real(params.access_prob)
        << " P=" << format_real(params.power) << " q=" << params.field_size
        << " B=" << params.block_len << " N=" << params.num_blocks << " seed=" << seed << '\n';
    err << "derived: Lb=" << config.substrings_per_user << " Lc=" << config.substring_len
        << " realized-ratio=" << format_real(config.realized_ratio)
        << " code-rate=" << format_real(code_rate(config)) << " bits/channel use\n";
    err << "result: successes=" << estimate.successes << "/" << estimate.trials
        << " success-rate=" << format_real(estimate.success_rate)
        << " empirical-throughput=" << format_real(estimate.empirical_throughput)
        << " analytic-throughput=" << format_real(analytic) << '\n';

    CsvTable table({"a", "K", "P", "q", "B", "N", "ratio_scale", "Lb", "Lc", "trials",
                    "successes", "success_rate", "empirical_throughput",
                    "analytic_throughput"});
    table.add_row({format_real(params.access_prob), format_int(params.users),
                   format_real(params.power), format_int(params.field_size),
                   format_int(params.block_len), format_int(params.num_blocks),
                   format_real(ratio_scale), format_int(config.substrings_per_user),
                   format_int(config.substring_len), format_int(estimate.trials),
                   format_int(estimate.successes), format_real(estimate.success_rate),
                   format_real(estimate.empirical_throughput), format_real(analytic)});
    return emit_table(table, flags, out, err);
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    if (argc < 2) {
        err << kUsage;
        return 2;
    }
    const std::string command = argv[1];
    if (command == "--help" || command == "-h" || command == "help") {
        out << kUsage;
        return 0;
    }
    try {
        if (command == "eval") return run_eval(argc, argv, out, err);
        if (command == "sweep-a") return run_sweep_a(argc, argv, out, err);
        if (command == "sweep-k") return run_sweep_k(argc, argv, out, err);
        if (command == "rank-prob") return run_rank_prob(argc, argv, out, err);
        if (command == "simulate") return run_simulate(argc, argv, out, err);
    } catch (const std::exception& e) {
        // Parameter combinations the flag ranges cannot express, e.g. a
        // protocol command with access probability 0.
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "error: unknown command '" << command << "'\n\n" << kUsage;
    return 2;
}

} // namespace plncsim::cli
