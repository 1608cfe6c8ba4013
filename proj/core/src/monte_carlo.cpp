#include "plncsim/monte_carlo.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <thread>

namespace plncsim {

TrialOutcome run_trial(const ProtocolConfig& config, SplitMix64& rng) {
    const ActivityTrace trace = ActivityTrace::sample(config.params, rng);
    const std::vector<FieldMatrix> generators = build_generators(config, rng);
    const MessageSet messages = random_messages(config, rng);

    const EquationSystem system = assemble_system(config, trace, generators, messages);
    const DecodeResult decoded = attempt_decode_with_rank(system, config);

    TrialOutcome outcome;
    outcome.useful_blocks = system.coeffs.rows();
    outcome.rank_achieved = decoded.rank;
    outcome.realized_ratio = config.realized_ratio;
    outcome.success = decoded.messages.has_value();
    if (outcome.success && *decoded.messages != messages) {
        throw std::logic_error("full-rank solve did not reproduce the transmitted messages");
    }
    return outcome;
}

SuccessEstimate estimate_success(const ProtocolConfig& config, int trials,
                                 std::uint64_t master_seed, int workers) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");
    workers = std::min(workers, trials);

    std::vector<int> success_count(workers, 0);
    std::vector<std::exception_ptr> failures(workers);
    auto work = [&](int worker) {
        try {
            for (int t = worker; t < trials; t += workers) {
                SplitMix64 rng = derive_trial_rng(master_seed, static_cast<std::uint64_t>(t));
                if (run_trial(config, rng).success) ++success_count[worker];
            }
        } catch (...) {
            failures[worker] = std::current_exception();
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    for (const auto& failure : failures) {
        if (failure) std::rethrow_exception(failure);
    }

    SuccessEstimate estimate;
    estimate.trials = trials;
    for (int count : success_count) estimate.successes += count;
    estimate.success_rate = static_cast<double>(estimate.successes) / trials;
    estimate.empirical_throughput = estimate.success_rate * configured_throughput(config);
    return estimate;
}

SweepResult threshold_sweep(const SystemParams& params, std::span<const double> ratio_scales,
                            int trials, std::uint64_t master_seed, int workers,
                            int substring_len) {
    if (ratio_scales.empty()) throw std::invalid_argument("ratio_scales must be nonempty");
    SweepResult rows;
    rows.reserve(ratio_scales.size());
    for (std::size_t r = 0; r < ratio_scales.size(); ++r) {
        SweepRow row;
        row.ratio_scale = ratio_scales[r];
        row.num_blocks = params.num_blocks;
        try {
            const ProtocolConfig config = derive_config(params, ratio_scales[r], substring_len);
            row.substrings_per_user = config.substrings_per_user;
            const SuccessEstimate estimate =
                estimate_success(config, trials, derive_stream_seed(master_seed, r), workers);
            row.trials = estimate.trials;
            row.successes = estimate.successes;
            row.success_rate = estimate.success_rate;
            row.empirical_throughput = estimate.empirical_throughput;
        } catch (const DegenerateConfigError&) {
            row.skipped = true;
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace plncsim
