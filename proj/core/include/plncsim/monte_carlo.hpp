#pragma once

// Deterministic Monte-Carlo runner for decoding-success probability and
// empirical throughput. Every trial draws from its own stream derived
// from (master_seed, trial_index), so results are a pure function of the
// inputs and bit-identical for any worker count.

#include <cstdint>
#include <span>
#include <vector>

#include "plncsim/protocol.hpp"
#include "plncsim/rng.hpp"

namespace plncsim {

/// Independent generator for one trial.
inline SplitMix64 derive_trial_rng(std::uint64_t master_seed, std::uint64_t trial_index) {
    return SplitMix64(derive_stream_seed(master_seed, trial_index));
}

struct TrialOutcome {
    bool success = false;
    int useful_blocks = 0;  // blocks that contributed an equation
    int rank_achieved = 0;
    double realized_ratio = 0.0;
};

/// One end-to-end run: sample states, generators and messages (in that
/// order from `rng`), assemble the system, decode. Success means full
/// rank and exact message recovery; a full-rank solve that fails to
/// reproduce the messages would be an implementation bug and throws.
TrialOutcome run_trial(const ProtocolConfig& config, SplitMix64& rng);

struct SuccessEstimate {
    int trials = 0;
    int successes = 0;
    double success_rate = 0.0;
    double empirical_throughput = 0.0; // success_rate * configured_throughput
};

/// Mean success over independently seeded trials. `workers` threads pick
/// up trials round-robin; aggregation is over integers, so the result
/// does not depend on the worker count.
SuccessEstimate estimate_success(const ProtocolConfig& config, int trials,
                                 std::uint64_t master_seed, int workers = 1);

struct SweepRow {
    double ratio_scale = 0.0;
    bool skipped = false; // config derivation was degenerate at this scale
    int substrings_per_user = 0;
    int num_blocks = 0;
    int trials = 0;
    int successes = 0;
    double success_rate = 0.0;
    double empirical_throughput = 0.0;
};

using SweepResult = std::vector<SweepRow>;

/// One estimate per ratio scale, validating the full-rank threshold
/// empirically. Substring length is fixed at `substring_len` (default 1:
/// success depends only on the system matrix). Row r draws from the
/// seed stream derive_stream_seed(master_seed, r), keeping rows
/// independent and the sweep reproducible.
SweepResult threshold_sweep(const SystemParams& params, std::span<const double> ratio_scales,
                            int trials, std::uint64_t master_seed, int workers = 1,
                            int substring_len = 1);

} // namespace plncsim
