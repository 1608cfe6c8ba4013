#pragma once

// Closed-form throughput of every strategy on the random-access Gaussian
// multiple-access channel, as pure functions of (K, a, P). All logs are
// base 2; results are bits per channel use. The a = 0 limit is defined
// as throughput 0 for every strategy so sweep grids are total.

#include <cstdint>

#include "plncsim/errors.hpp"

namespace plncsim {

/// Scenario under study. The analytic formulas use only (users,
/// access_prob, power); field_size, block_len and num_blocks matter at
/// the protocol level.
struct SystemParams {
    int users = 2;              // K
    double access_prob = 0.5;   // per-block activity probability a
    double power = 100.0;       // average transmit power P
    std::uint32_t field_size = 257;
    int block_len = 100;        // channel uses per block B
    int num_blocks = 400;       // blocks per transmission N

    /// Throws std::invalid_argument on out-of-range values.
    void validate() const;
};

/// Binomial pmf C(n,k) p^k (1-p)^(n-k). Exact integer coefficients are
/// used for n <= 66 (they fit in 64 bits); larger n falls back to
/// lgamma. Throws std::domain_error when k is outside [0, n].
double binom_pmf(int n, int k, double p);

/// Achievable rate for decoding the sum of `users` simultaneous
/// codewords: (1/2) log2(1/users + effective_power). Negative when the
/// power is very small; returned as-is, callers clamp.
double computation_rate(int users, double effective_power);

/// Probability that at least one of `users` independent Bernoulli(a)
/// states is active. Returns a itself for a single user so the K = 1
/// formulas collapse exactly in floating point.
double prob_any_active(int users, double access_prob);

double aloha_throughput(const SystemParams& p);

struct MprPoint {
    double value = 0.0;
    int kstar = 1; // smallest maximizing decodable group size
};

/// Multipacket reception with rate adaptation, optimized over the
/// decodable group size. Ties break toward the smallest group.
MprPoint mpr_throughput(const SystemParams& p);

/// Ergodic rate when transmitters ignore their own state and code across
/// blocks at average power P (not a^{-1} P).
double ignore_csi_throughput(const SystemParams& p);

/// Physical-layer network coding strategy.
double plnc_throughput(const SystemParams& p);

/// Full-CSI upper bound on any strategy's throughput.
double upper_bound(const SystemParams& p);

/// Per-strategy throughput at one parameter point.
struct ThroughputReport {
    double access_prob = 0.0;
    int users = 0;
    double power = 0.0;
    double aloha = 0.0;
    double mpr = 0.0;
    int mpr_kstar = 1;
    double ignore_csi = 0.0;
    double plnc = 0.0;
    double upper = 0.0;
};

ThroughputReport evaluate_all(const SystemParams& p);

} // namespace plncsim
