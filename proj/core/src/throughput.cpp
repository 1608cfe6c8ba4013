#include "plncsim/throughput.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace plncsim {

void SystemParams::validate() const {
    if (users < 1) throw std::invalid_argument("users must be >= 1");
    if (!(access_prob >= 0.0 && access_prob <= 1.0)) {
        throw std::invalid_argument("access probability must be in [0, 1]");
    }
    if (!(power > 0.0)) throw std::invalid_argument("power must be > 0");
    if (block_len < 1) throw std::invalid_argument("block length must be >= 1");
    if (num_blocks < 1) throw std::invalid_argument("number of blocks must be >= 1");
}

namespace {

// Largest n for which every C(n,k) fits in uint64 (C(67,33) ~ 1.43e19).
constexpr int kExactBinomialLimit = 66;

std::uint64_t binom_coeff(int n, int k) {
    // Pascal's triangle row n; exact for n <= kExactBinomialLimit.
    std::vector<std::uint64_t> row(static_cast<std::size_t>(n) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j >= 1; --j) row[j] += row[j - 1];
    }
    return row[k];
}

} // namespace

double binom_pmf(int n, int k, double p) {
    if (k < 0 || k > n) {
        throw std::domain_error("binomial pmf index out of range: k=" + std::to_string(k) +
                                " n=" + std::to_string(n));
    }
    double coeff;
    if (n <= kExactBinomialLimit) {
        coeff = static_cast<double>(binom_coeff(n, k));
    } else {
        coeff = std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
    }
    return coeff * std::pow(p, k) * std::pow(1.0 - p, n - k);
}

double computation_rate(int users, double effective_power) {
    return 0.5 * std::log2(1.0 / users + effective_power);
}

double prob_any_active(int users, double access_prob) {
    if (users == 1) return access_prob;
    return 1.0 - std::pow(1.0 - access_prob, users);
}

double aloha_throughput(const SystemParams& p) {
    if (p.access_prob == 0.0) return 0.0;
    const double inv_power = p.power / p.access_prob;
    const double single = p.users * p.access_prob * std::pow(1.0 - p.access_prob, p.users - 1);
    return single * (0.5 * std::log2(1.0 + inv_power));
}

MprPoint mpr_throughput(const SystemParams& p) {
    if (p.access_prob == 0.0) return {0.0, 1};
    const double inv_power = p.power / p.access_prob;
    MprPoint best{-1.0, 1};
    for (int group = 1; group <= p.users; ++group) {
        const double log_term = std::log2(1.0 + group * inv_power);
        double sum = 0.0;
        for (int active = 1; active <= group; ++active) {
            sum += binom_pmf(p.users, active, p.access_prob) *
                   (active / (2.0 * group) * log_term);
        }
        if (sum > best.value) best = {sum, group};
    }
    return best;
}

double ignore_csi_throughput(const SystemParams& p) {
    double sum = 0.0;
    for (int active = 1; active <= p.users; ++active) {
        sum += binom_pmf(p.users, active, p.access_prob) *
               (0.5 * std::log2(1.0 + active * p.power));
    }
    return sum;
}

double plnc_throughput(const SystemParams& p) {
    if (p.access_prob == 0.0) return 0.0;
    const double inv_power = p.power / p.access_prob;
    return prob_any_active(p.users, p.access_prob) *
           (0.5 * std::log2(1.0 / p.users + inv_power));
}

double upper_bound(const SystemParams& p) {
    if (p.access_prob == 0.0) return 0.0;
    const double inv_power = p.power / p.access_prob;
    double sum = 0.0;
    for (int active = 1; active <= p.users; ++active) {
        sum += binom_pmf(p.users, active, p.access_prob) *
               (0.5 * std::log2(1.0 + active * inv_power));
    }
    return sum;
}

ThroughputReport evaluate_all(const SystemParams& p) {
    p.validate();
    const MprPoint mpr = mpr_throughput(p);
    return ThroughputReport{
        .access_prob = p.access_prob,
        .users = p.users,
        .power = p.power,
        .aloha = aloha_throughput(p),
        .mpr = mpr.value,
        .mpr_kstar = mpr.kstar,
        .ignore_csi = ignore_csi_throughput(p),
        .plnc = plnc_throughput(p),
        .upper = upper_bound(p),
    };
}

} // namespace plncsim
