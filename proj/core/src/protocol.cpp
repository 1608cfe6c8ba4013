#include "plncsim/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace plncsim {

namespace {

ProtocolConfig derive_base(const SystemParams& params, double ratio_scale) {
    params.validate();
    if (params.access_prob <= 0.0) {
        throw std::invalid_argument("config derivation needs a positive access probability");
    }
    if (!(ratio_scale > 0.0)) throw std::invalid_argument("ratio_scale must be > 0");

    const double threshold = prob_any_active(params.users, params.access_prob) / params.users;
    const int substrings = static_cast<int>(std::floor(ratio_scale * params.num_blocks * threshold));
    if (substrings < 1) {
        throw DegenerateConfigError(
            "substrings per user would be " + std::to_string(substrings) +
            "; increase blocks or ratio_scale (threshold " + std::to_string(threshold) + ")");
    }

    ProtocolConfig config;
    config.params = params;
    config.substrings_per_user = std::min(substrings, params.num_blocks);
    config.realized_ratio =
        static_cast<double>(config.substrings_per_user) / params.num_blocks;
    return config;
}

} // namespace

ProtocolConfig derive_config(const SystemParams& params, double ratio_scale) {
    ProtocolConfig config = derive_base(params, ratio_scale);
    const double rate =
        computation_rate(params.users, params.power / params.access_prob);
    const int symbols =
        static_cast<int>(std::floor(params.block_len * rate / std::log2(params.field_size)));
    if (symbols < 1) {
        throw DegenerateConfigError("substring length would be " + std::to_string(symbols) +
                                    "; the computation rate is too low for this field and block "
                                    "length");
    }
    config.substring_len = symbols;
    return config;
}

ProtocolConfig derive_config(const SystemParams& params, double ratio_scale, int substring_len) {
    if (substring_len < 1) throw std::invalid_argument("substring length must be >= 1");
    ProtocolConfig config = derive_base(params, ratio_scale);
    config.substring_len = substring_len;
    return config;
}

double code_rate(const ProtocolConfig& config) {
    return config.substring_len * std::log2(config.params.field_size) / config.params.block_len;
}

bool sum_decodable(const ProtocolConfig& config) {
    const double rate =
        computation_rate(config.params.users, config.params.power / config.params.access_prob);
    return code_rate(config) <= rate;
}

double configured_throughput(const ProtocolConfig& config) {
    const SystemParams& p = config.params;
    return static_cast<double>(p.users) * config.substrings_per_user * config.substring_len *
           std::log2(p.field_size) / (static_cast<double>(p.num_blocks) * p.block_len);
}

ActivityTrace::ActivityTrace(int users, int blocks) : users_(users), blocks_(blocks) {
    if (users < 1 || blocks < 1) throw std::invalid_argument("trace dimensions must be >= 1");
    states_.assign(static_cast<std::size_t>(users) * blocks, 0);
}

ActivityTrace ActivityTrace::sample(const SystemParams& params, SplitMix64& rng) {
    ActivityTrace trace(params.users, params.num_blocks);
    for (int user = 0; user < params.users; ++user) {
        for (int block = 0; block < params.num_blocks; ++block) {
            trace.set(user, block, rng.bernoulli(params.access_prob));
        }
    }
    return trace;
}

std::vector<int> ActivityTrace::active_users(int block) const {
    std::vector<int> active;
    for (int user = 0; user < users_; ++user) {
        if (this->active(user, block)) active.push_back(user);
    }
    return active;
}

std::vector<FieldMatrix> build_generators(const ProtocolConfig& config, SplitMix64& rng) {
    const PrimeField field(config.params.field_size);
    std::vector<FieldMatrix> generators;
    generators.reserve(config.params.users);
    for (int user = 0; user < config.params.users; ++user) {
        generators.push_back(FieldMatrix::random(field, config.params.num_blocks,
                                                 config.substrings_per_user, rng));
    }
    return generators;
}

MessageSet random_messages(const ProtocolConfig& config, SplitMix64& rng) {
    const PrimeField field(config.params.field_size);
    MessageSet messages;
    messages.reserve(config.params.users);
    for (int user = 0; user < config.params.users; ++user) {
        messages.push_back(
            FieldMatrix::random(field, config.substrings_per_user, config.substring_len, rng));
    }
    return messages;
}

std::vector<std::uint32_t> mix_messages(const FieldMatrix& generator, const FieldMatrix& message,
                                        int block) {
    if (generator.cols() != message.rows()) {
        throw std::invalid_argument("generator/message shape mismatch");
    }
    const PrimeField& field = generator.field();
    const std::uint64_t q = field.modulus();
    std::vector<std::uint32_t> mixed(message.cols(), 0);
    for (int sub = 0; sub < generator.cols(); ++sub) {
        const std::uint64_t coeff = generator(block, sub);
        if (coeff == 0) continue;
        for (int c = 0; c < message.cols(); ++c) {
            mixed[c] = static_cast<std::uint32_t>((mixed[c] + coeff * message(sub, c)) % q);
        }
    }
    return mixed;
}

BlockDecodeResult channel_decode_block(const ProtocolConfig& config, const ActivityTrace& trace,
                                       const std::vector<FieldMatrix>& generators,
                                       const std::vector<FieldMatrix>& mixed, int block) {
    const std::vector<int> active = trace.active_users(block);
    if (active.empty()) return {BlockOutcome::idle, {}};
    if (!sum_decodable(config)) return {BlockOutcome::rate_exceeded, {}};

    const PrimeField field(config.params.field_size);
    const int per_user = config.substrings_per_user;
    BlockEquation eq;
    eq.coeffs.assign(static_cast<std::size_t>(config.params.users) * per_user, 0);
    eq.rhs.assign(config.substring_len, 0);
    for (int user : active) {
        for (int sub = 0; sub < per_user; ++sub) {
            eq.coeffs[static_cast<std::size_t>(user) * per_user + sub] = generators[user](block, sub);
        }
        for (int c = 0; c < config.substring_len; ++c) {
            eq.rhs[c] = field.add(eq.rhs[c], mixed[user](block, c));
        }
    }
    return {BlockOutcome::decoded, std::move(eq)};
}

EquationSystem assemble_system(const ProtocolConfig& config, const ActivityTrace& trace,
                               const std::vector<FieldMatrix>& generators,
                               const MessageSet& messages) {
    const PrimeField field(config.params.field_size);

    // Precompute every user's mixed substrings for all blocks at once.
    std::vector<FieldMatrix> mixed;
    mixed.reserve(config.params.users);
    for (int user = 0; user < config.params.users; ++user) {
        mixed.push_back(generators[user] * messages[user]);
    }

    std::vector<BlockEquation> equations;
    std::vector<int> block_index;
    for (int block = 0; block < config.params.num_blocks; ++block) {
        BlockDecodeResult result = channel_decode_block(config, trace, generators, mixed, block);
        if (result.outcome == BlockOutcome::decoded) {
            equations.push_back(std::move(result.equation));
            block_index.push_back(block);
        }
    }

    const int useful = static_cast<int>(equations.size());
    const int unknowns = config.params.users * config.substrings_per_user;
    EquationSystem system{FieldMatrix(field, useful, unknowns),
                          FieldMatrix(field, useful, config.substring_len),
                          std::move(block_index)};
    for (int u = 0; u < useful; ++u) {
        for (int c = 0; c < unknowns; ++c) system.coeffs(u, c) = equations[u].coeffs[c];
        for (int c = 0; c < config.substring_len; ++c) system.rhs(u, c) = equations[u].rhs[c];
    }
    return system;
}

DecodeResult attempt_decode_with_rank(const EquationSystem& system, const ProtocolConfig& config) {
    const SolveReport report = solve_with_rank(system.coeffs, system.rhs);
    DecodeResult result{report.rank, std::nullopt};
    if (!report.solution) return result;

    // Split the stacked solution back into per-user message matrices.
    const int per_user = config.substrings_per_user;
    MessageSet messages;
    messages.reserve(config.params.users);
    for (int user = 0; user < config.params.users; ++user) {
        FieldMatrix m(system.coeffs.field(), per_user, config.substring_len);
        for (int sub = 0; sub < per_user; ++sub) {
            for (int c = 0; c < config.substring_len; ++c) {
                m(sub, c) = (*report.solution)(user * per_user + sub, c);
            }
        }
        messages.push_back(std::move(m));
    }
    result.messages = std::move(messages);
    return result;
}

std::optional<MessageSet> attempt_decode(const EquationSystem& system,
                                         const ProtocolConfig& config) {
    return attempt_decode_with_rank(system, config).messages;
}

} // namespace plncsim
