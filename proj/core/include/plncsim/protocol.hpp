#pragma once

// The random-access network-coding strategy at the equation level. The
// computation code is modeled as an ideal rate-thresholded black box:
// the per-block sum of the active users' mixed substrings is recovered
// iff the code rate is at most the computation rate. What remains is
// exact finite-field bookkeeping: generator matrices, per-block message
// mixing, assembly of the receiver's linear system, and decoding.

#include <cstdint>
#include <optional>
#include <vector>

#include "plncsim/field.hpp"
#include "plncsim/rng.hpp"
#include "plncsim/throughput.hpp"

namespace plncsim {

/// Derived per-run configuration. `substrings_per_user` is the number of
/// unknown substrings each user spreads over the blocks;
/// `substring_len` is the field symbols per substring.
struct ProtocolConfig {
    SystemParams params;
    int substrings_per_user = 1;
    int substring_len = 1;
    double realized_ratio = 0.0; // substrings_per_user / num_blocks actually used
};

/// Parameter recipe: substrings_per_user = floor(ratio_scale * N *
/// (1-(1-a)^K)/K) capped at N, substring_len = floor(B * rate / log2 q)
/// with rate the computation rate at power a^{-1}P. Throws
/// DegenerateConfigError when either floor lands below 1, and
/// std::invalid_argument for a = 0 or ratio_scale <= 0.
ProtocolConfig derive_config(const SystemParams& params, double ratio_scale);

/// Same recipe with a caller-chosen substring length (rank experiments
/// use width 1; decoding success depends only on the system matrix).
ProtocolConfig derive_config(const SystemParams& params, double ratio_scale, int substring_len);

/// Code rate of one block in bits per channel use: substring_len * log2(q) / B.
double code_rate(const ProtocolConfig& config);

/// Whether the per-block sum decode succeeds under the ideal
/// computation-code model.
bool sum_decodable(const ProtocolConfig& config);

/// Throughput delivered by a successful run: K*Lb*Lc*log2(q)/(N*B).
double configured_throughput(const ProtocolConfig& config);

/// Per-block activity states of all users, S_i(n) in {0,1}.
class ActivityTrace {
public:
    ActivityTrace(int users, int blocks);

    /// Each state i.i.d. Bernoulli(a), drawn user-major block-minor.
    static ActivityTrace sample(const SystemParams& params, SplitMix64& rng);

    int users() const { return users_; }
    int blocks() const { return blocks_; }
    bool active(int user, int block) const {
        return states_[static_cast<std::size_t>(user) * blocks_ + block] != 0;
    }
    void set(int user, int block, bool active) {
        states_[static_cast<std::size_t>(user) * blocks_ + block] = active ? 1 : 0;
    }
    std::vector<int> active_users(int block) const;

private:
    int users_;
    int blocks_;
    std::vector<std::uint8_t> states_;
};

/// One message matrix per user, each substrings_per_user x substring_len.
using MessageSet = std::vector<FieldMatrix>;

/// Generator matrices G_i (num_blocks x substrings_per_user), users in
/// index order, entries uniform over the field.
std::vector<FieldMatrix> build_generators(const ProtocolConfig& config, SplitMix64& rng);

MessageSet random_messages(const ProtocolConfig& config, SplitMix64& rng);

/// Mixed substring for one block: row `block` of generator * message.
std::vector<std::uint32_t> mix_messages(const FieldMatrix& generator, const FieldMatrix& message,
                                        int block);

enum class BlockOutcome {
    idle,          // no active user; the receiver learns nothing and knows it
    decoded,       // sum recovered, one equation gained
    rate_exceeded, // code rate above the computation rate; modeled decode failure
};

struct BlockEquation {
    std::vector<std::uint32_t> coeffs; // K*Lb wide, zero outside active users' column groups
    std::vector<std::uint32_t> rhs;    // substring_len wide
};

struct BlockDecodeResult {
    BlockOutcome outcome = BlockOutcome::idle;
    BlockEquation equation; // meaningful iff outcome == decoded
};

/// Ideal computation-code channel for one block: the sum of the active
/// users' mixed substrings together with the matching coefficient row.
/// `mixed` holds each user's full mixed matrix (num_blocks x substring_len).
BlockDecodeResult channel_decode_block(const ProtocolConfig& config, const ActivityTrace& trace,
                                       const std::vector<FieldMatrix>& generators,
                                       const std::vector<FieldMatrix>& mixed, int block);

/// The receiver's assembled system A*M = b. Row u came from block
/// block_index[u]; rows exist only for decoded blocks.
struct EquationSystem {
    FieldMatrix coeffs; // U x (K*Lb)
    FieldMatrix rhs;    // U x substring_len
    std::vector<int> block_index;
};

EquationSystem assemble_system(const ProtocolConfig& config, const ActivityTrace& trace,
                               const std::vector<FieldMatrix>& generators,
                               const MessageSet& messages);

struct DecodeResult {
    int rank = 0;
    std::optional<MessageSet> messages; // present iff rank == K*Lb
};

/// Solves the system when it has full column rank; rank deficiency is a
/// modeled outcome, not an error.
std::optional<MessageSet> attempt_decode(const EquationSystem& system,
                                         const ProtocolConfig& config);
DecodeResult attempt_decode_with_rank(const EquationSystem& system, const ProtocolConfig& config);

} // namespace plncsim
