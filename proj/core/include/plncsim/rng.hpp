#pragma once

#include <cstdint>

namespace plncsim {

/// splitmix64 generator (Steele/Lea/Flood; Vigna's fixed-increment
/// variant). Small state, passes BigCrush, and cheap to fork: every
/// Monte-Carlo trial owns its own instance seeded through
/// derive_stream_seed, so draws never depend on scheduling.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Unbiased draw from {0, ..., bound-1} by rejection.
    std::uint64_t uniform_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound; // 2^64 mod bound
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    /// Uniform double in [0,1) with 53 random mantissa bits.
    double uniform_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform_unit() < p; }

private:
    std::uint64_t state_;
};

namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}
} // namespace detail

/// Stateless seed derivation for stream `stream_index` of a master seed:
/// two finalizer rounds over (seed + (index+1)*golden), re-injecting the
/// master seed between rounds. A pure function of its inputs, so the
/// resulting streams are reproducible for any worker count or execution
/// order.
inline std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::uint64_t stream_index) {
    std::uint64_t z = detail::mix64(master_seed + (stream_index + 1) * 0x9e3779b97f4a7c15ull);
    return detail::mix64(z ^ master_seed);
}

} // namespace plncsim
