#pragma once

#include <cstdint>

namespace kpath {

// Deterministic random stream (splitmix64). Streams are identified by the
// seed they were constructed from; derive() produces an independent stream
// from (seed, purpose, index) without consuming any state, so results are
// reproducible regardless of evaluation order or parallel schedule.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), state_(mix(seed ^ 0x9E3779B97F4A7C15ull)) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix(state_);
    }

    // Uniform over [0, 2^nbits), nbits <= 63.
    std::uint64_t next_bits(unsigned nbits) {
        return next_u64() & ((std::uint64_t(1) << nbits) - 1);
    }

    // Uniform over [0, bound), bound >= 1. Rejection from the smallest
    // covering power of two keeps the draw order platform-independent.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        unsigned bits = 64 - static_cast<unsigned>(__builtin_clzll(bound - 1));
        for (;;) {
            std::uint64_t v = (bits >= 64) ? next_u64() : next_bits(bits);
            if (v < bound) return v;
        }
    }

    // True with probability p (p <= 0 never, p >= 1 always).
    bool next_bernoulli(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return next_u64() < static_cast<std::uint64_t>(p * 18446744073709551616.0);
    }

    // Independent child stream labeled by (purpose, index).
    RngStream derive(std::uint64_t purpose, std::uint64_t index = 0) const {
        return RngStream(derive_seed(purpose, index));
    }

    std::uint64_t derive_seed(std::uint64_t purpose, std::uint64_t index = 0) const {
        return mix(seed_ + mix(purpose + mix(index)));
    }

    std::uint64_t seed() const { return seed_; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t state_;
};

// Purpose tags for derived streams.
namespace rng_purpose {
inline constexpr std::uint64_t kpath_trial = 1;
inline constexpr std::uint64_t circuit_vectors = 2;
inline constexpr std::uint64_t circuit_weights = 3;
inline constexpr std::uint64_t circuit_trial = 4;
inline constexpr std::uint64_t find_detect = 5;
inline constexpr std::uint64_t find_restart = 6;
inline constexpr std::uint64_t generator = 7;
}  // namespace rng_purpose

}  // namespace kpath
