#pragma once

#include <cstdint>

namespace rmcap {

// SplitMix64 avalanche finalizer.
constexpr uint64_t mix64(uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
}

// SplitMix64 stream: state advances by the golden-ratio increment, outputs
// pass through mix64.
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix64(state_);
    }

    // Unbiased draw in [0, bound), bound >= 1, by rejection.
    uint64_t next_below(uint64_t bound) {
        const uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
        for (;;) {
            const uint64_t x = next();
            if (x >= threshold) return x % bound;
        }
    }

  private:
    uint64_t state_;
};

// Substream for one trial: the trial index is folded into the seed through
// the avalanche, so any partitioning of the trial space draws identical
// per-trial randomness.
inline SplitMix64 substream(uint64_t seed, uint64_t trial_index) {
    return SplitMix64(mix64(seed + 0x9E3779B97F4A7C15ull * (trial_index + 1)));
}

}  // namespace rmcap
