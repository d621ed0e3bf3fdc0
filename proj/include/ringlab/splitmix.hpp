#pragma once

#include <cstdint>

namespace ringlab {

/**
 * SplitMix64 (Steele, Lea, Flood 2014), the seeding generator of the xoshiro
 * family. 64 bits of state; every output is a bijective mix of the state after
 * adding the golden-ratio increment 0x9E3779B97F4A7C15.
 *
 * Reports that involve randomness are pinned to this exact algorithm:
 *   - next():       state += 0x9E3779B97F4A7C15; z = state;
 *                   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
 *                   z = (z ^ (z >> 27)) * 0x94D049BB133111EB;
 *                   return z ^ (z >> 31);
 *   - below(b):     rejection sampling; draw r = next() until
 *                   r >= (2^64 - b) mod b, return r mod b.
 *   - split():      a new generator seeded with next().
 */
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [0, bound); bound must be positive.
    constexpr std::uint64_t below(std::uint64_t bound) noexcept {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    constexpr SplitMix64 split() noexcept { return SplitMix64(next()); }

    constexpr std::uint64_t state() const noexcept { return state_; }

private:
    std::uint64_t state_;
};

}  // namespace ringlab
