#ifndef ACS_RNG_HPP
#define ACS_RNG_HPP

#include <cstdint>

namespace acs {

/**
 * Reproducible pseudo-random stream based on the xoshiro256** generator
 * (Blackman & Vigna, public domain) seeded through splitmix64.
 *
 * Streams are derived from a (seed, iteration, ant) triple so that every
 * ant consumes its own sequence regardless of how work is scheduled.
 * The output is identical across platforms for a given derivation path.
 */
class RngStream {
public:
    RngStream() : RngStream(0) {}

    explicit RngStream(uint64_t seed) {
        uint64_t z = seed;
        for (auto &w : state_) {
            w = splitmix64(z);
        }
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) {
            state_[0] = 0x9e3779b97f4a7c15ull;  // xoshiro state must be nonzero
        }
    }

    static RngStream derive(uint64_t seed, uint64_t iteration, uint64_t ant) {
        uint64_t h = seed;
        h = splitmix64(h ^= iteration * 0xbf58476d1ce4e5b9ull);
        h = splitmix64(h ^= ant * 0x94d049bb133111ebull);
        return RngStream(h);
    }

    uint64_t next_u64() {
        const uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1); uses the top 53 bits, never returns 1.0.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Unbiased uniform integer in [0, bound); bound >= 1 (Lemire's method).
    uint64_t uniform_int(uint64_t bound) {
        uint64_t x = next_u64();
        __uint128_t m = static_cast<__uint128_t>(x) * bound;
        auto lo = static_cast<uint64_t>(m);
        if (lo < bound) {
            const uint64_t threshold = -bound % bound;
            while (lo < threshold) {
                x = next_u64();
                m = static_cast<__uint128_t>(x) * bound;
                lo = static_cast<uint64_t>(m);
            }
        }
        return static_cast<uint64_t>(m >> 64);
    }

private:
    static uint64_t splitmix64(uint64_t &z) {
        z += 0x9e3779b97f4a7c15ull;
        uint64_t x = z;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    static uint64_t rotl(uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    uint64_t state_[4];
};

}  // namespace acs

#endif  // ACS_RNG_HPP
