#pragma once

#include <cstdint>

namespace sslab {

// SplitMix64. Fully specified arithmetic, so streams are identical across
// platforms and standard libraries.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, bound) by rejection. bound >= 1.
    uint64_t below(uint64_t bound) {
        const uint64_t threshold = -bound % bound;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    uint64_t state_;
};

inline uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Per-trial seed as a pure function of (run seed, stream, index), so trials
// can run in any order or in parallel without changing their inputs.
inline uint64_t derive_seed(uint64_t run_seed, uint64_t stream, uint64_t index) {
    uint64_t z = mix64(run_seed + 0x9e3779b97f4a7c15ull * (stream + 1));
    return mix64(z + 0x9e3779b97f4a7c15ull * (index + 1));
}

}  // namespace sslab
