#pragma once

#include <cstdint>

#include "salmon/rational.hpp"

namespace salmon {

// Deterministic splitmix64 stream. Used instead of <random> engines so that
// seeded output is identical across platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi], inclusive. Rejection-free; the modulo bias is
    // irrelevant for ranges tiny compared to 2^64.
    long long uniform(long long lo, long long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(next() % span);
    }

    Int uniform_int(long long lo, long long hi) { return Int(static_cast<long>(uniform(lo, hi))); }

    // Stable sub-stream derivation, so parallel trials draw independent,
    // schedule-independent values.
    static Rng derive(std::uint64_t seed, std::uint64_t stream) {
        Rng mix(seed ^ (0x6a09e667f3bcc909ULL + stream * 0x9e3779b97f4a7c15ULL));
        mix.next();
        return mix;
    }

private:
    std::uint64_t state_;
};

}  // namespace salmon
