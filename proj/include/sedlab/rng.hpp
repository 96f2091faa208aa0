#pragma once

#include <cstdint>

namespace sedlab {

/* splitmix64: tiny, portable, and bit-exact across platforms, which the
 * reproducibility contract needs (std:: distributions are not pinned).
 * Constants are the standard splitmix64 ones. */
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /* uniform in [0, 1) with 53 random bits */
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

private:
    std::uint64_t state_;
};

/* splitmix64 finalizer as a standalone hash */
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/* Per-substream seed for stream `index` under `master`; documented in FORMATS.md
 * so runs can be reproduced by independent implementations. */
inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index) {
    return mix64(master + (index + 1) * 0x9E3779B97F4A7C15ull);
}

}
