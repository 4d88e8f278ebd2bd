#pragma once

#include <cstdint>

namespace dyowa {

// SplitMix64 finalizer. Full-avalanche permutation of 64-bit values.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Sequential SplitMix64 generator. Small, fast, and identical on every
// platform, which keeps seeded test samples reproducible everywhere.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix64(state_);
    }

    // Uniform in [0, 1), 53 random bits.
    double uniform01() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    // Uniform index in [0, n). n must be positive.
    std::size_t index(std::size_t n) {
        return static_cast<std::size_t>(next() % n);
    }

private:
    std::uint64_t state_;
};

// Stateless value at position `counter` of the SplitMix64 stream for `seed`.
// Evaluation-order independent: the same (seed, counter) always yields the
// same value, no matter which thread asks first.
inline std::uint64_t counter_value(std::uint64_t seed, std::uint64_t counter) {
    return mix64(seed + (counter + 1) * 0x9e3779b97f4a7c15ull);
}

// FNV-1a over a byte string. Used to derive stable per-item sub-seeds.
inline std::uint64_t fnv1a(const char* data, std::size_t size) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::size_t i = 0; i < size; ++i) {
        h ^= static_cast<unsigned char>(data[i]);
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace dyowa
