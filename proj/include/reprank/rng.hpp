#pragma once

#include <cstdint>

namespace reprank::rng {

// splitmix64 finalizer (Steele, Lea, Flood 2014). Used both as the mixing
// function for seed derivation and as the generator itself, so results do
// not depend on any standard-library distribution implementation.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Counter-based child-seed derivation: the stream for cell (a, b) depends
// only on (base, a, b), so adding new cells never perturbs existing ones.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
    std::uint64_t x = mix64(base ^ 0x6A09E667F3BCC909ull);
    x = mix64(x + 0x9E3779B97F4A7C15ull * (a + 1));
    x = mix64(x + 0x9E3779B97F4A7C15ull * (b + 1));
    return x;
}

class SplitMix {
public:
    explicit SplitMix(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t x = state_;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
        return x ^ (x >> 31);
    }

    // Unbiased integer in [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

    // Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

}  // namespace reprank::rng
