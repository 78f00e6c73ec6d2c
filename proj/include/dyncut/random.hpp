#pragma once

#include <cstdint>
#include <random>

namespace dyncut {

// Seedable RNG wrapper. All bounded draws go through rejection sampling on the
// raw 64-bit stream, so a seed fully determines every sample independently of
// the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0x9e3779b97f4a7c15ULL) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    // Uniform in [0, n). Requires n >= 1.
    std::uint64_t below(std::uint64_t n) {
        // Classic threshold rejection; unbiased.
        std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            std::uint64_t r = eng_();
            if (r >= threshold) return r % n;
        }
    }

    // Uniform in [lo, hi], inclusive. Requires lo <= hi.
    std::uint64_t in(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

    // Uniform in [0, 1).
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return unit() < p; }

    // Derive an independent deterministic child stream.
    Rng fork() { return Rng(eng_() ^ 0xd1b54a32d192ed03ULL); }

private:
    std::mt19937_64 eng_;
};

}  // namespace dyncut
