#pragma once

#include <cstdint>

namespace prymlab {

// splitmix64 with the standard constants. Chosen over std::mt19937_64 because the
// output stream is pinned by the algorithm itself, so seeded fixtures are portable
// across standard libraries and platforms.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, bound) by rejection; bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~0ULL - (~0ULL % bound);
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % bound;
    }

    // Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

} // namespace prymlab
