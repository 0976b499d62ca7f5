#pragma once

#include <cstdint>

namespace zyclone {

/// SplitMix64 (Steele, Lea, Flood 2014). Chosen as the project-wide RNG
/// because the full algorithm fits in a dozen lines and produces identical
/// streams on every platform, which keeps seeded runs reproducible.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound). Modulo bias is irrelevant at desk scale.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

    double next_unit() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Independent stream for a worker or restart index, derived from the
    /// master seed only, so results do not depend on scheduling.
    static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 mixer(seed ^ (0xA3EC647659359ACDull * (index + 1)));
        return SplitMix64(mixer.next());
    }

private:
    std::uint64_t state_;
};

}  // namespace zyclone
