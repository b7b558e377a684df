#pragma once

#include <cstdint>

namespace tktile {

/// SplitMix64 (Steele, Lea, Flood). Fixed so generated instances match
/// bit-for-bit across builds and platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : _state(seed) {}

    auto next() -> std::uint64_t
    {
        std::uint64_t z = (_state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound) by rejection; bound > 0.
    auto below(std::uint64_t bound) -> std::uint64_t
    {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do
            x = next();
        while (x >= limit);
        return x % bound;
    }

    auto operator()() -> std::uint64_t { return next(); }

private:
    std::uint64_t _state;
};

}
