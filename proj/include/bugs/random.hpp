#pragma once

// Counter-derived random streams. Every trial owns a generator whose seed is
// a hash of (master seed, trial counters), so results never depend on which
// worker ran the trial or in what order.

#include <cstdint>
#include <initializer_list>
#include <limits>

namespace bugs {

/// SplitMix64 output function.
constexpr std::uint64_t mix64(std::uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// SplitMix64 generator; satisfies UniformRandomBitGenerator.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    constexpr result_type operator()()
    {
        state_ += kGamma;
        return mix64(state_);
    }

    /// Uniform double in the open interval (0, 1), platform independent.
    constexpr double uniform01()
    {
        return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
    }

    constexpr double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Stream for the counter tuple (seed, c0, c1, ...).
    static constexpr SplitMix64 stream(std::uint64_t seed, std::initializer_list<std::uint64_t> counters)
    {
        std::uint64_t h = mix64(seed + kGamma);
        for (std::uint64_t c : counters) h = mix64(h ^ mix64(c + 0x632be59bd9b4e019ULL));
        return SplitMix64(h);
    }

private:
    static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
    std::uint64_t state_;
};

}  // namespace bugs
