#pragma once

#include <cmath>
#include <cstdint>

namespace hsbound {

// Minimal deterministic PRNG machinery. The standard <random> engines are
// portable, but the distributions are not (their algorithms are
// implementation-defined), and the search contract requires bit-identical
// results for a fixed seed. splitmix64 and xoshiro256** are tiny, public
// domain, and fully specified.

/// splitmix64 finalizer; also usable as a standalone 64-bit mixer.
inline constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }

private:
    std::uint64_t state_;
};

/// xoshiro256** seeded via splitmix64. The optional stream index selects an
/// independent substream, so (seed, stream) pairs can run concurrently and
/// still reproduce the sequential results exactly.
class Xoshiro256StarStar {
public:
    explicit Xoshiro256StarStar(std::uint64_t seed, std::uint64_t stream = 0) noexcept {
        SplitMix64 sm(seed ^ mix64(stream * 0x9e3779b97f4a7c15ULL + 0x5851f42d4c957f2dULL));
        for (auto& word : state_) word = sm.next();
    }

    std::uint64_t next() noexcept {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1), 53 random bits.
    double uniform() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [-1, 1).
    double uniform_signed() noexcept { return 2.0 * uniform() - 1.0; }

    /// Uniform double in [lo, hi).
    double uniform_in(double lo, double hi) noexcept {
        return lo + (hi - lo) * uniform();
    }

    /// Uniform integer in [0, bound). bound must be > 0.
    std::uint64_t uniform_index(std::uint64_t bound) noexcept {
        // Multiply-shift; bias is negligible for the small bounds used here.
        const unsigned __int128 wide =
            static_cast<unsigned __int128>(next()) * static_cast<unsigned __int128>(bound);
        return static_cast<std::uint64_t>(wide >> 64);
    }

    /// Standard normal via Box-Muller (no cached spare, so the stream
    /// position is a pure function of the call count).
    double normal() noexcept {
        const double u1 = static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
};

}  // namespace hsbound
