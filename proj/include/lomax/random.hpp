#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace lomax {

/// SplitMix64 finalizer (Steele, Lea & Flood 2014). Used to derive seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed of an independent child stream, keyed by (parent, index).
constexpr std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index) noexcept
{
    return splitmix64(splitmix64(parent) ^ splitmix64(~index));
}

/**
 * xoshiro256** (Blackman & Vigna 2018), seeded by running SplitMix64 over
 * the 64-bit seed. Satisfies UniformRandomBitGenerator so it can feed the
 * <random> distributions as well.
 */
class Xoshiro256 {
public:
    using result_type = std::uint64_t;

    explicit Xoshiro256(std::uint64_t seed) noexcept
    {
        std::uint64_t x = seed;
        for (auto& s : state_) {
            x += 0x9E3779B97F4A7C15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
            z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
            s = z ^ (z >> 31);
        }
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept
    {
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

    /// Uniform double on [0, 1) with 53 random bits; never returns 1.
    double uniform01() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept
    {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
};

/// Generator for replicate `rep` of the cell seeded with `cell_seed`.
inline Xoshiro256 replicate_stream(std::uint64_t cell_seed, std::uint64_t rep) noexcept
{
    return Xoshiro256(derive_seed(cell_seed, rep));
}

} // namespace lomax
