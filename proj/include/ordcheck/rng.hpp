#pragma once

#include <cstdint>
#include <random>

namespace ordcheck::rng {

// splitmix64 step (Vigna's mixer). Advances the state and returns the next
// output word.
inline std::uint64_t splitmix64(std::uint64_t& state) noexcept
{
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Substream derivation: stream k of a base seed is splitmix64 applied to
// seed XOR mix(k). Used wherever work is partitioned (per-trial, per-sample
// block) so results do not depend on execution order.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t stream) noexcept
{
    std::uint64_t s = seed ^ (0xA0761D6478BD642Full * (stream + 1));
    return splitmix64(s);
}

// All randomness in the library flows through std::mt19937_64 seeded
// explicitly; draws are converted by inversion only.
using Engine = std::mt19937_64;

// Uniform double strictly inside (0,1): 53 random bits centered in the cell.
inline double uniform01(Engine& eng) noexcept
{
    return (static_cast<double>(eng() >> 11) + 0.5) * 0x1.0p-53;
}

inline double uniform(Engine& eng, double lo, double hi) noexcept
{
    return lo + (hi - lo) * uniform01(eng);
}

inline double log_uniform(Engine& eng, double lo, double hi) noexcept
{
    return lo * std::exp(uniform01(eng) * std::log(hi / lo));
}

// Uniform integer in [lo, hi] inclusive.
inline std::size_t uniform_index(Engine& eng, std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(eng);
}

} // namespace ordcheck::rng
