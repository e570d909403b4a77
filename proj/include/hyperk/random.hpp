#pragma once

#include <cstdint>
#include <random>

namespace hyperk {

/// SplitMix64 finalizer; derives independent per-instance seeds from a master seed.
constexpr std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Uniform integer in [0, bound) by rejection on raw std::mt19937_64 output.
std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t bound);

/// Uniform integer in [lo, hi].
inline std::int64_t uniform_between(std::mt19937_64 &rng, std::int64_t lo, std::int64_t hi)
{
    return lo + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

} // namespace hyperk
