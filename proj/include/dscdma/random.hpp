#pragma once

#include <cstdint>
#include <random>

namespace dscdma {

using Engine = std::mt19937_64;

/// Purpose tags keep the substreams of one realization independent, so that
/// e.g. changing the guard radius never shifts the shadowing draws.
enum class StreamPurpose : std::uint64_t {
    Placement = 1,
    Shadowing = 2,
    ChipOffset = 3,
    Oracle = 4,
    Instance = 5,
};

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Counter-based split: the seed of substream (counter, purpose) depends only
/// on the master seed and the two counters, never on evaluation order.
constexpr std::uint64_t substream_seed(std::uint64_t master, std::uint64_t counter,
                                       StreamPurpose purpose) noexcept
{
    std::uint64_t h = mix64(master);
    h = mix64(h ^ mix64(counter + 0x632be59bd9b4e019ULL));
    h = mix64(h ^ static_cast<std::uint64_t>(purpose));
    return h;
}

inline Engine make_stream(std::uint64_t master, std::uint64_t counter, StreamPurpose purpose)
{
    std::seed_seq seq{static_cast<std::uint32_t>(substream_seed(master, counter, purpose)),
                      static_cast<std::uint32_t>(substream_seed(master, counter, purpose) >> 32)};
    return Engine(seq);
}

/// Uniform on [0, 1).
inline double uniform01(Engine& rng)
{
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

}  // namespace dscdma
