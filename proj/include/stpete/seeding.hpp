#pragma once

#include <cstdint>

namespace stpete {

/// SplitMix64 finalizer (Stafford variant 13).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ull;

/// Seed for the independent generator of one parallel round. Equivalent to
/// taking output number index + 1 of a SplitMix64 stream keyed by base_seed,
/// keeping the high 32 bits.
constexpr std::uint32_t derive_round_seed(std::uint32_t base_seed, std::uint64_t round_index) noexcept {
    const std::uint64_t key = mix64(static_cast<std::uint64_t>(base_seed) + kGoldenGamma);
    return static_cast<std::uint32_t>(mix64(key + (round_index + 1) * kGoldenGamma) >> 32);
}

/// Stream index of round `round` in a cell of `games` games. Rounds of
/// different game counts land on different streams; cells sharing a game
/// count (different deltas) share rounds.
constexpr std::uint64_t round_stream_index(std::uint64_t games, std::uint64_t round) noexcept {
    return (games << 32) + round;
}

}  // namespace stpete
