#pragma once

#include <array>
#include <concepts>
#include <cstddef>
#include <cstdint>

namespace stpete {

/// Anything that hands out raw 32-bit words: the Mersenne Twister below, or a
/// scripted stub in tests.
template <class G>
concept WordSource = requires(G& g) {
    { g() } -> std::same_as<std::uint32_t>;
};

/// 32-bit Mersenne Twister (MT19937), standard seeding with multiplier
/// 1812433253. Single owner; copy it to fork an identical stream.
class Mt19937 {
public:
    static constexpr std::size_t kStateSize = 624;
    static constexpr std::uint32_t kDefaultSeed = 5489u;

    explicit Mt19937(std::uint32_t seed = kDefaultSeed) noexcept { seed_with(seed); }

    void seed_with(std::uint32_t seed) noexcept;

    std::uint32_t operator()() noexcept {
        if (index_ >= kStateSize) twist();
        std::uint32_t y = state_[index_++];
        y ^= y >> 11;
        y ^= (y << 7) & 0x9d2c5680u;
        y ^= (y << 15) & 0xefc60000u;
        y ^= y >> 18;
        return y;
    }

    void discard(std::uint64_t count) noexcept {
        while (count-- > 0) (void)(*this)();
    }

    friend bool operator==(const Mt19937&, const Mt19937&) = default;

private:
    void twist() noexcept;

    std::array<std::uint32_t, kStateSize> state_{};
    std::size_t index_ = kStateSize;
};

enum class Coin : std::uint8_t { Tail, Head };

/// One fair coin toss from exactly one word: the low bit decides, 1 is HEAD.
template <WordSource G>
constexpr Coin flip(G& gen) {
    return (gen() & 1u) != 0 ? Coin::Head : Coin::Tail;
}

}  // namespace stpete
