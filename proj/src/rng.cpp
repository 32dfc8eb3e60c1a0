#include "stpete/rng.hpp"

namespace stpete {

namespace {
constexpr std::size_t kShift = 397;
constexpr std::uint32_t kMatrixA = 0x9908b0dfu;
constexpr std::uint32_t kUpperMask = 0x80000000u;
constexpr std::uint32_t kLowerMask = 0x7fffffffu;

constexpr std::uint32_t mix(std::uint32_t upper, std::uint32_t lower, std::uint32_t far) {
    const std::uint32_t y = (upper & kUpperMask) | (lower & kLowerMask);
    return far ^ (y >> 1) ^ ((y & 1u) != 0 ? kMatrixA : 0u);
}
}  // namespace

void Mt19937::seed_with(std::uint32_t seed) noexcept {
    state_[0] = seed;
    for (std::size_t i = 1; i < kStateSize; ++i) {
        const std::uint32_t prev = state_[i - 1];
        state_[i] = 1812433253u * (prev ^ (prev >> 30)) + static_cast<std::uint32_t>(i);
    }
    index_ = kStateSize;
}

void Mt19937::twist() noexcept {
    std::size_t i = 0;
    for (; i < kStateSize - kShift; ++i)
        state_[i] = mix(state_[i], state_[i + 1], state_[i + kShift]);
    for (; i < kStateSize - 1; ++i)
        state_[i] = mix(state_[i], state_[i + 1], state_[i + kShift - kStateSize]);
    state_[kStateSize - 1] = mix(state_[kStateSize - 1], state_[0], state_[kShift - 1]);
    index_ = 0;
}

}  // namespace stpete
