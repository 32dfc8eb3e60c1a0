#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>

#include "stpete/rng.hpp"

namespace stpete {

/// Tails beyond this still count toward the tail sum, but the payout stops
/// doubling at 2^1023 so the arithmetic sum stays finite.
inline constexpr std::uint64_t kMaxExactTails = 1023;

inline double payout_for(std::uint64_t tails) {
    return std::ldexp(1.0, static_cast<int>(std::min(tails, kMaxExactTails)));
}

struct GameOutcome {
    std::uint64_t tails = 0;
    double payout = 1.0;
    bool saturated = false;

    static GameOutcome from_tails(std::uint64_t tails) {
        return {tails, payout_for(tails), tails > kMaxExactTails};
    }
};

struct RoundSummary {
    std::uint64_t games = 0;
    std::uint64_t sum_tails = 0;
    double g_mean = 0.0;  // (a_1 ... a_n)^(1/n)
    double a_mean = 0.0;  // (a_1 + ... + a_n) / n
    bool saturated = false;
};

/// Running totals for one round. The geometric mean is carried as an exact
/// integer tail sum and only exponentiated in finish().
class RoundAccumulator {
public:
    void add(const GameOutcome& g) noexcept {
        ++games_;
        sum_tails_ += g.tails;
        payout_sum_ += g.payout;
        saturated_ = saturated_ || g.saturated;
    }

    std::uint64_t games() const noexcept { return games_; }

    RoundSummary finish() const;

private:
    std::uint64_t games_ = 0;
    std::uint64_t sum_tails_ = 0;
    double payout_sum_ = 0.0;
    bool saturated_ = false;
};

/// Toss until the first HEAD. Consumes tails + 1 words from gen.
template <WordSource G>
GameOutcome play_game(G& gen) {
    std::uint64_t tails = 0;
    while (flip(gen) == Coin::Tail) ++tails;
    return GameOutcome::from_tails(tails);
}

/// Plays `games` games back to back on one stream.
template <WordSource G>
RoundSummary play_round(G& gen, std::uint64_t games) {
    if (games == 0) throw std::invalid_argument("play_round: games must be >= 1");
    RoundAccumulator acc;
    for (std::uint64_t i = 0; i < games; ++i) acc.add(play_game(gen));
    return acc.finish();
}

RoundSummary summarize(std::span<const GameOutcome> outcomes);

/// (sum of tails) / n, i.e. log2 of the geometric mean payout.
double mean_log2_payout(std::span<const GameOutcome> outcomes);

}  // namespace stpete
