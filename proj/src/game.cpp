#include "stpete/game.hpp"

namespace stpete {

RoundSummary RoundAccumulator::finish() const {
    if (games_ == 0) throw std::logic_error("RoundAccumulator: no games played");
    const auto n = static_cast<double>(games_);
    RoundSummary s;
    s.games = games_;
    s.sum_tails = sum_tails_;
    s.g_mean = std::exp2(static_cast<double>(sum_tails_) / n);
    s.a_mean = payout_sum_ / n;
    s.saturated = saturated_;
    return s;
}

RoundSummary summarize(std::span<const GameOutcome> outcomes) {
    RoundAccumulator acc;
    for (const auto& g : outcomes) acc.add(g);
    return acc.finish();
}

double mean_log2_payout(std::span<const GameOutcome> outcomes) {
    if (outcomes.empty()) throw std::invalid_argument("empty sample");
    std::uint64_t sum = 0;
    for (const auto& g : outcomes) sum += g.tails;
    return static_cast<double>(sum) / static_cast<double>(outcomes.size());
}

}  // namespace stpete
