#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "stpete/game.hpp"

namespace stpete {

enum class ExecutionMode { Serial, Parallel };

inline constexpr std::uint64_t kDefaultRounds = 100;
inline constexpr std::uint32_t kDefaultSeed = 1234567;

struct SimConfig {
    std::uint64_t games = 0;
    double delta = 0.0;
    std::uint64_t rounds = kDefaultRounds;
    std::uint32_t seed = kDefaultSeed;
    bool details = false;
    ExecutionMode mode = ExecutionMode::Serial;

    /// Throws std::invalid_argument unless games > 2, delta > 0, rounds >= 1.
    void validate() const;
};

struct FrequencyReport {
    std::uint64_t games = 0;
    double delta = 0.0;
    std::uint64_t rounds = 0;
    std::uint32_t seed = 0;
    std::uint64_t theorem1_count = 0;
    std::uint64_t theorem2_count = 0;
    std::uint64_t saturated_rounds = 0;
    double f1 = 0.0;
    double f2 = 0.0;
};

/// |g_mean - 2| < delta.
bool theorem1_holds(double g_mean, double delta);

/// Open interval ((ln n)^(1-delta), (ln n)^(1+delta)) for the arithmetic mean.
struct Theorem2Band {
    double low = 0.0;
    double high = 0.0;

    static Theorem2Band for_games(std::uint64_t games, double delta);
    bool contains(double a_mean) const { return low < a_mean && a_mean < high; }
};

/// (ln n)^(1-delta) < a_mean < (ln n)^(1+delta); throws std::domain_error
/// for games < 3.
bool theorem2_holds(double a_mean, std::uint64_t games, double delta);

/// Plays config.rounds rounds. SERIAL draws every round from one stream
/// seeded with config.seed; PARALLEL gives round r its own generator seeded
/// with derive_round_seed(seed, round_stream_index(games, r)) and runs the
/// rounds under OpenMP. The result is in round order either way.
std::vector<RoundSummary> play_rounds(const SimConfig& config);

/// Counts the rounds passing each band.
FrequencyReport tally(const SimConfig& config, std::span<const RoundSummary> rounds);

FrequencyReport estimate_frequencies(const SimConfig& config);

struct ThresholdEstimate {
    double delta = 0.0;
    double eta = 0.0;
    std::uint64_t rounds = 0;
    std::uint32_t seed = 0;
    std::uint64_t max_games = 0;
    std::optional<std::uint64_t> n_hat;
    double f1_at_n_hat = 0.0;
};

/// First power of two games in [8, max_games] whose PARALLEL-mode f1 reaches
/// 1 - eta. Empirical and noisy; n_hat is empty when nothing qualifies.
ThresholdEstimate find_threshold(double delta, double eta, std::uint64_t rounds,
                                 std::uint32_t seed, std::uint64_t max_games);

namespace reference {

/// Plain loop over the same per-round generators as the PARALLEL kernel.
std::vector<RoundSummary> play_rounds_parallel_layout(const SimConfig& config);

}  // namespace reference

}  // namespace stpete
