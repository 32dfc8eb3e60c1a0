#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "stpete/khinchin.hpp"
#include "stpete/seeding.hpp"

namespace stpete {

struct SweepSpec {
    std::vector<std::uint64_t> games_list = default_games();
    std::vector<double> deltas = {0.01, 0.05, 0.1};
    std::uint64_t rounds = kDefaultRounds;
    std::uint32_t seed = kDefaultSeed;
    ExecutionMode mode = ExecutionMode::Parallel;

    /// 2^3 ... 2^25.
    static std::vector<std::uint64_t> default_games();

    /// games strictly ascending and > 2, deltas non-empty and > 0, rounds >= 1.
    void validate() const;
};

struct SweepRow {
    std::uint64_t games = 0;
    double ln_games = 0.0;
    double delta = 0.0;
    std::uint64_t rounds = 0;
    double f1 = 0.0;
    double f2 = 0.0;
    std::uint32_t seed = 0;
    std::uint64_t saturated_rounds = 0;
};

/// One row per (delta, games) cell, ordered by delta then games. Cells with
/// the same game count share their rounds; in PARALLEL mode every
/// (games, round) pair is an independent OpenMP task.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

namespace reference {
/// Cell-by-cell sweep built on estimate_frequencies; same output as run_sweep.
std::vector<SweepRow> run_sweep_by_cell(const SweepSpec& spec);
}  // namespace reference

inline constexpr const char* kSweepCsvHeader = "games,ln_games,delta,rounds,f1,f2,seed,saturated_rounds";

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

// Buffon's 1777 tally: 2048 games paying 10057 crowns.
inline constexpr std::uint64_t kBuffonGames = 2048;
inline constexpr std::uint64_t kBuffonTotalPayout = 10057;

struct BuffonReport {
    std::uint32_t seed = 0;
    std::vector<double> a_means;
    double round1_total = 0.0;
    double round1_per_game = 0.0;
    double a_mean_mean = 0.0;
    double a_mean_sd = 0.0;  // sample sd, 0 for a single round
    double a_mean_median = 0.0;
};

/// `rounds` rounds of 2048 games on one serial stream seeded with `seed`.
BuffonReport buffon_preset(std::uint32_t seed, std::uint64_t rounds);

std::string format_buffon_report(const BuffonReport& report);

}  // namespace stpete
