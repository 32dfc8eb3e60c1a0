#include "stpete/khinchin.hpp"

#include <bit>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <stdexcept>

#include "stpete/seeding.hpp"

namespace stpete {

void SimConfig::validate() const {
    if (games < 3 || !(delta > 0.0) || rounds < 1) {
        std::ostringstream os;
        os << "games = " << games << ", delta = " << delta << ", rounds = " << rounds
           << " must be > 0 and games > 2";
        throw std::invalid_argument(os.str());
    }
}

bool theorem1_holds(double g_mean, double delta) {
    return std::fabs(g_mean - 2.0) < delta;
}

Theorem2Band Theorem2Band::for_games(std::uint64_t games, double delta) {
    if (games < 3) throw std::domain_error("log-log undefined or degenerate");
    const double ln_games = std::log(static_cast<double>(games));
    return {std::pow(ln_games, 1.0 - delta), std::pow(ln_games, 1.0 + delta)};
}

bool theorem2_holds(double a_mean, std::uint64_t games, double delta) {
    return Theorem2Band::for_games(games, delta).contains(a_mean);
}

namespace {

RoundSummary play_derived_round(const SimConfig& config, std::uint64_t round) {
    Mt19937 gen(derive_round_seed(config.seed, round_stream_index(config.games, round)));
    return play_round(gen, config.games);
}

std::vector<RoundSummary> play_rounds_serial(const SimConfig& config) {
    std::vector<RoundSummary> out;
    out.reserve(config.rounds);
    Mt19937 croupier(config.seed);
    for (std::uint64_t r = 0; r < config.rounds; ++r) out.push_back(play_round(croupier, config.games));
    return out;
}

std::vector<RoundSummary> play_rounds_parallel(const SimConfig& config) {
    std::vector<RoundSummary> out(config.rounds);
    const auto n = static_cast<std::int64_t>(config.rounds);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t r = 0; r < n; ++r)
        out[static_cast<std::size_t>(r)] = play_derived_round(config, static_cast<std::uint64_t>(r));
    return out;
}

}  // namespace

std::vector<RoundSummary> play_rounds(const SimConfig& config) {
    config.validate();
    return config.mode == ExecutionMode::Serial ? play_rounds_serial(config) : play_rounds_parallel(config);
}

FrequencyReport tally(const SimConfig& config, std::span<const RoundSummary> rounds) {
    config.validate();
    if (rounds.size() != config.rounds) throw std::invalid_argument("tally: round count mismatch");
    const auto band = Theorem2Band::for_games(config.games, config.delta);

    FrequencyReport rep;
    rep.games = config.games;
    rep.delta = config.delta;
    rep.rounds = config.rounds;
    rep.seed = config.seed;
    for (const auto& r : rounds) {
        if (theorem1_holds(r.g_mean, config.delta)) ++rep.theorem1_count;
        if (band.contains(r.a_mean)) ++rep.theorem2_count;
        if (r.saturated) ++rep.saturated_rounds;
    }
    rep.f1 = static_cast<double>(rep.theorem1_count) / static_cast<double>(rep.rounds);
    rep.f2 = static_cast<double>(rep.theorem2_count) / static_cast<double>(rep.rounds);
    return rep;
}

FrequencyReport estimate_frequencies(const SimConfig& config) {
    const auto rounds = play_rounds(config);
    return tally(config, rounds);
}

ThresholdEstimate find_threshold(double delta, double eta, std::uint64_t rounds,
                                 std::uint32_t seed, std::uint64_t max_games) {
    if (!(delta > 0.0) || !(eta > 0.0 && eta < 1.0) || rounds < 1 || max_games < 8 ||
        !std::has_single_bit(max_games))
        throw std::invalid_argument(
            "threshold: need delta > 0, 0 < eta < 1, rounds >= 1, max_games a power of two >= 8");

    ThresholdEstimate est{delta, eta, rounds, seed, max_games, std::nullopt, 0.0};
    for (std::uint64_t games = 8; games <= max_games; games *= 2) {
        SimConfig cfg;
        cfg.games = games;
        cfg.delta = delta;
        cfg.rounds = rounds;
        cfg.seed = seed;
        cfg.mode = ExecutionMode::Parallel;
        const auto rep = estimate_frequencies(cfg);
        if (rep.f1 >= 1.0 - eta) {
            est.n_hat = games;
            est.f1_at_n_hat = rep.f1;
            break;
        }
    }
    return est;
}

namespace reference {

std::vector<RoundSummary> play_rounds_parallel_layout(const SimConfig& config) {
    config.validate();
    std::vector<RoundSummary> out;
    out.reserve(config.rounds);
    for (std::uint64_t r = 0; r < config.rounds; ++r) out.push_back(play_derived_round(config, r));
    return out;
}

}  // namespace reference

}  // namespace stpete
