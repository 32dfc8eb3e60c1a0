#include "stpete/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "stpete/text.hpp"

namespace stpete {

std::vector<std::uint64_t> SweepSpec::default_games() {
    std::vector<std::uint64_t> g;
    for (int k = 3; k <= 25; ++k) g.push_back(std::uint64_t{1} << k);
    return g;
}

void SweepSpec::validate() const {
    if (games_list.empty()) throw std::invalid_argument("sweep: games list is empty");
    if (deltas.empty()) throw std::invalid_argument("sweep: delta list is empty");
    if (rounds < 1) throw std::invalid_argument("sweep: rounds must be >= 1");
    for (std::size_t i = 0; i < games_list.size(); ++i) {
        if (games_list[i] < 3) throw std::invalid_argument("sweep: every games value must be > 2");
        if (i > 0 && games_list[i] <= games_list[i - 1])
            throw std::invalid_argument("sweep: games list must be strictly ascending");
    }
    for (double d : deltas)
        if (!(d > 0.0)) throw std::invalid_argument("sweep: every delta must be > 0");
}

namespace {

SimConfig cell_config(const SweepSpec& spec, std::uint64_t games, double delta) {
    SimConfig c;
    c.games = games;
    c.delta = delta;
    c.rounds = spec.rounds;
    c.seed = spec.seed;
    c.mode = spec.mode;
    return c;
}

SweepRow make_row(const FrequencyReport& rep) {
    return {rep.games, std::log(static_cast<double>(rep.games)), rep.delta, rep.rounds,
            rep.f1,    rep.f2,                                   rep.seed,  rep.saturated_rounds};
}

std::vector<std::size_t> delta_order(const std::vector<double>& deltas) {
    std::vector<std::size_t> idx(deltas.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return deltas[a] < deltas[b]; });
    return idx;
}

std::vector<SweepRow> rows_from_rounds(const SweepSpec& spec,
                                       const std::vector<std::vector<RoundSummary>>& per_games) {
    std::vector<SweepRow> rows;
    rows.reserve(spec.games_list.size() * spec.deltas.size());
    for (std::size_t d : delta_order(spec.deltas))
        for (std::size_t g = 0; g < spec.games_list.size(); ++g)
            rows.push_back(make_row(tally(cell_config(spec, spec.games_list[g], spec.deltas[d]), per_games[g])));
    return rows;
}

// Every (games, round) pair as one task, largest games first.
std::vector<std::vector<RoundSummary>> play_grid_parallel(const SweepSpec& spec) {
    const std::size_t cells = spec.games_list.size();
    std::vector<std::vector<RoundSummary>> out(cells, std::vector<RoundSummary>(spec.rounds));
    const auto rounds = static_cast<std::int64_t>(spec.rounds);
    const auto tasks = static_cast<std::int64_t>(cells) * rounds;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t t = 0; t < tasks; ++t) {
        const auto cell = cells - 1 - static_cast<std::size_t>(t / rounds);
        const auto r = static_cast<std::uint64_t>(t % rounds);
        const std::uint64_t games = spec.games_list[cell];
        Mt19937 gen(derive_round_seed(spec.seed, round_stream_index(games, r)));
        out[cell][r] = play_round(gen, games);
    }
    return out;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    spec.validate();
    std::vector<std::vector<RoundSummary>> per_games;
    if (spec.mode == ExecutionMode::Parallel) {
        per_games = play_grid_parallel(spec);
    } else {
        per_games.reserve(spec.games_list.size());
        for (std::uint64_t games : spec.games_list)
            per_games.push_back(play_rounds(cell_config(spec, games, spec.deltas.front())));
    }
    return rows_from_rounds(spec, per_games);
}

namespace reference {

std::vector<SweepRow> run_sweep_by_cell(const SweepSpec& spec) {
    spec.validate();
    std::vector<SweepRow> rows;
    for (std::size_t d : delta_order(spec.deltas))
        for (std::uint64_t games : spec.games_list)
            rows.push_back(make_row(estimate_frequencies(cell_config(spec, games, spec.deltas[d]))));
    return rows;
}

}  // namespace reference

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << kSweepCsvHeader << '\n';
    for (const auto& r : rows) {
        os << r.games << ',' << sig6(r.ln_games) << ',' << sig6(r.delta) << ',' << r.rounds << ','
           << sig6(r.f1) << ',' << sig6(r.f2) << ',' << r.seed << ',' << r.saturated_rounds << '\n';
    }
}

BuffonReport buffon_preset(std::uint32_t seed, std::uint64_t rounds) {
    if (rounds < 1) throw std::invalid_argument("buffon: rounds must be >= 1");
    BuffonReport rep;
    rep.seed = seed;
    rep.a_means.reserve(rounds);
    Mt19937 croupier(seed);
    for (std::uint64_t r = 0; r < rounds; ++r) rep.a_means.push_back(play_round(croupier, kBuffonGames).a_mean);

    const auto n = static_cast<double>(rounds);
    rep.round1_total = rep.a_means.front() * static_cast<double>(kBuffonGames);
    rep.round1_per_game = rep.a_means.front();
    rep.a_mean_mean = std::accumulate(rep.a_means.begin(), rep.a_means.end(), 0.0) / n;
    if (rounds > 1) {
        double ss = 0.0;
        for (double a : rep.a_means) ss += (a - rep.a_mean_mean) * (a - rep.a_mean_mean);
        rep.a_mean_sd = std::sqrt(ss / (n - 1.0));
    }
    std::vector<double> sorted = rep.a_means;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t mid = sorted.size() / 2;
    rep.a_mean_median = sorted.size() % 2 == 1 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
    return rep;
}

std::string format_buffon_report(const BuffonReport& report) {
    std::ostringstream os;
    os << "Buffon: games = " << kBuffonGames << " total = " << kBuffonTotalPayout << " per game = "
       << sig6(static_cast<double>(kBuffonTotalPayout) / static_cast<double>(kBuffonGames)) << '\n';
    os << "round 1: games = " << kBuffonGames << " total = " << std::fixed << std::setprecision(0) << report.round1_total
       << std::defaultfloat << std::setprecision(6)
       << " per game = " << sig6(report.round1_per_game) << '\n';
    os << "r = " << report.a_means.size() << " A mean = " << sig6(report.a_mean_mean)
       << " A sd = " << sig6(report.a_mean_sd) << " A median = " << sig6(report.a_mean_median)
       << " s = " << report.seed << '\n';
    return os.str();
}

}  // namespace stpete
