#include <doctest.h>

#include <omp.h>

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

#include "stpete/khinchin.hpp"
#include "support.hpp"

using namespace stpete;

namespace {

// Detail lines of `khinchin 2048 0.05 10 1234567 yes`.
constexpr std::array<std::pair<double, double>, 10> kTranscriptRounds{{
    {1.94263, 6.97852},
    {2.02246, 5.64502},
    {2.09634, 14.1782},
    {1.95847, 4.32813},
    {1.98114, 6.52002},
    {2.07376, 4.80371},
    {1.97645, 5.91211},
    {2.01563, 10.0278},
    {2.01631, 15.6226},
    {1.99055, 5.01318},
}};

SimConfig make_config(std::uint64_t games, double delta, std::uint64_t rounds, std::uint32_t seed,
                      ExecutionMode mode = ExecutionMode::Serial) {
    SimConfig c;
    c.games = games;
    c.delta = delta;
    c.rounds = rounds;
    c.seed = seed;
    c.mode = mode;
    return c;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

// log2 of the geometric mean ~ Normal(1, 2/n); |rho - 2| < delta is roughly
// |log2 rho - 1| < delta / (2 ln 2).
double theorem1_probability_normal(double n, double delta) {
    const double z = delta * std::sqrt(n / 2.0) / (2.0 * std::numbers::ln2);
    return 2.0 * normal_cdf(z) - 1.0;
}

// Exact P(lo < S < hi) where S is the total tail count of n games, a negative
// binomial: P(S = s) = C(s + n - 1, n - 1) / 2^(s + n).
double tail_sum_probability(int n, double lo, double hi) {
    double total = 0.0;
    for (int s = 0; s < 4 * n + 200; ++s) {
        if (!(lo < s && s < hi)) continue;
        const double log_p = std::lgamma(s + n) - std::lgamma(n) - std::lgamma(s + 1) - (s + n) * std::numbers::ln2;
        total += std::exp(log_p);
    }
    return total;
}

}  // namespace

TEST_SUITE("khinchin") {

TEST_CASE("theorem I band") {
    CHECK(theorem1_holds(2.02246, 0.05));
    CHECK_FALSE(theorem1_holds(1.94263, 0.05));
    for (double d : {1e-9, 0.001, 0.05, 1.0, 10.0}) CHECK(theorem1_holds(2.0, d));
    // Edges are exclusive.
    CHECK_FALSE(theorem1_holds(2.5, 0.5));
    CHECK_FALSE(theorem1_holds(1.5, 0.5));
}

TEST_CASE("theorem II band") {
    const auto band = Theorem2Band::for_games(2048, 0.05);
    CHECK(band.low == doctest::Approx(6.888).epsilon(1e-3));
    CHECK(band.high == doctest::Approx(8.441).epsilon(1e-3));
    CHECK(theorem2_holds(6.97852, 2048, 0.05));
    CHECK_FALSE(theorem2_holds(14.1782, 2048, 0.05));
    CHECK_FALSE(theorem2_holds(5.64502, 2048, 0.05));
    CHECK_FALSE(theorem2_holds(band.low, 2048, 0.05));
    CHECK_FALSE(theorem2_holds(band.high, 2048, 0.05));
}

TEST_CASE("theorem II needs at least 3 games") {
    CHECK_THROWS_WITH_AS(theorem2_holds(1.0, 2, 0.05), "log-log undefined or degenerate", std::domain_error);
    CHECK_THROWS_AS(theorem2_holds(1.0, 0, 0.05), std::domain_error);
    CHECK_NOTHROW(theorem2_holds(1.0, 3, 0.05));
}

TEST_CASE("truth table of the 10-round transcript") {
    const std::array<bool, 10> expected_t1{false, true, false, true, true, false, true, true, true, true};
    int t1 = 0, t2 = 0;
    for (std::size_t i = 0; i < kTranscriptRounds.size(); ++i) {
        const auto [g, a] = kTranscriptRounds[i];
        CHECK(theorem1_holds(g, 0.05) == expected_t1[i]);
        CHECK(theorem2_holds(a, 2048, 0.05) == (i == 0));
        t1 += theorem1_holds(g, 0.05) ? 1 : 0;
        t2 += theorem2_holds(a, 2048, 0.05) ? 1 : 0;
    }
    CHECK(t1 == 7);
    CHECK(t2 == 1);
}

TEST_CASE("serial run reproduces the transcript rounds") {
    const auto cfg = make_config(2048, 0.05, 10, 1234567);
    const auto rounds = play_rounds(cfg);
    REQUIRE(rounds.size() == 10);
    for (std::size_t i = 0; i < rounds.size(); ++i) {
        CHECK(rounds[i].g_mean == doctest::Approx(kTranscriptRounds[i].first).epsilon(5e-6));
        CHECK(rounds[i].a_mean == doctest::Approx(kTranscriptRounds[i].second).epsilon(5e-6));
    }
    const auto rep = tally(cfg, rounds);
    CHECK(rep.f1 == 0.7);
    CHECK(rep.f2 == 0.1);
}

TEST_CASE("property: wider tolerance never loses a pass") {
    std::mt19937 pick(8);
    std::uniform_real_distribution<double> g(0.5, 4.0), a(1.0, 40.0), d(1e-4, 1.5);
    for (int i = 0; i < 5000; ++i) {
        const double gm = g(pick), am = a(pick);
        double d1 = d(pick), d2 = d(pick);
        if (d1 > d2) std::swap(d1, d2);
        const std::uint64_t games = 3 + pick() % 100000;
        if (theorem1_holds(gm, d1)) REQUIRE(theorem1_holds(gm, d2));
        if (theorem2_holds(am, games, d1)) REQUIRE(theorem2_holds(am, games, d2));
    }
}

TEST_CASE("config validation") {
    CHECK_NOTHROW(make_config(3, 0.1, 1, 0).validate());
    CHECK_THROWS_WITH_AS(make_config(2, 0.1, 1, 0).validate(),
                         doctest::Contains("must be > 0 and games > 2"), std::invalid_argument);
    CHECK_THROWS_AS(make_config(100, 0.0, 1, 0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(make_config(100, -1.0, 1, 0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(make_config(100, std::nan(""), 1, 0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(make_config(100, 0.1, 0, 0).validate(), std::invalid_argument);
}

TEST_CASE("an all-HEAD round fails both bands") {
    const auto cfg = make_config(3, 0.05, 1, 0);
    const std::vector<RoundSummary> rounds{summarize(test::outcomes_from_tails({0, 0, 0}))};
    const auto rep = tally(cfg, rounds);
    CHECK(rep.f1 == 0.0);
    CHECK(rep.f2 == 0.0);
    CHECK_THROWS_AS(tally(make_config(3, 0.05, 2, 0), rounds), std::invalid_argument);
}

TEST_CASE("frequencies at 2048 games stay in the statistical band") {
    for (auto mode : {ExecutionMode::Serial, ExecutionMode::Parallel}) {
        for (std::uint32_t seed : {1234567u, 1u, 2024u}) {
            const auto rep = estimate_frequencies(make_config(2048, 0.05, 100, seed, mode));
            INFO("seed " << seed);
            CHECK(rep.f1 >= 0.60);
            CHECK(rep.f1 <= 0.90);
            CHECK(rep.f2 >= 0.03);
            CHECK(rep.f2 <= 0.35);
            // Counts and frequencies agree exactly.
            CHECK(rep.f1 * 100 == doctest::Approx(static_cast<double>(rep.theorem1_count)).epsilon(1e-12));
            CHECK(rep.f2 * 100 == doctest::Approx(static_cast<double>(rep.theorem2_count)).epsilon(1e-12));
        }
    }
}

TEST_CASE("OpenMP kernel equals the serial reference for any thread count") {
    const auto cfg = make_config(1000, 0.05, 37, 4242, ExecutionMode::Parallel);
    const auto expected = reference::play_rounds_parallel_layout(cfg);
    const int saved = omp_get_max_threads();
    for (int threads : {1, 2, 5}) {
        omp_set_num_threads(threads);
        const auto got = play_rounds(cfg);
        REQUIRE(got.size() == expected.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
            REQUIRE(got[i].sum_tails == expected[i].sum_tails);
            REQUIRE(got[i].a_mean == expected[i].a_mean);
        }
    }
    omp_set_num_threads(saved);
}

TEST_CASE("serial and parallel modes are each deterministic and differ from each other") {
    const auto serial = make_config(512, 0.05, 20, 77, ExecutionMode::Serial);
    const auto parallel = make_config(512, 0.05, 20, 77, ExecutionMode::Parallel);
    const auto s1 = play_rounds(serial), s2 = play_rounds(serial);
    const auto p1 = play_rounds(parallel), p2 = play_rounds(parallel);
    bool differ = false;
    for (std::size_t i = 0; i < s1.size(); ++i) {
        REQUIRE(s1[i].sum_tails == s2[i].sum_tails);
        REQUIRE(p1[i].sum_tails == p2[i].sum_tails);
        differ = differ || s1[i].sum_tails != p1[i].sum_tails;
    }
    CHECK(differ);
}

TEST_CASE("f1 rises with the number of games") {
    double previous = 0.0;
    for (int k = 6; k <= 17; ++k) {
        const auto rep =
            estimate_frequencies(make_config(std::uint64_t{1} << k, 0.05, 100, kDefaultSeed, ExecutionMode::Parallel));
        INFO("games = 2^" << k << " f1 = " << rep.f1);
        CHECK(rep.f1 >= previous - 0.05);
        previous = rep.f1;
    }
    CHECK(previous >= 0.99);
}

TEST_CASE("threshold search: delta = eta = 0.05") {
    // Oracle: first power of two whose normal-approximation pass probability
    // reaches 0.95 (the crossing is near 5,900 games).
    CHECK(theorem1_probability_normal(4096, 0.05) < 0.95);
    CHECK(theorem1_probability_normal(8192, 0.05) > 0.95);

    const auto est = find_threshold(0.05, 0.05, 1000, kDefaultSeed, std::uint64_t{1} << 20);
    REQUIRE(est.n_hat.has_value());
    CHECK(*est.n_hat == 8192);
    CHECK(est.f1_at_n_hat >= 0.95);

    const auto other = find_threshold(0.05, 0.05, 1000, 99u, std::uint64_t{1} << 20);
    REQUIRE(other.n_hat.has_value());
    CHECK(*other.n_hat == 8192);
}

TEST_CASE("threshold search: a wide band passes at the first candidate") {
    // Exact: 8 games, 1 < rho < 3  <=>  0 < S < 8 log2(3).
    const double p = tail_sum_probability(8, 0.0, 8.0 * std::log2(3.0));
    CHECK(p == doctest::Approx(0.8645).epsilon(1e-3));
    const auto est = find_threshold(1.0, 0.5, 1000, kDefaultSeed, 1024);
    REQUIRE(est.n_hat.has_value());
    CHECK(*est.n_hat == 8);
}

TEST_CASE("small-n lattice: the theorem I pass probability dips before rising") {
    // With delta = 0.01 only S = n (and neighbours once n > 128) lands in the band.
    auto exact = [](int n) {
        return tail_sum_probability(n, n * std::log2(1.99), n * std::log2(2.01));
    };
    CHECK(exact(8) == doctest::Approx(0.0982).epsilon(1e-3));
    CHECK(exact(16) == doctest::Approx(0.0700).epsilon(1e-3));
    CHECK(exact(128) == doctest::Approx(0.0249).epsilon(2e-3));
    CHECK(exact(8) - exact(128) > 0.05);
    CHECK(exact(1024) > exact(8));
}

TEST_CASE("threshold search: not found when the band is too tight") {
    const auto est = find_threshold(0.001, 0.001, 200, kDefaultSeed, 8);
    CHECK_FALSE(est.n_hat.has_value());
    CHECK(est.max_games == 8);
}

TEST_CASE("threshold search preconditions") {
    CHECK_THROWS_AS(find_threshold(0.0, 0.1, 10, 1, 64), std::invalid_argument);
    CHECK_THROWS_AS(find_threshold(0.1, 0.0, 10, 1, 64), std::invalid_argument);
    CHECK_THROWS_AS(find_threshold(0.1, 1.0, 10, 1, 64), std::invalid_argument);
    CHECK_THROWS_AS(find_threshold(0.1, 0.1, 0, 1, 64), std::invalid_argument);
    CHECK_THROWS_AS(find_threshold(0.1, 0.1, 10, 1, 4), std::invalid_argument);
    CHECK_THROWS_AS(find_threshold(0.1, 0.1, 10, 1, 100), std::invalid_argument);
}

}
