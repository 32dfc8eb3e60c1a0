#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>

#include "stpete/bounds.hpp"
#include "stpete/experiment.hpp"
#include "stpete/khinchin.hpp"

namespace stpete::cli {

enum class Subcommand { Simulate, Sweep, Threshold, Bound, Buffon, Help };

struct HelpArgs {
    std::string text;
};

struct SweepArgs {
    SweepSpec spec;
    std::optional<std::string> out_path;
};

struct ThresholdArgs {
    double delta = 0.05;
    double eta = 0.05;
    std::uint64_t rounds = 1000;
    std::uint64_t max_games = std::uint64_t{1} << 25;
    std::uint32_t seed = kDefaultSeed;
};

struct BoundArgs {
    ProkhorovQuery query;
};

struct BuffonArgs {
    std::uint64_t rounds = kDefaultRounds;
    std::uint32_t seed = kDefaultSeed;
};

struct ParsedCommand {
    Subcommand subcommand = Subcommand::Help;
    std::variant<HelpArgs, SimConfig, SweepArgs, ThresholdArgs, BoundArgs, BuffonArgs> payload;
};

/// Bad command line. The message goes to stderr; exit_code is nonzero.
class CliError : public std::runtime_error {
public:
    CliError(const std::string& what, int exit_code = 1) : std::runtime_error(what), exit_code_(exit_code) {}
    int exit_code() const noexcept { return exit_code_; }

private:
    int exit_code_;
};

std::string usage_text();

/// Arguments exclude the program name. A leading word `sweep`, `threshold`,
/// `bound`, `buffon` or `help` picks a subcommand; anything else is the
/// positional `games delta [rounds] [seed] [details]` form.
ParsedCommand parse_args(std::span<const std::string> args);

/// `g = <games> d = <delta> r = <rounds> f1 = <f1> f2 = <f2> s = <seed>`
std::string format_summary(const FrequencyReport& report);

/// `G = <g_mean> A = <a_mean>`
std::string format_details(const RoundSummary& round);

std::string format_threshold(const ThresholdEstimate& est);

std::string format_bound(const ProkhorovQuery& q, std::uint64_t n0);

/// Parses and executes. Results go to out, diagnostics to err.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace stpete::cli
