#include "stpete/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <limits>
#include <memory>
#include <ostream>
#include <sstream>
#include <vector>

#include "stpete/text.hpp"

namespace stpete::cli {

namespace {

// atoi/atof leniency: leading numeric prefix, 0 when there is none.
long long lenient_int(const std::string& s) { return std::strtoll(s.c_str(), nullptr, 10); }
double lenient_real(const std::string& s) { return std::strtod(s.c_str(), nullptr); }

ParsedCommand help() { return {Subcommand::Help, HelpArgs{usage_text()}}; }

ParsedCommand parse_simulate(std::span<const std::string> args) {
    if (args.size() < 2) return help();

    const std::string rounds_text = args.size() > 2 ? args[2] : std::to_string(kDefaultRounds);
    const long long games = lenient_int(args[0]);
    const double delta = lenient_real(args[1]);
    const long long rounds = args.size() > 2 ? lenient_int(args[2]) : static_cast<long long>(kDefaultRounds);
    if (games < 3 || !(delta > 0.0) || rounds < 1)
        throw CliError("games = " + args[0] + ", delta = " + args[1] + ", rounds = " + rounds_text +
                       " must be > 0 and games > 2");

    SimConfig cfg;
    cfg.games = static_cast<std::uint64_t>(games);
    cfg.delta = delta;
    cfg.rounds = static_cast<std::uint64_t>(rounds);
    if (args.size() > 3) {
        const long long seed = lenient_int(args[3]);
        if (seed < 0 || seed > static_cast<long long>(std::numeric_limits<std::uint32_t>::max()))
            throw CliError("seed = " + args[3] + " must be in [0, 4294967295]");
        cfg.seed = static_cast<std::uint32_t>(seed);
    }
    cfg.details = args.size() > 4;
    cfg.mode = ExecutionMode::Serial;
    return {Subcommand::Simulate, cfg};
}

// CLI11 consumes arguments from the back.
void parse_with(CLI::App& app, std::span<const std::string> rest) {
    std::vector<std::string> reversed(rest.rbegin(), rest.rend());
    app.parse(reversed);
}

template <class Build>
ParsedCommand parse_flags(const std::string& name, std::span<const std::string> rest, Build&& build) {
    CLI::App app{"", "khinchin " + name};
    auto result = build(app);
    try {
        parse_with(app, rest);
    } catch (const CLI::CallForHelp&) {
        return {Subcommand::Help, HelpArgs{app.help()}};
    } catch (const CLI::ParseError& e) {
        throw CliError(std::string(e.what()) + "\n" + usage_text(), 2);
    }
    return result();
}

ParsedCommand parse_sweep(std::span<const std::string> rest) {
    auto args = std::make_shared<SweepArgs>();
    auto mode = std::make_shared<std::string>("parallel");
    auto out = std::make_shared<std::string>();
    return parse_flags("sweep", rest, [&](CLI::App& app) {
        app.add_option("--games", args->spec.games_list, "comma-separated ascending game counts")->delimiter(',');
        app.add_option("--delta", args->spec.deltas, "comma-separated tolerances")->delimiter(',');
        app.add_option("--rounds", args->spec.rounds, "rounds per cell");
        app.add_option("--seed", args->spec.seed, "base seed");
        app.add_option("--mode", *mode, "serial|parallel")->check(CLI::IsMember({"serial", "parallel"}));
        app.add_option("--out", *out, "CSV output path (default stdout)");
        return [args, mode, out] {
            args->spec.mode = *mode == "serial" ? ExecutionMode::Serial : ExecutionMode::Parallel;
            if (!out->empty()) args->out_path = *out;
            return ParsedCommand{Subcommand::Sweep, *args};
        };
    });
}

ParsedCommand parse_threshold(std::span<const std::string> rest) {
    auto args = std::make_shared<ThresholdArgs>();
    return parse_flags("threshold", rest, [&](CLI::App& app) {
        app.add_option("--delta", args->delta, "Theorem I tolerance");
        app.add_option("--eta", args->eta, "allowed failure frequency");
        app.add_option("--rounds", args->rounds, "rounds per candidate");
        app.add_option("--max-games", args->max_games, "largest power of two tried");
        app.add_option("--seed", args->seed, "base seed");
        return [args] { return ParsedCommand{Subcommand::Threshold, *args}; };
    });
}

ParsedCommand parse_bound(std::span<const std::string> rest) {
    auto args = std::make_shared<BoundArgs>();
    return parse_flags("bound", rest, [&](CLI::App& app) {
        app.add_option("--epsilon", args->query.epsilon, "accuracy")->required();
        app.add_option("--eta", args->query.eta, "failure probability")->required();
        return [args] { return ParsedCommand{Subcommand::Bound, *args}; };
    });
}

ParsedCommand parse_buffon(std::span<const std::string> rest) {
    auto args = std::make_shared<BuffonArgs>();
    return parse_flags("buffon", rest, [&](CLI::App& app) {
        app.add_option("--rounds", args->rounds, "rounds of 2048 games");
        app.add_option("--seed", args->seed, "seed");
        return [args] { return ParsedCommand{Subcommand::Buffon, *args}; };
    });
}

}  // namespace

std::string usage_text() {
    std::ostringstream os;
    os << "Usage: khinchin games delta [rounds = " << kDefaultRounds << "] [seed = " << kDefaultSeed
       << "] [details = no]\n"
       << "       khinchin sweep [--games LIST] [--delta LIST] [--rounds N] [--seed S]"
          " [--mode serial|parallel] [--out PATH]\n"
       << "       khinchin threshold [--delta D] [--eta E] [--rounds N] [--max-games N] [--seed S]\n"
       << "       khinchin bound --epsilon E --eta E\n"
       << "       khinchin buffon [--rounds N] [--seed S]\n";
    return os.str();
}

ParsedCommand parse_args(std::span<const std::string> args) {
    if (args.empty()) return help();
    const std::string& head = args.front();
    const auto rest = args.subspan(1);
    if (head == "help" || head == "-h" || head == "--help") return help();
    if (head == "sweep") return parse_sweep(rest);
    if (head == "threshold") return parse_threshold(rest);
    if (head == "bound") return parse_bound(rest);
    if (head == "buffon") return parse_buffon(rest);
    if (head.size() > 1 && head[0] == '-' && !(head[1] >= '0' && head[1] <= '9') && head[1] != '.')
        throw CliError("unknown option " + head + "\n" + usage_text(), 2);
    return parse_simulate(args);
}

std::string format_summary(const FrequencyReport& r) {
    std::ostringstream os;
    os << "g = " << r.games << " d = " << sig6(r.delta) << " r = " << r.rounds << " f1 = " << sig6(r.f1)
       << " f2 = " << sig6(r.f2) << " s = " << r.seed;
    return os.str();
}

std::string format_details(const RoundSummary& round) {
    return "G = " + sig6(round.g_mean) + " A = " + sig6(round.a_mean);
}

std::string format_threshold(const ThresholdEstimate& est) {
    std::ostringstream os;
    os << "d = " << sig6(est.delta) << " eta = " << sig6(est.eta) << " r = " << est.rounds << " n = ";
    if (est.n_hat)
        os << *est.n_hat << " f1 = " << sig6(est.f1_at_n_hat);
    else
        os << "not-found f1 = -";
    os << " max = " << est.max_games << " s = " << est.seed;
    return os.str();
}

std::string format_bound(const ProkhorovQuery& q, std::uint64_t n0) {
    std::ostringstream os;
    os << "e = " << sig6(q.epsilon) << " eta = " << sig6(q.eta) << " bound = " << std::setprecision(12)
       << prokhorov_bound(q) << " n0 = " << n0;
    return os.str();
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    try {
        const ParsedCommand cmd = parse_args(args);
        switch (cmd.subcommand) {
            case Subcommand::Help:
                out << std::get<HelpArgs>(cmd.payload).text;
                break;
            case Subcommand::Simulate: {
                const auto& cfg = std::get<SimConfig>(cmd.payload);
                const auto rounds = play_rounds(cfg);
                if (cfg.details)
                    for (const auto& r : rounds) out << format_details(r) << '\n';
                out << format_summary(tally(cfg, rounds)) << '\n';
                break;
            }
            case Subcommand::Sweep: {
                const auto& sweep = std::get<SweepArgs>(cmd.payload);
                const auto rows = run_sweep(sweep.spec);
                if (sweep.out_path) {
                    std::ofstream file(*sweep.out_path, std::ios::binary);
                    if (!file) throw std::runtime_error("cannot open " + *sweep.out_path + " for writing");
                    write_sweep_csv(file, rows);
                    if (!file) throw std::runtime_error("write to " + *sweep.out_path + " failed");
                } else {
                    write_sweep_csv(out, rows);
                }
                break;
            }
            case Subcommand::Threshold: {
                const auto& t = std::get<ThresholdArgs>(cmd.payload);
                out << format_threshold(find_threshold(t.delta, t.eta, t.rounds, t.seed, t.max_games)) << '\n';
                break;
            }
            case Subcommand::Bound: {
                const auto& q = std::get<BoundArgs>(cmd.payload).query;
                out << format_bound(q, prokhorov_n0(q)) << '\n';
                break;
            }
            case Subcommand::Buffon: {
                const auto& b = std::get<BuffonArgs>(cmd.payload);
                out << format_buffon_report(buffon_preset(b.seed, b.rounds));
                break;
            }
        }
    } catch (const CliError& e) {
        err << e.what() << '\n';
        return e.exit_code();
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace stpete::cli
