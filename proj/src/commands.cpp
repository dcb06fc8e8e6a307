#include "fanpulse/commands.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fanpulse/analysis.hpp"
#include "fanpulse/config.hpp"
#include "fanpulse/error.hpp"
#include "fanpulse/parallel.hpp"
#include "fanpulse/report.hpp"

namespace fanpulse {

namespace {

struct Overrides {
    std::string config_path;
    std::optional<std::string> window_hours;
    std::optional<std::string> mode;
    std::optional<std::string> out_format;
    std::optional<std::string> out_dir;
    std::optional<std::string> threads;
    std::optional<std::string> post_close;
    bool exclusive = false;
    bool deterministic = false;
};

struct Inputs {
    std::vector<Tweet> tweets;
    Lexicon lexicon;
    CleaningRules rules;
    std::vector<PlayerProfile> players;
    std::vector<MatchEvent> events;
    std::map<std::string, PriceSeries> prices;
    std::map<std::string, PopularitySeries> popularity;
};

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::io, "cannot open " + path.string());
    return in;
}

CleaningRules load_rules(const RunConfig& config) {
    CleaningRules rules;
    rules.remove_stopwords = config.remove_stopwords;
    if (!config.stopwords.empty()) {
        auto in = open_input(config.stopwords);
        rules.stopwords = load_stopwords(in);
    }
    if (!config.acronyms.empty()) {
        auto in = open_input(config.acronyms);
        rules.acronyms = load_acronyms(in);
    }
    if (!config.extraneous.empty()) {
        auto in = open_input(config.extraneous);
        rules.extraneous_patterns = load_patterns(in);
    }
    validate_rules(rules);
    return rules;
}

// Checks one input file by running its loader; returns the problem, if any.
std::optional<std::string> check_file(const std::string& role, const std::filesystem::path& path,
                                      const RunConfig& config) {
    try {
        if (!std::filesystem::exists(path)) return "file not found";
        if (role == "tweets") {
            const auto result = ingest_tweets_file(path, config.tweets_format);
            if (result.skipped > 0) {
                std::string detail = std::to_string(result.skipped) + " of " + std::to_string(result.records) +
                                     " records malformed";
                for (const auto& p : result.problems) detail += "\n    " + p;
                return detail;
            }
        } else if (role == "lexicon") {
            Lexicon::load_file(path);
        } else if (role == "stopwords") {
            auto in = open_input(path);
            load_stopwords(in);
        } else if (role == "acronyms") {
            auto in = open_input(path);
            load_acronyms(in);
        } else if (role == "extraneous") {
            auto in = open_input(path);
            load_patterns(in);
        } else if (role == "players") {
            ClusterIndex::build(load_players_file(path));
        } else if (role == "matches") {
            load_schedule_file(path);
        } else if (role == "prices") {
            load_price_table_file(path);
        } else if (role == "popularity") {
            load_popularity_table_file(path);
        }
    } catch (const Error& e) {
        return std::string(error_kind_name(e.kind())) + ": " + e.what();
    } catch (const std::exception& e) {
        return e.what();
    }
    return std::nullopt;
}

Inputs load_inputs(const RunConfig& config, bool need_prices, std::ostream& err) {
    for (const auto& [role, path] : input_files(config)) {
        if ((role == "prices" || role == "popularity") && !need_prices) continue;
        if (!std::filesystem::exists(path)) throw Error(ErrorKind::io, role + " file not found: " + path.string());
    }
    Inputs inputs;
    auto ingest = ingest_tweets_file(config.tweets, config.tweets_format);
    if (ingest.skipped > 0) {
        err << "tweets: skipped " << ingest.skipped << " of " << ingest.records << " records\n";
    }
    inputs.tweets = std::move(ingest.tweets);
    inputs.lexicon = Lexicon::load_file(config.lexicon);
    for (const auto& w : inputs.lexicon.warnings()) err << "lexicon: " << w << "\n";
    inputs.rules = load_rules(config);
    inputs.players = load_players_file(config.players);
    inputs.events = load_schedule_file(config.matches);
    if (need_prices) {
        inputs.prices = load_price_table_file(config.prices);
        if (!config.popularity.empty()) inputs.popularity = load_popularity_table_file(config.popularity);
    }
    return inputs;
}

std::optional<std::string> timestamp(const RunConfig& config) {
    if (config.deterministic) return std::nullopt;
    return format_instant(std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now()));
}

void write_files(const RunConfig& config, const std::vector<RenderedFile>& files, std::ostream& out) {
    std::error_code ec;
    std::filesystem::create_directories(config.out_dir, ec);
    if (ec) throw Error(ErrorKind::io, "cannot create " + config.out_dir.string() + ": " + ec.message());
    for (const auto& file : files) {
        const auto path = config.out_dir / file.name;
        std::ofstream os(path, std::ios::binary | std::ios::trunc);
        os << file.content;
        os.close();
        if (!os) throw Error(ErrorKind::io, "cannot write " + path.string());
        out << "wrote " << path.string() << "\n";
    }
}

ScoreOptions score_options(const RunConfig& config) {
    return {config.window_hours, config.cluster_mode, resolve_threads(config.threads)};
}

CorrelateOptions correlate_options(const RunConfig& config) {
    return {config.modes, config.post_rule, resolve_threads(config.threads)};
}

int cmd_validate(const RunConfig& config, std::ostream& out) {
    bool ok = true;
    for (const auto& [role, path] : input_files(config)) {
        const auto problem = check_file(role, path, config);
        if (problem) {
            ok = false;
            out << "FAIL " << role << " " << path.string() << ": " << *problem << "\n";
        } else {
            out << "ok   " << role << " " << path.string() << "\n";
        }
    }
    try {
        CleaningRules rules;
        rules.remove_stopwords = config.remove_stopwords;
        if (!config.stopwords.empty() && std::filesystem::exists(config.stopwords)) rules = load_rules(config);
        validate_rules(rules);
    } catch (const Error& e) {
        ok = false;
        out << "FAIL rules: " << e.what() << "\n";
    }
    return ok ? exit_ok : exit_validation;
}

enum class Command { score, correlate, report };

int run_pipeline(Command command, const RunConfig& config, std::ostream& out, std::ostream& err) {
    Inputs inputs;
    try {
        inputs = load_inputs(config, command != Command::score, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_validation;
    }
    try {
        const ReportContext ctx{inputs.players, inputs.events, timestamp(config)};
        if (command == Command::score) {
            const auto scores = score_corpus(inputs.tweets, inputs.lexicon, inputs.rules, inputs.players,
                                             inputs.events, score_options(config));
            write_files(config, render_score_outputs(scores, ctx, config.out_format), out);
            return exit_ok;
        }
        const auto result = eekd(inputs.tweets, inputs.lexicon, inputs.rules, inputs.players, inputs.events,
                                 inputs.prices, score_options(config), correlate_options(config));
        if (command == Command::correlate) {
            write_files(config, render_correlate_outputs(result, ctx, config.modes, config.out_format), out);
        } else {
            write_files(config,
                        render_report_bundle(result, ctx, config.modes, inputs.popularity, config.out_format), out);
        }
        return exit_ok;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_runtime;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_runtime;
    }
}

void add_common_options(CLI::App& sub, Overrides& o) {
    sub.add_option("-c,--config", o.config_path, "run configuration file")->required();
    sub.add_option("--window-hours", o.window_hours, "pre/post window length in hours");
    sub.add_option("--mode", o.mode, "delta, level or both");
    sub.add_option("--out-format", o.out_format, "csv, json or md");
    sub.add_option("--out-dir", o.out_dir, "output directory");
    sub.add_option("--threads", o.threads, "worker threads, 0 for all cores");
    sub.add_option("--post-close", o.post_close, "on-or-after or after the event end date");
    sub.add_flag("--exclusive", o.exclusive, "drop tweets matching more than one player");
    sub.add_flag("--deterministic", o.deterministic, "omit the generation timestamp");
}

RunConfig build_config(const Overrides& o) {
    RunConfig config = load_config(o.config_path);
    const std::filesystem::path cwd;
    if (o.window_hours) apply_setting(config, "window_hours", *o.window_hours, cwd);
    if (o.mode) apply_setting(config, "mode", *o.mode, cwd);
    if (o.out_format) apply_setting(config, "out_format", *o.out_format, cwd);
    if (o.out_dir) apply_setting(config, "out_dir", *o.out_dir, cwd);
    if (o.threads) apply_setting(config, "threads", *o.threads, cwd);
    if (o.post_close) apply_setting(config, "post_close", *o.post_close, cwd);
    if (o.exclusive) config.cluster_mode = ClusterMode::exclusive;
    if (o.deterministic) config.deterministic = true;
    if (const char* env = std::getenv("FANPULSE_THREADS"); env && *env) {
        apply_setting(config, "threads", env, cwd);
    }
    return config;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fan emotion and brand value analysis", "fanpulse"};
    app.require_subcommand(1);
    Overrides o;
    auto* validate = app.add_subcommand("validate", "check every input file");
    auto* score = app.add_subcommand("score", "write emotion profiles and tweet counts");
    auto* correlate = app.add_subcommand("correlate", "write per-brand correlations");
    auto* report = app.add_subcommand("report", "write the full table bundle");
    for (auto* sub : {validate, score, correlate, report}) add_common_options(*sub, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return exit_usage;
    }

    RunConfig config;
    try {
        config = build_config(o);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    if (validate->parsed()) return cmd_validate(config, out);
    if (score->parsed()) return run_pipeline(Command::score, config, out, err);
    if (correlate->parsed()) return run_pipeline(Command::correlate, config, out, err);
    return run_pipeline(Command::report, config, out, err);
}

}  // namespace fanpulse
