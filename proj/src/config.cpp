#include "fanpulse/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include "fanpulse/error.hpp"

namespace fanpulse {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "yes" || value == "1" || value == "on") return true;
    if (value == "false" || value == "no" || value == "0" || value == "off") return false;
    throw Error(ErrorKind::config, key + ": expected a boolean, got '" + value + "'");
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& value) {
    const std::filesystem::path p(value);
    return p.is_absolute() || base.empty() ? p : base / p;
}

}  // namespace

std::optional<OutFormat> parse_out_format(std::string_view name) {
    if (name == "csv") return OutFormat::csv;
    if (name == "json") return OutFormat::json;
    if (name == "md" || name == "markdown") return OutFormat::md;
    return std::nullopt;
}

std::string_view extension_for(OutFormat format) {
    switch (format) {
        case OutFormat::csv: return ".csv";
        case OutFormat::json: return ".json";
        case OutFormat::md: return ".md";
    }
    return ".csv";
}

std::vector<SeriesMode> parse_modes(std::string_view name) {
    if (name == "both") return {SeriesMode::delta, SeriesMode::level};
    if (const auto mode = parse_mode(name)) return {*mode};
    throw Error(ErrorKind::config, "mode must be delta, level or both, got '" + std::string(name) + "'");
}

void apply_setting(RunConfig& config, const std::string& key, const std::string& value,
                   const std::filesystem::path& base_dir) {
    if (key == "tweets") config.tweets = resolve(base_dir, value);
    else if (key == "lexicon") config.lexicon = resolve(base_dir, value);
    else if (key == "stopwords") config.stopwords = resolve(base_dir, value);
    else if (key == "acronyms") config.acronyms = resolve(base_dir, value);
    else if (key == "extraneous") config.extraneous = resolve(base_dir, value);
    else if (key == "players") config.players = resolve(base_dir, value);
    else if (key == "matches") config.matches = resolve(base_dir, value);
    else if (key == "prices") config.prices = resolve(base_dir, value);
    else if (key == "popularity") config.popularity = resolve(base_dir, value);
    else if (key == "out_dir") config.out_dir = resolve(base_dir, value);
    else if (key == "tweets_format") {
        const auto format = parse_tweet_format(value);
        if (!format) throw Error(ErrorKind::config, "tweets_format must be jsonl or csv");
        config.tweets_format = format;
    } else if (key == "window_hours") {
        double hours = 0.0;
        const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), hours);
        if (ec != std::errc() || ptr != value.data() + value.size() || !std::isfinite(hours) ||
            hours <= 0.0) {
            throw Error(ErrorKind::config, "window_hours must be a positive number, got '" + value + "'");
        }
        config.window_hours = hours;
    } else if (key == "mode") {
        config.modes = parse_modes(value);
    } else if (key == "out_format") {
        const auto format = parse_out_format(value);
        if (!format) throw Error(ErrorKind::config, "out_format must be csv, json or md");
        config.out_format = *format;
    } else if (key == "threads") {
        unsigned threads = 0;
        const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), threads);
        if (ec != std::errc() || ptr != value.data() + value.size()) {
            throw Error(ErrorKind::config, "threads must be a non-negative integer");
        }
        config.threads = threads;
    } else if (key == "cluster_mode") {
        if (value == "inclusive") config.cluster_mode = ClusterMode::inclusive;
        else if (value == "exclusive") config.cluster_mode = ClusterMode::exclusive;
        else throw Error(ErrorKind::config, "cluster_mode must be inclusive or exclusive");
    } else if (key == "post_close") {
        if (value == "on-or-after") config.post_rule = PostCloseRule::on_or_after_end_date;
        else if (value == "after") config.post_rule = PostCloseRule::after_end_date;
        else throw Error(ErrorKind::config, "post_close must be on-or-after or after");
    } else if (key == "remove_stopwords") {
        config.remove_stopwords = parse_bool(key, value);
    } else if (key == "deterministic") {
        config.deterministic = parse_bool(key, value);
    } else {
        throw Error(ErrorKind::config, "unknown setting '" + key + "'");
    }
}

RunConfig parse_config(std::istream& source, const std::filesystem::path& base_dir) {
    RunConfig config;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(source, line)) {
        ++line_no;
        const std::string content = trim(line);
        if (content.empty() || content.front() == '#') continue;
        const auto eq = content.find('=');
        if (eq == std::string::npos) throw Error(ErrorKind::config, "expected key = value", line_no);
        const std::string key = trim(std::string_view(content).substr(0, eq));
        const std::string value = trim(std::string_view(content).substr(eq + 1));
        try {
            apply_setting(config, key, value, base_dir);
        } catch (const Error& e) {
            throw Error(e.kind(), e.what(), line_no);
        }
    }
    return config;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::io, "cannot open config " + path.string());
    return parse_config(in, path.parent_path());
}

std::vector<std::pair<std::string, std::filesystem::path>> input_files(const RunConfig& config) {
    std::vector<std::pair<std::string, std::filesystem::path>> files = {
        {"tweets", config.tweets},   {"lexicon", config.lexicon}, {"stopwords", config.stopwords},
        {"players", config.players}, {"matches", config.matches}, {"prices", config.prices},
    };
    if (!config.acronyms.empty()) files.emplace_back("acronyms", config.acronyms);
    if (!config.extraneous.empty()) files.emplace_back("extraneous", config.extraneous);
    if (!config.popularity.empty()) files.emplace_back("popularity", config.popularity);
    if (!config.remove_stopwords && config.stopwords.empty()) {
        files.erase(files.begin() + 2);
    }
    return files;
}

}  // namespace fanpulse
