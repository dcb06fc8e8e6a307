#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "fanpulse/analysis.hpp"
#include "fanpulse/cluster.hpp"
#include "fanpulse/corpus.hpp"
#include "fanpulse/market.hpp"

namespace fanpulse {

enum class OutFormat { csv, json, md };
std::optional<OutFormat> parse_out_format(std::string_view name);
std::string_view extension_for(OutFormat format);

struct RunConfig {
    std::filesystem::path tweets;
    std::optional<TweetFormat> tweets_format;  // guessed from the extension when unset
    std::filesystem::path lexicon;
    std::filesystem::path stopwords;
    std::filesystem::path acronyms;     // optional
    std::filesystem::path extraneous;   // optional
    std::filesystem::path players;
    std::filesystem::path matches;
    std::filesystem::path prices;
    std::filesystem::path popularity;   // optional

    double window_hours = kDefaultWindowHours;
    std::vector<SeriesMode> modes{SeriesMode::delta};
    OutFormat out_format = OutFormat::csv;
    std::filesystem::path out_dir = "out";
    unsigned threads = 0;  // 0: available parallelism
    ClusterMode cluster_mode = ClusterMode::inclusive;
    PostCloseRule post_rule = PostCloseRule::on_or_after_end_date;
    bool remove_stopwords = true;
    bool deterministic = false;
};

// `key = value` lines, '#' comments. Relative paths resolve against the
// config file's directory. Unknown keys and bad values are config errors.
RunConfig parse_config(std::istream& source, const std::filesystem::path& base_dir);
RunConfig load_config(const std::filesystem::path& path);

// Applies one key/value pair; used for both the file and flag overrides.
void apply_setting(RunConfig& config, const std::string& key, const std::string& value,
                   const std::filesystem::path& base_dir);

std::vector<SeriesMode> parse_modes(std::string_view name);  // delta | level | both

// Paths that must exist, as (role, path) pairs, optional ones only when set.
std::vector<std::pair<std::string, std::filesystem::path>> input_files(const RunConfig& config);

}  // namespace fanpulse
