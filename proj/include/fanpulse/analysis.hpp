#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fanpulse/cluster.hpp"
#include "fanpulse/corpus.hpp"
#include "fanpulse/emotion.hpp"
#include "fanpulse/lexicon.hpp"
#include "fanpulse/market.hpp"
#include "fanpulse/preprocess.hpp"

namespace fanpulse {

struct SampleSeries {
    std::string label;
    std::vector<double> values;
};

// Sample Pearson correlation, accumulated on mean-centred values. Usage error
// on a length mismatch, fewer than two samples or non-finite input;
// undefined_correlation when either series has zero variance.
double pearson(std::span<const double> x, std::span<const double> y);
double pearson(const SampleSeries& x, const SampleSeries& y);

enum class SeriesMode { delta, level };
std::string_view mode_name(SeriesMode mode);
std::optional<SeriesMode> parse_mode(std::string_view name);

// One player's profiles, keyed by event ordinal.
struct PlayerEmotions {
    std::string acronym;
    std::map<int, EmotionProfile> pre;
    std::map<int, EmotionProfile> post;
};

struct SeriesPair {
    SampleSeries x;         // emotion proportions (or their deltas)
    SampleSeries y;         // closes (or their deltas)
    std::vector<int> events;
};

// delta: x_k = post - pre proportion of `category`, y_k = post - pre close.
// level: (pre, post) pairs per event, concatenated in event order.
// Join error naming the event when a profile or aligned price is missing or
// the profile's category block is empty; usage error for fewer than two events.
SeriesPair build_series(const PlayerEmotions& emotions, const AlignedPrices& aligned,
                        EmotionCategory category, SeriesMode mode);

struct Diagnostics {
    std::size_t tweets_in = 0;
    std::size_t dropped_empty = 0;     // no tokens left after cleaning
    std::size_t outside_windows = 0;   // clean tweets in no pre/post window
    std::size_t unclustered = 0;       // in a window but matched no player
    std::size_t multi_cluster = 0;     // matched more than one player
    std::size_t excluded_multi = 0;    // dropped by exclusive clustering
    std::size_t window_assignments = 0;
};

struct EventTweetCount {
    std::uint64_t pre = 0;
    std::uint64_t post = 0;
};

struct ScoreOptions {
    double window_hours = kDefaultWindowHours;
    ClusterMode cluster_mode = ClusterMode::inclusive;
    unsigned threads = 1;
};

struct ScoreResult {
    // Full player x event x {Pre, Post} grid in player-config order; cells
    // without tweets carry zero counts and empty flags.
    std::vector<EmotionProfile> profiles;
    std::map<int, EventTweetCount> event_counts;  // raw tweets per window
    Diagnostics diagnostics;
};

// Algorithm stages up to normalisation: clean, cluster, window, score,
// aggregate.
ScoreResult score_corpus(std::span<const Tweet> tweets, const Lexicon& lexicon,
                         const CleaningRules& rules, const std::vector<PlayerProfile>& players,
                         const std::vector<MatchEvent>& events, const ScoreOptions& options);

PlayerEmotions player_emotions(const std::vector<EmotionProfile>& profiles, std::string_view acronym);

struct CorrelationCell {
    EmotionCategory category = EmotionCategory::trust;
    SeriesMode mode = SeriesMode::delta;
    std::optional<double> r;
    std::string note;  // why r is missing
    std::size_t n = 0;
    SeriesPair inputs;
};

struct BrandReport {
    std::string symbol;
    std::optional<AlignedPrices> aligned;
    std::string alignment_error;
    std::vector<CorrelationCell> cells;  // category-major, then mode

    const CorrelationCell* cell(EmotionCategory category, SeriesMode mode) const;
};

struct PlayerReport {
    std::string acronym;
    std::string name;
    bool insufficient_data = false;
    std::vector<BrandReport> brands;
};

struct CorrelateOptions {
    std::vector<SeriesMode> modes{SeriesMode::delta};
    PostCloseRule post_rule = PostCloseRule::on_or_after_end_date;
    unsigned threads = 1;
};

std::vector<PlayerReport> correlate(const std::vector<EmotionProfile>& profiles,
                                    const std::vector<PlayerProfile>& players,
                                    const std::vector<MatchEvent>& events,
                                    const std::map<std::string, PriceSeries>& prices,
                                    const CorrelateOptions& options);

struct EekdResult {
    ScoreResult scores;
    std::vector<PlayerReport> reports;
};

// Whole pipeline. Module errors are rethrown tagged with the failing stage.
EekdResult eekd(std::span<const Tweet> tweets, const Lexicon& lexicon, const CleaningRules& rules,
                const std::vector<PlayerProfile>& players, const std::vector<MatchEvent>& events,
                const std::map<std::string, PriceSeries>& prices, const ScoreOptions& score_options,
                const CorrelateOptions& correlate_options);

}  // namespace fanpulse
