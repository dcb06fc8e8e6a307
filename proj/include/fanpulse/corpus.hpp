#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fanpulse/timeutil.hpp"

namespace fanpulse {

struct Tweet {
    std::string id;
    Instant created_at;
    std::string text;
    std::optional<std::string> location;

    friend bool operator==(const Tweet&, const Tweet&) = default;
};

enum class TweetFormat { jsonl, csv };

std::optional<TweetFormat> parse_tweet_format(std::string_view name);
// Guesses from the extension: ".csv" is CSV, everything else JSONL.
TweetFormat tweet_format_for(const std::filesystem::path& path);

struct IngestResult {
    std::vector<Tweet> tweets;
    std::size_t records = 0;  // well-formed + malformed, blank lines excluded
    std::size_t skipped = 0;
    std::vector<std::string> problems;  // first few malformed records, with line numbers
};

// Reads one tweet per record in input order. Malformed records (bad JSON or
// CSV, missing/empty id, duplicate id, timestamp without UTC offset, invalid
// UTF-8) are skipped and counted. Throws corpus_rejected when more than half
// of the records are malformed.
IngestResult ingest_tweets(std::istream& source, TweetFormat format);
IngestResult ingest_tweets_file(const std::filesystem::path& path,
                                std::optional<TweetFormat> format = std::nullopt);

enum class Outcome { win, lose };
std::string_view outcome_name(Outcome outcome);

struct MatchEvent {
    std::string label;
    int ordinal = 0;
    Instant start;
    Instant end;
    Outcome outcome = Outcome::win;
    std::optional<double> window_hours;  // per-event override
};

// Matches in ordinal order. Accepts either a top-level array or an object with
// an "events" array; each entry has label, ordinal, start, end, outcome and
// optionally window_hours.
std::vector<MatchEvent> load_schedule(std::istream& source);
std::vector<MatchEvent> load_schedule_file(const std::filesystem::path& path);

inline constexpr double kDefaultWindowHours = 4.0;

enum class Phase { pre, post, outside };
std::string_view phase_name(Phase phase);  // "Pre", "Post", "Outside"

struct WindowAssignment {
    Phase phase = Phase::outside;
    int event_ordinal = 0;

    friend bool operator==(const WindowAssignment&, const WindowAssignment&) = default;
};

// Pre:  created_at in [start - window, start)
// Post: created_at in (end, end + window]
// Outside otherwise, including while the match is in play.
Phase window_phase(Instant created_at, const MatchEvent& event, double window_hours);
WindowAssignment assign_window(const Tweet& tweet, const MatchEvent& event, double window_hours);

// The event's own override when present, otherwise `fallback`.
double effective_window_hours(const MatchEvent& event, double fallback);

}  // namespace fanpulse
