#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fanpulse/analysis.hpp"
#include "fanpulse/config.hpp"
#include "fanpulse/market.hpp"

namespace fanpulse {

// Decimal rounding, half away from zero, applied to the shortest round-trip
// representation of `value` (so 0.12345 renders as 0.1235).
std::string format_fixed(double value, int places = 4);
// Shortest representation that reads back to the same double.
std::string format_exact(double value);

struct ReportContext {
    const std::vector<PlayerProfile>& players;
    const std::vector<MatchEvent>& events;
    std::optional<std::string> generated_at;  // omitted from output when empty
};

// A file to write under the output directory.
struct RenderedFile {
    std::string name;
    std::string content;
};

// Per (player, event, phase) emotion profiles.
std::string render_profiles(const ScoreResult& scores, const ReportContext& ctx, OutFormat format);
// Pre/Post tweet counts per player and match.
std::string render_tweet_counts(const ScoreResult& scores, const ReportContext& ctx, OutFormat format);
// Tweets per match window.
std::string render_match_stats(const ScoreResult& scores, const ReportContext& ctx, OutFormat format);
// Positive/negative proportions per player, match and phase.
std::string render_sentiments(const ScoreResult& scores, const ReportContext& ctx, OutFormat format);
// Correlation cells; markdown lays out trust rows above brand price rows.
std::string render_correlations(const EekdResult& result, const ReportContext& ctx,
                                const std::vector<SeriesMode>& modes, OutFormat format);
// r for every category, one row per player and brand.
std::string render_correlation_matrix(const std::vector<PlayerReport>& reports, const ReportContext& ctx,
                                      const std::vector<SeriesMode>& modes, OutFormat format);
// Popularity value on each match day.
std::string render_popularity(const std::map<std::string, PopularitySeries>& popularity,
                              const ReportContext& ctx, OutFormat format);

std::vector<RenderedFile> render_score_outputs(const ScoreResult& scores, const ReportContext& ctx,
                                               OutFormat format);
std::vector<RenderedFile> render_correlate_outputs(const EekdResult& result, const ReportContext& ctx,
                                                   const std::vector<SeriesMode>& modes, OutFormat format);
std::vector<RenderedFile> render_report_bundle(const EekdResult& result, const ReportContext& ctx,
                                               const std::vector<SeriesMode>& modes,
                                               const std::map<std::string, PopularitySeries>& popularity,
                                               OutFormat format);

}  // namespace fanpulse
