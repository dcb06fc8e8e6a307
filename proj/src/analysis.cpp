#include "fanpulse/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "fanpulse/error.hpp"
#include "fanpulse/parallel.hpp"

namespace fanpulse {

namespace {

constexpr double kClampSlack = 1e-12;

std::string event_name(int ordinal) { return "M" + std::to_string(ordinal); }

}  // namespace

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw Error(ErrorKind::usage, "pearson: series lengths differ (" + std::to_string(x.size()) +
                                          " vs " + std::to_string(y.size()) + ")");
    }
    if (x.size() < 2) throw Error(ErrorKind::usage, "pearson: need at least two samples");
    const auto finite = [](double v) { return std::isfinite(v); };
    if (!std::all_of(x.begin(), x.end(), finite) || !std::all_of(y.begin(), y.end(), finite)) {
        throw Error(ErrorKind::usage, "pearson: non-finite sample");
    }
    const auto constant = [](std::span<const double> s) {
        return std::all_of(s.begin(), s.end(), [&](double v) { return v == s.front(); });
    };
    if (constant(x) || constant(y)) {
        throw Error(ErrorKind::undefined_correlation, "pearson: zero variance");
    }

    const auto n = static_cast<double>(x.size());
    double sum_x = 0.0, sum_y = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sum_x += x[i];
        sum_y += y[i];
    }
    const double mean_x = sum_x / n;
    const double mean_y = sum_y / n;

    // Two-pass with the usual correction for rounding in the means.
    double dx_sum = 0.0, dy_sum = 0.0, sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mean_x;
        const double dy = y[i] - mean_y;
        dx_sum += dx;
        dy_sum += dy;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    sxx -= dx_sum * dx_sum / n;
    syy -= dy_sum * dy_sum / n;
    sxy -= dx_sum * dy_sum / n;
    if (!(sxx > 0.0) || !(syy > 0.0)) {
        throw Error(ErrorKind::undefined_correlation, "pearson: zero variance");
    }

    double r = sxy / (std::sqrt(sxx) * std::sqrt(syy));
    if (std::abs(r - 1.0) <= kClampSlack) r = 1.0;
    if (std::abs(r + 1.0) <= kClampSlack) r = -1.0;
    return r;
}

double pearson(const SampleSeries& x, const SampleSeries& y) { return pearson(x.values, y.values); }

std::string_view mode_name(SeriesMode mode) { return mode == SeriesMode::delta ? "delta" : "level"; }

std::optional<SeriesMode> parse_mode(std::string_view name) {
    if (name == "delta") return SeriesMode::delta;
    if (name == "level") return SeriesMode::level;
    return std::nullopt;
}

SeriesPair build_series(const PlayerEmotions& emotions, const AlignedPrices& aligned,
                        EmotionCategory category, SeriesMode mode) {
    std::vector<int> events;
    for (const auto& [ordinal, pair] : aligned.by_event) events.push_back(ordinal);
    for (const auto& [ordinal, profile] : emotions.pre) events.push_back(ordinal);
    for (const auto& [ordinal, profile] : emotions.post) events.push_back(ordinal);
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());
    if (events.size() < 2) {
        throw Error(ErrorKind::usage, "need at least two events to correlate, have " +
                                          std::to_string(events.size()));
    }

    const std::string who = emotions.acronym;
    const auto profile_for = [&](const std::map<int, EmotionProfile>& side, int ordinal,
                                 const char* phase) -> const EmotionProfile& {
        const auto it = side.find(ordinal);
        if (it == side.end()) {
            throw Error(ErrorKind::join, who + " has no " + phase + " profile for " + event_name(ordinal));
        }
        const bool empty = is_sentiment(category) ? it->second.props.sentiments_empty
                                                  : it->second.props.emotions_empty;
        if (empty) {
            throw Error(ErrorKind::join, who + " " + event_name(ordinal) + " " + phase +
                                             " has no " +
                                             (is_sentiment(category) ? "sentiment" : "emotion") +
                                             " words");
        }
        return it->second;
    };

    SeriesPair out;
    out.events = events;
    out.x.label = who + ":" + std::string(category_name(category)) + ":" + std::string(mode_name(mode));
    out.y.label = aligned.symbol + ":close:" + std::string(mode_name(mode));
    for (const int ordinal : events) {
        const auto price = aligned.by_event.find(ordinal);
        if (price == aligned.by_event.end()) {
            throw Error(ErrorKind::join, aligned.symbol + " has no aligned prices for " + event_name(ordinal));
        }
        const double pre = profile_for(emotions.pre, ordinal, "Pre").props.of(category);
        const double post = profile_for(emotions.post, ordinal, "Post").props.of(category);
        if (mode == SeriesMode::delta) {
            out.x.values.push_back(post - pre);
            out.y.values.push_back(price->second.post_close() - price->second.pre_close());
        } else {
            out.x.values.push_back(pre);
            out.x.values.push_back(post);
            out.y.values.push_back(price->second.pre_close());
            out.y.values.push_back(price->second.post_close());
        }
    }
    return out;
}

ScoreResult score_corpus(std::span<const Tweet> tweets, const Lexicon& lexicon,
                         const CleaningRules& rules, const std::vector<PlayerProfile>& players,
                         const std::vector<MatchEvent>& events, const ScoreOptions& options) {
    if (!(options.window_hours > 0.0) || !std::isfinite(options.window_hours)) {
        throw Error(ErrorKind::usage, "window_hours must be positive");
    }
    const ClusterIndex index = ClusterIndex::build(players);

    ScoreResult result;
    result.diagnostics.tweets_in = tweets.size();
    for (const auto& event : events) result.event_counts[event.ordinal];
    for (const auto& tweet : tweets) {
        for (const auto& event : events) {
            const Phase phase =
                window_phase(tweet.created_at, event, effective_window_hours(event, options.window_hours));
            if (phase == Phase::pre) ++result.event_counts[event.ordinal].pre;
            if (phase == Phase::post) ++result.event_counts[event.ordinal].post;
        }
    }

    const PreprocessResult cleaned = pre_process(tweets, rules, options.threads);
    result.diagnostics.dropped_empty = cleaned.dropped;

    struct PerTweet {
        std::vector<ScoredTweet> scored;
        bool outside = false;
        bool unclustered = false;
        bool multi = false;
        bool excluded = false;
    };
    std::vector<PerTweet> per_tweet(cleaned.kept.size());
    for_each_chunk(cleaned.kept.size(), options.threads,
                   [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const CleanTweet& clean = cleaned.kept[i];
            PerTweet& out = per_tweet[i];
            std::vector<std::pair<int, Phase>> windows;
            for (const auto& event : events) {
                const Phase phase = window_phase(clean.tweet.created_at, event,
                                                 effective_window_hours(event, options.window_hours));
                if (phase != Phase::outside) windows.emplace_back(event.ordinal, phase);
            }
            if (windows.empty()) {
                out.outside = true;
                continue;
            }
            std::set<std::string> clusters =
                assign_clusters(clean.bag, clean.tweet.text, index, ClusterMode::inclusive);
            out.multi = clusters.size() > 1;
            if (out.multi && options.cluster_mode == ClusterMode::exclusive) {
                out.excluded = true;
                continue;
            }
            if (clusters.empty()) {
                out.unclustered = true;
                continue;
            }
            const EmotionVector score = score_bag(clean.bag, lexicon);
            for (const auto& [ordinal, phase] : windows) {
                out.scored.push_back(ScoredTweet{clusters, ordinal, phase, score});
            }
        }
    });

    std::vector<ScoredTweet> scored;
    for (auto& t : per_tweet) {
        Diagnostics& d = result.diagnostics;
        d.outside_windows += t.outside;
        d.unclustered += t.unclustered;
        d.multi_cluster += t.multi;
        d.excluded_multi += t.excluded;
        d.window_assignments += t.scored.size();
        for (auto& s : t.scored) scored.push_back(std::move(s));
    }

    const Aggregate totals = aggregate(scored, options.threads);
    for (const auto& player : players) {
        for (const auto& event : events) {
            for (const Phase phase : {Phase::pre, Phase::post}) {
                const ProfileKey key{player.acronym, event.ordinal, phase};
                const auto it = totals.find(key);
                result.profiles.push_back(make_profile(key, it == totals.end() ? Tally{} : it->second));
            }
        }
    }
    return result;
}

PlayerEmotions player_emotions(const std::vector<EmotionProfile>& profiles, std::string_view acronym) {
    PlayerEmotions out;
    out.acronym = std::string(acronym);
    for (const auto& profile : profiles) {
        if (profile.acronym != acronym) continue;
        if (profile.phase == Phase::pre) out.pre[profile.event_ordinal] = profile;
        if (profile.phase == Phase::post) out.post[profile.event_ordinal] = profile;
    }
    return out;
}

const CorrelationCell* BrandReport::cell(EmotionCategory category, SeriesMode mode) const {
    for (const auto& c : cells) {
        if (c.category == category && c.mode == mode) return &c;
    }
    return nullptr;
}

std::vector<PlayerReport> correlate(const std::vector<EmotionProfile>& profiles,
                                    const std::vector<PlayerProfile>& players,
                                    const std::vector<MatchEvent>& events,
                                    const std::map<std::string, PriceSeries>& prices,
                                    const CorrelateOptions& options) {
    std::vector<PlayerReport> reports;
    std::vector<PlayerEmotions> emotions;
    for (const auto& player : players) {
        PlayerReport report;
        report.acronym = player.acronym;
        report.name = player.name;
        PlayerEmotions pe = player_emotions(profiles, player.acronym);
        const auto has_tweets = [](const auto& side) {
            return std::any_of(side.begin(), side.end(),
                               [](const auto& kv) { return kv.second.tweet_count > 0; });
        };
        report.insufficient_data = !has_tweets(pe.pre) && !has_tweets(pe.post);

        for (const auto& symbol : player.brands) {
            BrandReport brand;
            brand.symbol = symbol;
            const auto series = prices.find(symbol);
            if (series == prices.end()) {
                brand.alignment_error = "no price series for " + symbol;
            } else {
                try {
                    AlignedPrices aligned{symbol, {}};
                    for (const auto& event : events) {
                        aligned.by_event[event.ordinal] = align(series->second, event, options.post_rule);
                    }
                    brand.aligned = std::move(aligned);
                } catch (const Error& e) {
                    brand.alignment_error = e.what();
                }
            }
            for (const EmotionCategory category : kAllCategories) {
                for (const SeriesMode mode : options.modes) {
                    CorrelationCell cell;
                    cell.category = category;
                    cell.mode = mode;
                    brand.cells.push_back(std::move(cell));
                }
            }
            report.brands.push_back(std::move(brand));
        }
        reports.push_back(std::move(report));
        emotions.push_back(std::move(pe));
    }

    struct Task {
        std::size_t player;
        std::size_t brand;
        std::size_t cell;
    };
    std::vector<Task> tasks;
    for (std::size_t p = 0; p < reports.size(); ++p) {
        for (std::size_t b = 0; b < reports[p].brands.size(); ++b) {
            for (std::size_t c = 0; c < reports[p].brands[b].cells.size(); ++c) tasks.push_back({p, b, c});
        }
    }
    for_each_chunk(tasks.size(), options.threads, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t t = begin; t < end; ++t) {
            const Task& task = tasks[t];
            const PlayerReport& report = reports[task.player];
            BrandReport& brand = reports[task.player].brands[task.brand];
            CorrelationCell& cell = brand.cells[task.cell];
            if (report.insufficient_data) {
                cell.note = "insufficient data";
                continue;
            }
            if (!brand.aligned) {
                cell.note = "n/a (no aligned prices)";
                continue;
            }
            try {
                cell.inputs = build_series(emotions[task.player], *brand.aligned, cell.category, cell.mode);
                cell.n = cell.inputs.x.values.size();
                cell.r = pearson(cell.inputs.x, cell.inputs.y);
            } catch (const Error& e) {
                switch (e.kind()) {
                    case ErrorKind::undefined_correlation: cell.note = "n/a (zero variance)"; break;
                    case ErrorKind::join: cell.note = std::string("insufficient data: ") + e.what(); break;
                    default: cell.note = std::string("n/a (") + e.what() + ")"; break;
                }
            }
        }
    });
    return reports;
}

EekdResult eekd(std::span<const Tweet> tweets, const Lexicon& lexicon, const CleaningRules& rules,
                const std::vector<PlayerProfile>& players, const std::vector<MatchEvent>& events,
                const std::map<std::string, PriceSeries>& prices, const ScoreOptions& score_options,
                const CorrelateOptions& correlate_options) {
    EekdResult result;
    try {
        result.scores = score_corpus(tweets, lexicon, rules, players, events, score_options);
    } catch (const Error& e) {
        throw e.with_stage("score");
    }
    try {
        result.reports = correlate(result.scores.profiles, players, events, prices, correlate_options);
    } catch (const Error& e) {
        throw e.with_stage("correlate");
    }
    return result;
}

}  // namespace fanpulse
