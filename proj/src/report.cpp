#include "fanpulse/report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "fanpulse/csv.hpp"

namespace fanpulse {

namespace {

using ojson = nlohmann::ordered_json;

constexpr std::array<Phase, 2> kPhases = {Phase::pre, Phase::post};

std::string event_tag(int ordinal) { return "M" + std::to_string(ordinal); }

const EmotionProfile* find_profile(const ScoreResult& scores, const std::string& acronym, int ordinal,
                                   Phase phase) {
    for (const auto& p : scores.profiles) {
        if (p.acronym == acronym && p.event_ordinal == ordinal && p.phase == phase) return &p;
    }
    return nullptr;
}

// "M1:81:Win" as in the emotion tables.
std::string match_score_label(const PlayerProfile& player, const MatchEvent& event) {
    const auto perf = player.performance.find(event.ordinal);
    const std::string score = perf == player.performance.end() ? "NA" : perf->second;
    return event_tag(event.ordinal) + ":" + score + ":" + std::string(outcome_name(event.outcome));
}

std::string md_row(const std::vector<std::string>& cells) {
    std::string out = "|";
    for (const auto& c : cells) out += " " + c + " |";
    return out + "\n";
}

std::string md_rule(std::size_t columns) {
    std::string out = "|";
    for (std::size_t i = 0; i < columns; ++i) out += " --- |";
    return out + "\n";
}

std::string md_header(std::optional<std::string> generated_at, const std::string& title) {
    std::string out;
    if (generated_at) out += "<!-- generated " + *generated_at + " -->\n";
    return out + "# " + title + "\n\n";
}

std::string dump(ojson doc, const ReportContext& ctx) {
    if (ctx.generated_at) {
        ojson wrapped;
        wrapped["generated_at"] = *ctx.generated_at;
        for (auto& [k, v] : doc.items()) wrapped[k] = v;
        doc = std::move(wrapped);
    }
    return doc.dump(2) + "\n";
}

std::string capitalized(std::string_view s) {
    std::string out(s);
    if (!out.empty() && out[0] >= 'a' && out[0] <= 'z') out[0] = static_cast<char>(out[0] - 'a' + 'A');
    return out;
}

std::string r_text(const CorrelationCell& cell) {
    return cell.r ? format_fixed(*cell.r) : cell.note;
}

std::string join_exact(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out.push_back(';');
        out += format_exact(values[i]);
    }
    return out;
}

ojson profile_json(const EmotionProfile& p, const ReportContext& ctx) {
    ojson raw = ojson::object(), props = ojson::object();
    const auto all = p.props.all();
    for (const EmotionCategory c : kAllCategories) {
        raw[std::string(category_name(c))] = p.raw[c];
        props[std::string(category_name(c))] = all[index_of(c)];
    }
    ojson row;
    row["acronym"] = p.acronym;
    row["event"] = event_tag(p.event_ordinal);
    for (const auto& e : ctx.events) {
        if (e.ordinal == p.event_ordinal) row["label"] = e.label;
    }
    row["phase"] = std::string(phase_name(p.phase));
    row["raw"] = raw;
    row["proportions"] = props;
    row["tweet_count"] = p.tweet_count;
    row["emotions_empty"] = p.props.emotions_empty;
    row["sentiments_empty"] = p.props.sentiments_empty;
    return row;
}

std::string emotion_tables_md(const ScoreResult& scores, const ReportContext& ctx) {
    std::string out;
    std::vector<std::string> header = {"Name", "Match No.: Score", "Emo"};
    for (std::size_t i = 0; i < kEmotionCount; ++i) header.push_back(capitalized(category_name(kAllCategories[i])));
    header.push_back("Tweets");
    out += md_row(header) + md_rule(header.size());
    for (const auto& player : ctx.players) {
        bool first_row = true;
        for (const auto& event : ctx.events) {
            for (const Phase phase : kPhases) {
                const EmotionProfile* p = find_profile(scores, player.acronym, event.ordinal, phase);
                std::vector<std::string> row = {first_row ? player.acronym : "",
                                                phase == Phase::pre ? match_score_label(player, event) : "",
                                                std::string(phase_name(phase))};
                for (std::size_t i = 0; i < kEmotionCount; ++i) {
                    row.push_back(p && !p->props.emotions_empty ? format_fixed(p->props.emotions[i]) : "empty");
                }
                row.push_back(p ? std::to_string(p->tweet_count) : "0");
                out += md_row(row);
                first_row = false;
            }
        }
    }
    return out;
}

std::string tweet_counts_md(const ScoreResult& scores, const ReportContext& ctx) {
    std::vector<std::string> header = {"Name", "Tweets"};
    for (const auto& e : ctx.events) header.push_back(e.label + " (" + event_tag(e.ordinal) + ")");
    std::string out = md_row(header) + md_rule(header.size());
    for (const auto& player : ctx.players) {
        for (const Phase phase : kPhases) {
            std::vector<std::string> row = {
                phase == Phase::pre ? player.name + " (" + player.acronym + ")" : "",
                std::string(phase_name(phase))};
            for (const auto& e : ctx.events) {
                const EmotionProfile* p = find_profile(scores, player.acronym, e.ordinal, phase);
                row.push_back(std::to_string(p ? p->tweet_count : 0));
            }
            out += md_row(row);
        }
    }
    return out;
}

std::string match_stats_md(const ScoreResult& scores, const ReportContext& ctx) {
    std::string out = md_row({"Date", "Match", "Outcome", "Pre", "Post", "No. of Tweets"}) + md_rule(6);
    for (const auto& e : ctx.events) {
        const auto it = scores.event_counts.find(e.ordinal);
        const EventTweetCount counts = it == scores.event_counts.end() ? EventTweetCount{} : it->second;
        out += md_row({format_date(date_of(e.start)), e.label, std::string(outcome_name(e.outcome)),
                       std::to_string(counts.pre), std::to_string(counts.post),
                       std::to_string(counts.pre + counts.post)});
    }
    return out;
}

std::string sentiment_md(const ScoreResult& scores, const ReportContext& ctx) {
    std::vector<std::string> header = {"Name", "Sentiment"};
    for (const auto& e : ctx.events) {
        header.push_back(event_tag(e.ordinal) + " Pre");
        header.push_back(event_tag(e.ordinal) + " Post");
    }
    std::string out = md_row(header) + md_rule(header.size());
    for (const auto& player : ctx.players) {
        for (std::size_t s = kSentimentCount; s-- > 0;) {  // positive row first
            std::vector<std::string> row = {s == 1 ? player.acronym : "", s == 1 ? "(+ve)" : "(-ve)"};
            for (const auto& e : ctx.events) {
                for (const Phase phase : kPhases) {
                    const EmotionProfile* p = find_profile(scores, player.acronym, e.ordinal, phase);
                    row.push_back(p && !p->props.sentiments_empty ? format_fixed(p->props.sentiments[s]) : "NA");
                }
            }
            out += md_row(row);
        }
    }
    return out;
}

std::string sentiment_csv(const ScoreResult& scores, const ReportContext& ctx) {
    std::vector<std::string> header = {"acronym", "sentiment"};
    for (const auto& e : ctx.events) {
        header.push_back(event_tag(e.ordinal) + "_pre");
        header.push_back(event_tag(e.ordinal) + "_post");
    }
    std::string out = csv::join(header) + "\n";
    for (const auto& player : ctx.players) {
        for (std::size_t s = kSentimentCount; s-- > 0;) {
            std::vector<std::string> row = {player.acronym, s == 1 ? "positive" : "negative"};
            for (const auto& e : ctx.events) {
                for (const Phase phase : kPhases) {
                    const EmotionProfile* p = find_profile(scores, player.acronym, e.ordinal, phase);
                    row.push_back(p && !p->props.sentiments_empty ? format_fixed(p->props.sentiments[s]) : "");
                }
            }
            out += csv::join(row) + "\n";
        }
    }
    return out;
}

const AlignedPair* aligned_for(const BrandReport& brand, int ordinal) {
    if (!brand.aligned) return nullptr;
    const auto it = brand.aligned->by_event.find(ordinal);
    return it == brand.aligned->by_event.end() ? nullptr : &it->second;
}

std::string trust_business_md(const EekdResult& result, const ReportContext& ctx,
                              const std::vector<SeriesMode>& modes) {
    std::string out;
    for (const auto& report : result.reports) {
        out += "## " + (report.name.empty() ? report.acronym : report.name) + ": Trust and Business\n\n";
        if (report.insufficient_data) {
            out += "insufficient data\n\n";
            continue;
        }
        std::vector<std::string> header = {"", ""};
        for (const auto& e : ctx.events) header.push_back("Match-" + std::to_string(e.ordinal));
        out += md_row(header) + md_rule(header.size());

        for (const Phase phase : kPhases) {
            std::vector<std::string> row = {phase == Phase::pre ? "Trust" : "", std::string(phase_name(phase))};
            for (const auto& e : ctx.events) {
                const EmotionProfile* p = find_profile(result.scores, report.acronym, e.ordinal, phase);
                row.push_back(p && !p->props.emotions_empty ? format_fixed(p->props.of(EmotionCategory::trust))
                                                            : "NA");
            }
            out += md_row(row);
        }
        for (const auto& brand : report.brands) {
            for (const Phase phase : kPhases) {
                std::vector<std::string> row = {phase == Phase::pre ? brand.symbol : "",
                                                std::string(phase_name(phase))};
                for (const auto& e : ctx.events) {
                    const AlignedPair* pair = aligned_for(brand, e.ordinal);
                    if (!pair) {
                        row.push_back("NA");
                    } else {
                        row.push_back(phase == Phase::pre ? pair->pre.close_text : pair->post.close_text);
                    }
                }
                out += md_row(row);
            }
        }
        out += "\n";

        std::vector<std::string> summary = {"Brand", "n"};
        for (const SeriesMode mode : modes) summary.push_back("r (trust, " + std::string(mode_name(mode)) + ")");
        out += md_row(summary) + md_rule(summary.size());
        for (const auto& brand : report.brands) {
            std::vector<std::string> row = {brand.symbol, ""};
            for (const SeriesMode mode : modes) {
                const CorrelationCell* cell = brand.cell(EmotionCategory::trust, mode);
                if (cell && row[1].empty()) row[1] = std::to_string(cell->n);
                row.push_back(cell ? r_text(*cell) : "n/a (" + brand.alignment_error + ")");
            }
            out += md_row(row);
        }
        out += "\n";
    }
    return out;
}

std::string matrix_md(const std::vector<PlayerReport>& reports, const std::vector<SeriesMode>& modes) {
    std::string out;
    for (const SeriesMode mode : modes) {
        out += "## Mode: " + std::string(mode_name(mode)) + "\n\n";
        std::vector<std::string> header = {"Player", "Brand"};
        for (const EmotionCategory c : kAllCategories) header.push_back(capitalized(category_name(c)));
        out += md_row(header) + md_rule(header.size());
        for (const auto& report : reports) {
            if (report.insufficient_data) {
                std::vector<std::string> row = {report.acronym, ""};
                row.resize(header.size(), "insufficient data");
                out += md_row(row);
                continue;
            }
            for (const auto& brand : report.brands) {
                std::vector<std::string> row = {report.acronym, brand.symbol};
                for (const EmotionCategory c : kAllCategories) {
                    const CorrelationCell* cell = brand.cell(c, mode);
                    row.push_back(cell ? r_text(*cell) : "n/a");
                }
                out += md_row(row);
            }
        }
        out += "\n";
    }
    return out;
}

}  // namespace

std::string format_exact(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

std::string format_fixed(double value, int places) {
    if (!std::isfinite(value)) return "nan";
    char buf[512];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed);
    if (ec != std::errc()) return "nan";
    std::string s(buf, ptr);

    const bool negative = !s.empty() && s[0] == '-';
    if (negative) s.erase(0, 1);
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        s += '.';
        dot = s.size() - 1;
    }
    std::string frac = s.substr(dot + 1);
    std::string whole = s.substr(0, dot);
    const auto keep = static_cast<std::size_t>(places);
    bool round_up = frac.size() > keep && frac[keep] >= '5';
    frac.resize(keep, '0');
    if (round_up) {
        std::string digits = whole + frac;
        std::size_t i = digits.size();
        while (i > 0) {
            --i;
            if (digits[i] == '9') {
                digits[i] = '0';
            } else {
                ++digits[i];
                break;
            }
            if (i == 0) digits.insert(digits.begin(), '1');
        }
        whole = digits.substr(0, digits.size() - keep);
        frac = digits.substr(digits.size() - keep);
    }
    const bool zero = whole.find_first_not_of('0') == std::string::npos &&
                      frac.find_first_not_of('0') == std::string::npos;
    std::string out = (negative && !zero ? "-" : "") + whole;
    if (keep > 0) out += "." + frac;
    return out;
}

std::string render_profiles(const ScoreResult& scores, const ReportContext& ctx, OutFormat format) {
    switch (format) {
        case OutFormat::csv: {
            std::vector<std::string> header = {"acronym", "event", "phase"};
            for (const EmotionCategory c : kAllCategories) header.push_back("raw_" + std::string(category_name(c)));
            for (const EmotionCategory c : kAllCategories) header.push_back("prop_" + std::string(category_name(c)));
            header.insert(header.end(), {"tweet_count", "emotions_empty", "sentiments_empty"});
            std::string out = csv::join(header) + "\n";
            for (const auto& p : scores.profiles) {
                std::vector<std::string> row = {p.acronym, event_tag(p.event_ordinal),
                                                std::string(phase_name(p.phase))};
                for (const EmotionCategory c : kAllCategories) row.push_back(std::to_string(p.raw[c]));
                for (const double v : p.props.all()) row.push_back(format_fixed(v));
                row.push_back(std::to_string(p.tweet_count));
                row.push_back(p.props.emotions_empty ? "1" : "0");
                row.push_back(p.props.sentiments_empty ? "1" : "0");
                out += csv::join(row) + "\n";
            }
            return out;
        }
        case OutFormat::json: {
            ojson rows = ojson::array();
            for (const auto& p : scores.profiles) rows.push_back(profile_json(p, ctx));
            ojson doc;
            doc["profiles"] = rows;
            return dump(doc, ctx);
        }
        case OutFormat::md:
            return md_header(ctx.generated_at, "Emotion profiles") + emotion_tables_md(scores, ctx) + "\n" +
                   "## Sentiments\n\n" + sentiment_md(scores, ctx);
    }
    return {};
}

std::string render_tweet_counts(const ScoreResult& scores, const ReportContext& ctx, OutFormat format) {
    switch (format) {
        case OutFormat::csv: {
            std::vector<std::string> header = {"acronym", "name", "phase"};
            for (const auto& e : ctx.events) header.push_back(event_tag(e.ordinal));
            std::string out = csv::join(header) + "\n";
            for (const auto& player : ctx.players) {
                for (const Phase phase : kPhases) {
                    std::vector<std::string> row = {player.acronym, player.name, std::string(phase_name(phase))};
                    for (const auto& e : ctx.events) {
                        const EmotionProfile* p = find_profile(scores, player.acronym, e.ordinal, phase);
                        row.push_back(std::to_string(p ? p->tweet_count : 0));
                    }
                    out += csv::join(row) + "\n";
                }
            }
            return out;
        }
        case OutFormat::json: {
            ojson players = ojson::array();
            for (const auto& player : ctx.players) {
                ojson entry;
                entry["acronym"] = player.acronym;
                entry["name"] = player.name;
                for (const Phase phase : kPhases) {
                    ojson counts = ojson::object();
                    for (const auto& e : ctx.events) {
                        const EmotionProfile* p = find_profile(scores, player.acronym, e.ordinal, phase);
                        counts[event_tag(e.ordinal)] = p ? p->tweet_count : 0;
                    }
                    entry[phase == Phase::pre ? "pre" : "post"] = counts;
                }
                players.push_back(entry);
            }
            ojson doc;
            doc["tweet_counts"] = players;
            return dump(doc, ctx);
        }
        case OutFormat::md:
            return md_header(ctx.generated_at, "Count of tweets per player") + tweet_counts_md(scores, ctx);
    }
    return {};
}

std::string render_match_stats(const ScoreResult& scores, const ReportContext& ctx, OutFormat format) {
    const auto counts_for = [&](int ordinal) {
        const auto it = scores.event_counts.find(ordinal);
        return it == scores.event_counts.end() ? EventTweetCount{} : it->second;
    };
    const Diagnostics& d = scores.diagnostics;
    switch (format) {
        case OutFormat::csv: {
            std::string out = "event,label,date,outcome,pre,post,total\n";
            for (const auto& e : ctx.events) {
                const auto c = counts_for(e.ordinal);
                out += csv::join({event_tag(e.ordinal), e.label, format_date(date_of(e.start)),
                                  std::string(outcome_name(e.outcome)), std::to_string(c.pre),
                                  std::to_string(c.post), std::to_string(c.pre + c.post)}) +
                       "\n";
            }
            return out;
        }
        case OutFormat::json: {
            ojson events = ojson::array();
            for (const auto& e : ctx.events) {
                const auto c = counts_for(e.ordinal);
                ojson entry;
                entry["event"] = event_tag(e.ordinal);
                entry["label"] = e.label;
                entry["date"] = format_date(date_of(e.start));
                entry["outcome"] = std::string(outcome_name(e.outcome));
                entry["pre"] = c.pre;
                entry["post"] = c.post;
                events.push_back(entry);
            }
            ojson diag;
            diag["tweets_in"] = d.tweets_in;
            diag["dropped_empty"] = d.dropped_empty;
            diag["outside_windows"] = d.outside_windows;
            diag["unclustered"] = d.unclustered;
            diag["multi_cluster"] = d.multi_cluster;
            diag["excluded_multi"] = d.excluded_multi;
            diag["window_assignments"] = d.window_assignments;
            ojson doc;
            doc["matches"] = events;
            doc["diagnostics"] = diag;
            return dump(doc, ctx);
        }
        case OutFormat::md:
            return md_header(ctx.generated_at, "Match wise tweet statistics") + match_stats_md(scores, ctx);
    }
    return {};
}

std::string render_sentiments(const ScoreResult& scores, const ReportContext& ctx, OutFormat format) {
    switch (format) {
        case OutFormat::csv:
            return sentiment_csv(scores, ctx);
        case OutFormat::json: {
            ojson players = ojson::array();
            for (const auto& player : ctx.players) {
                ojson entry;
                entry["acronym"] = player.acronym;
                ojson events = ojson::array();
                for (const auto& e : ctx.events) {
                    for (const Phase phase : kPhases) {
                        const EmotionProfile* p = find_profile(scores, player.acronym, e.ordinal, phase);
                        ojson cell;
                        cell["event"] = event_tag(e.ordinal);
                        cell["phase"] = std::string(phase_name(phase));
                        const bool empty = !p || p->props.sentiments_empty;
                        cell["positive"] = empty ? ojson(nullptr) : ojson(p->props.of(EmotionCategory::positive));
                        cell["negative"] = empty ? ojson(nullptr) : ojson(p->props.of(EmotionCategory::negative));
                        events.push_back(cell);
                    }
                }
                entry["sentiments"] = events;
                players.push_back(entry);
            }
            ojson doc;
            doc["sentiments"] = players;
            return dump(doc, ctx);
        }
        case OutFormat::md:
            return md_header(ctx.generated_at, "Sentiment analysis of followers") + sentiment_md(scores, ctx);
    }
    return {};
}

std::string render_correlations(const EekdResult& result, const ReportContext& ctx,
                                const std::vector<SeriesMode>& modes, OutFormat format) {
    switch (format) {
        case OutFormat::csv: {
            std::string out = "acronym,brand,category,mode,n,r,note,x,y\n";
            for (const auto& report : result.reports) {
                if (report.insufficient_data) {
                    out += csv::join({report.acronym, "", "", "", "0", "", "insufficient data", "", ""}) + "\n";
                }
                for (const auto& brand : report.brands) {
                    for (const auto& cell : brand.cells) {
                        out += csv::join({report.acronym, brand.symbol, std::string(category_name(cell.category)),
                                          std::string(mode_name(cell.mode)), std::to_string(cell.n),
                                          cell.r ? format_fixed(*cell.r) : "", cell.note,
                                          join_exact(cell.inputs.x.values), join_exact(cell.inputs.y.values)}) +
                               "\n";
                    }
                }
            }
            return out;
        }
        case OutFormat::json: {
            ojson players = ojson::array();
            for (const auto& report : result.reports) {
                ojson player;
                player["acronym"] = report.acronym;
                player["name"] = report.name;
                player["insufficient_data"] = report.insufficient_data;
                ojson brands = ojson::array();
                for (const auto& brand : report.brands) {
                    ojson b;
                    b["symbol"] = brand.symbol;
                    if (brand.aligned) {
                        ojson aligned = ojson::array();
                        for (const auto& [ordinal, pair] : brand.aligned->by_event) {
                            ojson a;
                            a["event"] = event_tag(ordinal);
                            a["pre_date"] = format_date(pair.pre.date);
                            a["pre_close"] = pair.pre.close;
                            a["post_date"] = format_date(pair.post.date);
                            a["post_close"] = pair.post.close;
                            aligned.push_back(a);
                        }
                        b["aligned"] = aligned;
                    } else {
                        b["alignment_error"] = brand.alignment_error;
                    }
                    ojson cells = ojson::array();
                    for (const auto& cell : brand.cells) {
                        ojson c;
                        c["category"] = std::string(category_name(cell.category));
                        c["mode"] = std::string(mode_name(cell.mode));
                        c["n"] = cell.n;
                        c["r"] = cell.r ? ojson(*cell.r) : ojson(nullptr);
                        if (!cell.note.empty()) c["note"] = cell.note;
                        c["events"] = cell.inputs.events;
                        c["x"] = cell.inputs.x.values;
                        c["y"] = cell.inputs.y.values;
                        cells.push_back(c);
                    }
                    b["correlations"] = cells;
                    brands.push_back(b);
                }
                player["brands"] = brands;
                players.push_back(player);
            }
            ojson doc;
            doc["modes"] = ojson::array();
            for (const SeriesMode m : modes) doc["modes"].push_back(std::string(mode_name(m)));
            doc["players"] = players;
            return dump(doc, ctx);
        }
        case OutFormat::md:
            return md_header(ctx.generated_at, "Trust and business") + trust_business_md(result, ctx, modes);
    }
    return {};
}

std::string render_correlation_matrix(const std::vector<PlayerReport>& reports, const ReportContext& ctx,
                                      const std::vector<SeriesMode>& modes, OutFormat format) {
    switch (format) {
        case OutFormat::csv: {
            std::vector<std::string> header = {"acronym", "brand", "mode"};
            for (const EmotionCategory c : kAllCategories) header.emplace_back(category_name(c));
            std::string out = csv::join(header) + "\n";
            for (const SeriesMode mode : modes) {
                for (const auto& report : reports) {
                    for (const auto& brand : report.brands) {
                        std::vector<std::string> row = {report.acronym, brand.symbol, std::string(mode_name(mode))};
                        for (const EmotionCategory c : kAllCategories) {
                            const CorrelationCell* cell = brand.cell(c, mode);
                            row.push_back(cell && cell->r ? format_fixed(*cell->r) : "");
                        }
                        out += csv::join(row) + "\n";
                    }
                }
            }
            return out;
        }
        case OutFormat::json: {
            ojson rows = ojson::array();
            for (const SeriesMode mode : modes) {
                for (const auto& report : reports) {
                    for (const auto& brand : report.brands) {
                        ojson row;
                        row["acronym"] = report.acronym;
                        row["brand"] = brand.symbol;
                        row["mode"] = std::string(mode_name(mode));
                        ojson r = ojson::object();
                        for (const EmotionCategory c : kAllCategories) {
                            const CorrelationCell* cell = brand.cell(c, mode);
                            r[std::string(category_name(c))] = cell && cell->r ? ojson(*cell->r) : ojson(nullptr);
                        }
                        row["r"] = r;
                        rows.push_back(row);
                    }
                }
            }
            ojson doc;
            doc["correlation_matrix"] = rows;
            return dump(doc, ctx);
        }
        case OutFormat::md:
            return md_header(ctx.generated_at, "Correlation matrix") + matrix_md(reports, modes);
    }
    return {};
}

std::string render_popularity(const std::map<std::string, PopularitySeries>& popularity,
                              const ReportContext& ctx, OutFormat format) {
    const auto value_on = [&](const std::string& subject, Date day) -> std::optional<double> {
        const auto it = popularity.find(subject);
        return it == popularity.end() ? std::nullopt : popularity_at(it->second, day);
    };
    const auto subject_for = [&](const PlayerProfile& player) {
        return popularity.count(player.acronym) ? player.acronym : player.name;
    };
    switch (format) {
        case OutFormat::csv: {
            std::string out = "acronym,subject,event,date,value\n";
            for (const auto& player : ctx.players) {
                const std::string subject = subject_for(player);
                for (const auto& e : ctx.events) {
                    const Date day = date_of(e.start);
                    const auto v = value_on(subject, day);
                    out += csv::join({player.acronym, subject, event_tag(e.ordinal), format_date(day),
                                      v ? format_fixed(*v) : ""}) +
                           "\n";
                }
            }
            return out;
        }
        case OutFormat::json: {
            ojson rows = ojson::array();
            for (const auto& player : ctx.players) {
                const std::string subject = subject_for(player);
                for (const auto& e : ctx.events) {
                    const Date day = date_of(e.start);
                    const auto v = value_on(subject, day);
                    ojson row;
                    row["acronym"] = player.acronym;
                    row["subject"] = subject;
                    row["event"] = event_tag(e.ordinal);
                    row["date"] = format_date(day);
                    row["value"] = v ? ojson(*v) : ojson(nullptr);
                    rows.push_back(row);
                }
            }
            ojson doc;
            doc["popularity"] = rows;
            return dump(doc, ctx);
        }
        case OutFormat::md: {
            std::vector<std::string> header = {"Name"};
            for (const auto& e : ctx.events) header.push_back(event_tag(e.ordinal));
            std::string out = md_header(ctx.generated_at, "Popularity on match days") + md_row(header) +
                              md_rule(header.size());
            for (const auto& player : ctx.players) {
                std::vector<std::string> row = {player.acronym};
                for (const auto& e : ctx.events) {
                    const auto v = value_on(subject_for(player), date_of(e.start));
                    row.push_back(v ? format_fixed(*v) : "NA");
                }
                out += md_row(row);
            }
            return out;
        }
    }
    return {};
}

std::vector<RenderedFile> render_score_outputs(const ScoreResult& scores, const ReportContext& ctx,
                                               OutFormat format) {
    const std::string ext(extension_for(format));
    return {
        {"profiles" + ext, render_profiles(scores, ctx, format)},
        {"tweet_counts" + ext, render_tweet_counts(scores, ctx, format)},
        {"match_stats" + ext, render_match_stats(scores, ctx, format)},
    };
}

std::vector<RenderedFile> render_correlate_outputs(const EekdResult& result, const ReportContext& ctx,
                                                   const std::vector<SeriesMode>& modes, OutFormat format) {
    const std::string ext(extension_for(format));
    return {
        {"correlations" + ext, render_correlations(result, ctx, modes, format)},
        {"correlation_matrix" + ext, render_correlation_matrix(result.reports, ctx, modes, format)},
    };
}

std::vector<RenderedFile> render_report_bundle(const EekdResult& result, const ReportContext& ctx,
                                               const std::vector<SeriesMode>& modes,
                                               const std::map<std::string, PopularitySeries>& popularity,
                                               OutFormat format) {
    const std::string ext(extension_for(format));
    std::vector<RenderedFile> files = {
        {"match_stats" + ext, render_match_stats(result.scores, ctx, format)},
        {"tweet_counts" + ext, render_tweet_counts(result.scores, ctx, format)},
        {"emotion_tables" + ext, render_profiles(result.scores, ctx, format)},
        {"trust_business" + ext, render_correlations(result, ctx, modes, format)},
        {"sentiments" + ext, render_sentiments(result.scores, ctx, format)},
        {"correlation_matrix" + ext, render_correlation_matrix(result.reports, ctx, modes, format)},
    };
    if (!popularity.empty()) files.push_back({"popularity" + ext, render_popularity(popularity, ctx, format)});
    return files;
}

}  // namespace fanpulse
