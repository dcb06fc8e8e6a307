#include "fanpulse/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <unordered_set>

#include <json.hpp>

#include "fanpulse/csv.hpp"
#include "fanpulse/error.hpp"
#include "fanpulse/unicode.hpp"

namespace fanpulse {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxProblems = 20;

class Collector {
public:
    explicit Collector(IngestResult& result) : result_(result) {}

    void accept(Tweet tweet, std::size_t line) {
        if (tweet.id.empty()) return reject(line, "empty id");
        if (!seen_.insert(tweet.id).second) return reject(line, "duplicate id " + tweet.id);
        ++result_.records;
        result_.tweets.push_back(std::move(tweet));
    }

    void reject(std::size_t line, const std::string& why) {
        ++result_.records;
        ++result_.skipped;
        if (result_.problems.size() < kMaxProblems) {
            result_.problems.push_back("line " + std::to_string(line) + ": " + why);
        }
    }

private:
    IngestResult& result_;
    std::unordered_set<std::string> seen_;
};

void ingest_jsonl(std::istream& in, IngestResult& result) {
    Collector collect(result);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        if (!unicode::is_valid_utf8(line)) {
            collect.reject(line_no, "invalid UTF-8");
            continue;
        }
        json record;
        try {
            record = json::parse(line);
        } catch (const json::parse_error&) {
            collect.reject(line_no, "not valid JSON");
            continue;
        }
        if (!record.is_object()) {
            collect.reject(line_no, "record is not an object");
            continue;
        }
        const auto id = record.find("id");
        const auto created = record.find("created_at");
        const auto text = record.find("text");
        if (id == record.end() || !id->is_string() || created == record.end() ||
            !created->is_string() || text == record.end() || !text->is_string()) {
            collect.reject(line_no, "missing id, created_at or text");
            continue;
        }
        const auto when = parse_instant(created->get<std::string>());
        if (!when) {
            collect.reject(line_no, "unparseable created_at");
            continue;
        }
        Tweet tweet{id->get<std::string>(), *when, text->get<std::string>(), std::nullopt};
        if (const auto loc = record.find("location"); loc != record.end() && !loc->is_null()) {
            if (!loc->is_string()) {
                collect.reject(line_no, "location is not a string");
                continue;
            }
            tweet.location = loc->get<std::string>();
        }
        collect.accept(std::move(tweet), line_no);
    }
}

std::string trimmed_lower(std::string s) {
    const auto first = s.find_first_not_of(" \t\xEF\xBB\xBF");
    const auto last = s.find_last_not_of(" \t");
    s = first == std::string::npos ? std::string() : s.substr(first, last - first + 1);
    return unicode::fold_case(s);
}

void ingest_csv(std::istream& in, IngestResult& result) {
    csv::Reader reader(in);
    csv::Record header;
    if (!reader.next(header)) return;

    std::ptrdiff_t id_col = -1, created_col = -1, text_col = -1, location_col = -1;
    for (std::size_t i = 0; i < header.fields.size(); ++i) {
        const std::string name = trimmed_lower(header.fields[i]);
        const auto col = static_cast<std::ptrdiff_t>(i);
        if (name == "id") id_col = col;
        else if (name == "created_at") created_col = col;
        else if (name == "text") text_col = col;
        else if (name == "location") location_col = col;
    }
    if (header.malformed || id_col < 0 || created_col < 0 || text_col < 0) {
        throw Error(ErrorKind::corpus_rejected,
                    "CSV header must name id,created_at,text[,location]", header.line);
    }

    Collector collect(result);
    csv::Record record;
    while (reader.next(record)) {
        if (record.malformed || record.fields.size() != header.fields.size()) {
            collect.reject(record.line, "malformed CSV record");
            continue;
        }
        const bool utf8 = std::all_of(record.fields.begin(), record.fields.end(),
                                      [](const std::string& f) { return unicode::is_valid_utf8(f); });
        if (!utf8) {
            collect.reject(record.line, "invalid UTF-8");
            continue;
        }
        const auto when = parse_instant(record.fields[static_cast<std::size_t>(created_col)]);
        if (!when) {
            collect.reject(record.line, "unparseable created_at");
            continue;
        }
        Tweet tweet{record.fields[static_cast<std::size_t>(id_col)], *when,
                    record.fields[static_cast<std::size_t>(text_col)], std::nullopt};
        if (location_col >= 0 && !record.fields[static_cast<std::size_t>(location_col)].empty()) {
            tweet.location = record.fields[static_cast<std::size_t>(location_col)];
        }
        collect.accept(std::move(tweet), record.line);
    }
}

Instant require_instant(const json& entry, const char* key, std::size_t index) {
    const auto it = entry.find(key);
    if (it == entry.end() || !it->is_string()) {
        throw Error(ErrorKind::schema,
                    "event #" + std::to_string(index + 1) + ": missing string field " + key);
    }
    const auto when = parse_instant(it->get<std::string>());
    if (!when) {
        throw Error(ErrorKind::schema, "event #" + std::to_string(index + 1) + ": bad " + key +
                                           " timestamp '" + it->get<std::string>() + "'");
    }
    return *when;
}

}  // namespace

std::optional<TweetFormat> parse_tweet_format(std::string_view name) {
    if (name == "jsonl" || name == "json") return TweetFormat::jsonl;
    if (name == "csv") return TweetFormat::csv;
    return std::nullopt;
}

TweetFormat tweet_format_for(const std::filesystem::path& path) {
    return unicode::fold_case(path.extension().string()) == ".csv" ? TweetFormat::csv
                                                                    : TweetFormat::jsonl;
}

IngestResult ingest_tweets(std::istream& source, TweetFormat format) {
    IngestResult result;
    if (format == TweetFormat::jsonl) {
        ingest_jsonl(source, result);
    } else {
        ingest_csv(source, result);
    }
    if (source.bad()) throw Error(ErrorKind::io, "read failure while ingesting tweets");
    if (result.records > 0 && result.skipped * 2 > result.records) {
        throw Error(ErrorKind::corpus_rejected,
                    std::to_string(result.skipped) + " of " + std::to_string(result.records) +
                        " records are malformed; wrong format?");
    }
    return result;
}

IngestResult ingest_tweets_file(const std::filesystem::path& path,
                                std::optional<TweetFormat> format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::io, "cannot open tweets file " + path.string());
    return ingest_tweets(in, format.value_or(tweet_format_for(path)));
}

std::string_view outcome_name(Outcome outcome) {
    return outcome == Outcome::win ? "Win" : "Lose";
}

std::vector<MatchEvent> load_schedule(std::istream& source) {
    json doc;
    try {
        doc = json::parse(source);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::parse, std::string("schedule is not valid JSON: ") + e.what());
    }
    const json* entries = &doc;
    if (doc.is_object()) {
        const auto it = doc.find("events");
        if (it == doc.end()) throw Error(ErrorKind::schema, "schedule object has no \"events\"");
        entries = &*it;
    }
    if (!entries->is_array()) throw Error(ErrorKind::schema, "schedule events must be an array");

    std::vector<MatchEvent> events;
    for (std::size_t i = 0; i < entries->size(); ++i) {
        const json& entry = (*entries)[i];
        const std::string where = "event #" + std::to_string(i + 1);
        if (!entry.is_object()) throw Error(ErrorKind::schema, where + " is not an object");

        MatchEvent event;
        const auto label = entry.find("label");
        if (label == entry.end() || !label->is_string() || label->get<std::string>().empty()) {
            throw Error(ErrorKind::schema, where + ": missing label");
        }
        event.label = label->get<std::string>();

        const auto ordinal = entry.find("ordinal");
        if (ordinal == entry.end() || !ordinal->is_number_integer() || ordinal->get<int>() < 1) {
            throw Error(ErrorKind::schema, where + ": ordinal must be a positive integer");
        }
        event.ordinal = ordinal->get<int>();
        event.start = require_instant(entry, "start", i);
        event.end = require_instant(entry, "end", i);
        if (!(event.start < event.end)) {
            throw Error(ErrorKind::schema, where + " (" + event.label + "): start must precede end");
        }

        const auto outcome = entry.find("outcome");
        const std::string outcome_text =
            outcome != entry.end() && outcome->is_string() ? unicode::fold_case(outcome->get<std::string>()) : "";
        if (outcome_text == "win") {
            event.outcome = Outcome::win;
        } else if (outcome_text == "lose" || outcome_text == "loss") {
            event.outcome = Outcome::lose;
        } else {
            throw Error(ErrorKind::schema, where + ": outcome must be Win or Lose");
        }

        if (const auto w = entry.find("window_hours"); w != entry.end() && !w->is_null()) {
            if (!w->is_number() || !std::isfinite(w->get<double>()) || w->get<double>() <= 0) {
                throw Error(ErrorKind::schema, where + ": window_hours must be positive");
            }
            event.window_hours = w->get<double>();
        }
        events.push_back(std::move(event));
    }

    std::sort(events.begin(), events.end(),
              [](const MatchEvent& a, const MatchEvent& b) { return a.ordinal < b.ordinal; });
    for (std::size_t i = 0; i < events.size(); ++i) {
        if (events[i].ordinal != static_cast<int>(i) + 1) {
            throw Error(ErrorKind::schema,
                        "event ordinals must be unique and contiguous from 1; found M" +
                            std::to_string(events[i].ordinal) + " at position " +
                            std::to_string(i + 1));
        }
    }
    return events;
}

std::vector<MatchEvent> load_schedule_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::io, "cannot open schedule file " + path.string());
    return load_schedule(in);
}

std::string_view phase_name(Phase phase) {
    switch (phase) {
        case Phase::pre: return "Pre";
        case Phase::post: return "Post";
        case Phase::outside: return "Outside";
    }
    return "Outside";
}

Phase window_phase(Instant created_at, const MatchEvent& event, double window_hours) {
    const double window = window_hours * 3600.0;
    if (created_at < event.start) {
        const auto before = static_cast<double>((event.start - created_at).count());
        return before <= window ? Phase::pre : Phase::outside;
    }
    if (created_at > event.end) {
        const auto after = static_cast<double>((created_at - event.end).count());
        return after <= window ? Phase::post : Phase::outside;
    }
    return Phase::outside;
}

WindowAssignment assign_window(const Tweet& tweet, const MatchEvent& event, double window_hours) {
    return {window_phase(tweet.created_at, event, window_hours), event.ordinal};
}

double effective_window_hours(const MatchEvent& event, double fallback) {
    return event.window_hours.value_or(fallback);
}

}  // namespace fanpulse
