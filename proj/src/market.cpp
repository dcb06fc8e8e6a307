#include "fanpulse/market.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

#include "fanpulse/csv.hpp"
#include "fanpulse/error.hpp"
#include "fanpulse/unicode.hpp"

namespace fanpulse {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\xEF\xBB\xBF");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t");
    return std::string(s.substr(first, last - first + 1));
}

std::optional<double> parse_number(std::string_view text) {
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value)) return std::nullopt;
    return value;
}

struct Row {
    Date date;
    std::string key;
    double value;
    std::string value_text;
    std::size_t line;
};

// Reads a three-column date,<key>,<value> CSV.
std::vector<Row> read_rows(std::istream& in, std::string_view key_column,
                           std::string_view value_column) {
    csv::Reader reader(in);
    csv::Record header;
    if (!reader.next(header)) return {};
    std::ptrdiff_t date_col = -1, key_col = -1, value_col = -1;
    for (std::size_t i = 0; i < header.fields.size(); ++i) {
        const std::string name = unicode::fold_case(trim(header.fields[i]));
        const auto col = static_cast<std::ptrdiff_t>(i);
        if (name == "date") date_col = col;
        else if (name == key_column) key_col = col;
        else if (name == value_column) value_col = col;
    }
    if (date_col < 0 || key_col < 0 || value_col < 0) {
        throw Error(ErrorKind::schema,
                    "header must name date," + std::string(key_column) + "," + std::string(value_column),
                    header.line);
    }

    std::vector<Row> rows;
    csv::Record record;
    while (reader.next(record)) {
        if (record.malformed || record.fields.size() != header.fields.size()) {
            throw Error(ErrorKind::parse, "malformed CSV row", record.line);
        }
        const std::string date_text = trim(record.fields[static_cast<std::size_t>(date_col)]);
        const auto date = parse_date(date_text);
        if (!date) throw Error(ErrorKind::data, "bad date '" + date_text + "'", record.line);
        std::string value_text = trim(record.fields[static_cast<std::size_t>(value_col)]);
        const auto value = parse_number(value_text);
        if (!value) throw Error(ErrorKind::data, "bad number '" + value_text + "'", record.line);
        std::string key = trim(record.fields[static_cast<std::size_t>(key_col)]);
        if (key.empty()) throw Error(ErrorKind::data, "empty " + std::string(key_column), record.line);
        rows.push_back(Row{*date, std::move(key), *value, std::move(value_text), record.line});
    }
    if (in.bad()) throw Error(ErrorKind::io, "read failure");
    return rows;
}

template <typename Point>
void sort_and_check(std::vector<Point>& points, std::vector<std::size_t>& lines,
                    const std::string& name) {
    std::vector<std::size_t> order(points.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return points[a].date < points[b].date; });
    std::vector<Point> sorted;
    std::vector<std::size_t> sorted_lines;
    sorted.reserve(points.size());
    for (const std::size_t i : order) {
        sorted.push_back(std::move(points[i]));
        sorted_lines.push_back(lines[i]);
    }
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (!(sorted[i - 1].date < sorted[i].date)) {
            throw Error(ErrorKind::data,
                        name + ": dates are not strictly increasing (" + format_date(sorted[i].date) +
                            " repeated)",
                        sorted_lines[i]);
        }
    }
    points = std::move(sorted);
    lines = std::move(sorted_lines);
}

std::map<std::string, PriceSeries> build_price_table(std::vector<Row> rows) {
    std::map<std::string, PriceSeries> table;
    std::map<std::string, std::vector<std::size_t>> lines;
    for (auto& row : rows) {
        if (!(row.value > 0.0)) {
            throw Error(ErrorKind::data, row.key + ": close must be positive", row.line);
        }
        auto& series = table[row.key];
        series.symbol = row.key;
        series.points.push_back(PricePoint{row.date, row.value, std::move(row.value_text)});
        lines[row.key].push_back(row.line);
    }
    for (auto& [symbol, series] : table) sort_and_check(series.points, lines[symbol], symbol);
    return table;
}

std::map<std::string, PopularitySeries> build_popularity_table(std::vector<Row> rows) {
    std::map<std::string, PopularitySeries> table;
    std::map<std::string, std::vector<std::size_t>> lines;
    for (auto& row : rows) {
        if (row.value < 0.0 || row.value > 100.0) {
            throw Error(ErrorKind::data, row.key + ": value must lie in [0, 100]", row.line);
        }
        auto& series = table[row.key];
        series.subject = row.key;
        series.points.push_back(PopularityPoint{row.date, row.value});
        lines[row.key].push_back(row.line);
    }
    for (auto& [subject, series] : table) sort_and_check(series.points, lines[subject], subject);
    return table;
}

template <typename Series>
Series pick(std::map<std::string, Series> table, const std::optional<std::string>& wanted,
            const char* what) {
    if (wanted) {
        const auto it = table.find(*wanted);
        if (it == table.end() || it->second.points.empty()) {
            throw Error(ErrorKind::data, "empty series for " + *wanted);
        }
        return std::move(it->second);
    }
    if (table.empty()) throw Error(ErrorKind::data, "empty series");
    if (table.size() > 1) {
        throw Error(ErrorKind::data, std::string("file holds several ") + what + "s; pick one");
    }
    return std::move(table.begin()->second);
}

}  // namespace

PriceSeries load_prices(std::istream& source, std::optional<std::string> symbol) {
    return pick(build_price_table(read_rows(source, "symbol", "close")), symbol, "symbol");
}

std::map<std::string, PriceSeries> load_price_table(std::istream& source) {
    auto table = build_price_table(read_rows(source, "symbol", "close"));
    if (table.empty()) throw Error(ErrorKind::data, "empty series");
    return table;
}

std::map<std::string, PriceSeries> load_price_table_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::io, "cannot open prices file " + path.string());
    return load_price_table(in);
}

AlignedPair align(const PriceSeries& series, const MatchEvent& event, PostCloseRule rule) {
    const Date start_day = date_of(event.start);
    const Date end_day = date_of(event.end);
    const auto& pts = series.points;

    const auto first_on_start = std::lower_bound(
        pts.begin(), pts.end(), start_day, [](const PricePoint& p, Date d) { return p.date < d; });
    if (first_on_start == pts.begin()) {
        throw Error(ErrorKind::alignment, series.symbol + ": no trading date before " +
                                              format_date(start_day) + " for " + event.label +
                                              " (M" + std::to_string(event.ordinal) + ")");
    }
    const auto post = rule == PostCloseRule::on_or_after_end_date
                          ? std::lower_bound(pts.begin(), pts.end(), end_day,
                                             [](const PricePoint& p, Date d) { return p.date < d; })
                          : std::upper_bound(pts.begin(), pts.end(), end_day,
                                             [](Date d, const PricePoint& p) { return d < p.date; });
    if (post == pts.end()) {
        throw Error(ErrorKind::alignment,
                    series.symbol + ": no trading date " +
                        (rule == PostCloseRule::on_or_after_end_date ? "on or after " : "after ") +
                        format_date(end_day) + " for " + event.label + " (M" +
                        std::to_string(event.ordinal) + ")");
    }
    return AlignedPair{*std::prev(first_on_start), *post};
}

PopularitySeries load_popularity(std::istream& source, std::optional<std::string> subject) {
    return pick(build_popularity_table(read_rows(source, "subject", "value")), subject, "subject");
}

std::map<std::string, PopularitySeries> load_popularity_table(std::istream& source) {
    return build_popularity_table(read_rows(source, "subject", "value"));
}

std::map<std::string, PopularitySeries> load_popularity_table_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::io, "cannot open popularity file " + path.string());
    return load_popularity_table(in);
}

std::optional<double> popularity_at(const PopularitySeries& series, Date day) {
    const auto it = std::upper_bound(series.points.begin(), series.points.end(), day,
                                     [](Date d, const PopularityPoint& p) { return d < p.date; });
    if (it == series.points.begin()) return std::nullopt;
    return std::prev(it)->value;
}

}  // namespace fanpulse
