#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fanpulse/corpus.hpp"
#include "fanpulse/timeutil.hpp"

namespace fanpulse {

struct PricePoint {
    Date date;
    double close = 0.0;
    std::string close_text;  // as written in the source, for rendering
};

struct PriceSeries {
    std::string symbol;
    std::vector<PricePoint> points;  // strictly date-ascending, closes > 0
};

// CSV with header date,symbol,close. Rows are sorted by date; a repeated date
// or a non-positive close is a data error, as is an empty series. Without a
// symbol filter the file must hold exactly one symbol.
PriceSeries load_prices(std::istream& source, std::optional<std::string> symbol = std::nullopt);
// Every symbol in a multi-symbol file.
std::map<std::string, PriceSeries> load_price_table(std::istream& source);
std::map<std::string, PriceSeries> load_price_table_file(const std::filesystem::path& path);

// Which close counts as "after" the event.
enum class PostCloseRule {
    on_or_after_end_date,  // first trading date >= the end instant's UTC date
    after_end_date,        // first trading date > the end instant's UTC date
};

struct AlignedPair {
    PricePoint pre;
    PricePoint post;

    double pre_close() const { return pre.close; }
    double post_close() const { return post.close; }
};

// pre: last trading date strictly before the start instant's UTC date.
// post: first trading date on/after the end instant's UTC date (or strictly
// after, per `rule`). Alignment error naming the missing side otherwise.
AlignedPair align(const PriceSeries& series, const MatchEvent& event,
                  PostCloseRule rule = PostCloseRule::on_or_after_end_date);

struct AlignedPrices {
    std::string symbol;
    std::map<int, AlignedPair> by_event;  // event ordinal -> pair
};

struct PopularityPoint {
    Date date;
    double value = 0.0;
};

struct PopularitySeries {
    std::string subject;
    std::vector<PopularityPoint> points;  // date-ascending, values in [0, 100]
};

// CSV with header date,subject,value.
PopularitySeries load_popularity(std::istream& source,
                                 std::optional<std::string> subject = std::nullopt);
std::map<std::string, PopularitySeries> load_popularity_table(std::istream& source);
std::map<std::string, PopularitySeries> load_popularity_table_file(const std::filesystem::path& path);

// Value on the last date on or before `day`, if any.
std::optional<double> popularity_at(const PopularitySeries& series, Date day);

}  // namespace fanpulse
