#include <gtest/gtest.h>

#include <sstream>

#include "fanpulse/error.hpp"
#include "fanpulse/market.hpp"
#include "common/support.hpp"

namespace fanpulse {
namespace {

PriceSeries prices(const std::string& rows) {
    std::istringstream in("date,symbol,close\n" + rows);
    return load_prices(in);
}

// The MRF closes of the Kohli trust/business table, on a weekday calendar
// without trading on Jun 9 and Jun 16.
const char* kMrf =
    "2017-06-01,MRF,67500\n"
    "2017-06-02,MRF,67716\n"
    "2017-06-05,MRF,68820.5\n"
    "2017-06-07,MRF,68986\n"
    "2017-06-08,MRF,72901.20313\n"
    "2017-06-12,MRF,73331.60156\n"
    "2017-06-14,MRF,71102.10156\n"
    "2017-06-15,MRF,71978.10156\n"
    "2017-06-19,MRF,71760.20313\n";

std::vector<MatchEvent> tournament() {
    return {test::event(1, "2017-06-04T09:30:00Z", "2017-06-04T17:15:00Z"),
            test::event(2, "2017-06-08T09:30:00Z", "2017-06-08T17:00:00Z"),
            test::event(3, "2017-06-11T09:30:00Z", "2017-06-11T15:45:00Z"),
            test::event(4, "2017-06-15T09:30:00Z", "2017-06-15T16:30:00Z"),
            test::event(5, "2017-06-18T09:30:00Z", "2017-06-18T16:45:00Z")};
}

TEST(LoadPrices, SortsRows) {
    const auto s = prices("2017-06-05,MRF,2\n2017-06-02,MRF,1\n");
    ASSERT_EQ(s.points.size(), 2u);
    EXPECT_EQ(format_date(s.points[0].date), "2017-06-02");
    EXPECT_EQ(s.points[1].close, 2.0);
    EXPECT_EQ(s.symbol, "MRF");
}

TEST(LoadPrices, EmptyIsError) {
    try {
        prices("");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::data);
        EXPECT_NE(std::string(e.what()).find("empty series"), std::string::npos);
    }
}

TEST(LoadPrices, FiveDates) {
    const auto s = prices("2017-06-01,X,1\n2017-06-02,X,2\n2017-06-05,X,3\n2017-06-06,X,4\n2017-06-07,X,5\n");
    EXPECT_EQ(s.points.size(), 5u);
}

TEST(LoadPrices, DataErrors) {
    for (const char* rows : {"2017-06-02,MRF,0\n", "2017-06-02,MRF,-3\n", "2017-06-02,MRF,1\n2017-06-02,MRF,2\n",
                             "2017-06-02,MRF,abc\n", "06/02/2017,MRF,1\n"}) {
        EXPECT_THROW(prices(rows), Error) << rows;
    }
}

TEST(LoadPrices, SymbolFilterAndTable) {
    const std::string text = "date,symbol,close\n2017-06-02,MRF,1\n2017-06-02,PEP,2\n2017-06-05,PEP,3\n";
    std::istringstream a(text);
    EXPECT_THROW(load_prices(a), Error);
    std::istringstream b(text);
    EXPECT_EQ(load_prices(b, "PEP").points.size(), 2u);
    std::istringstream c(text);
    const auto table = load_price_table(c);
    EXPECT_EQ(table.size(), 2u);
    EXPECT_EQ(table.at("MRF").points.size(), 1u);
}

TEST(LoadPrices, KeepsSourceText) {
    EXPECT_EQ(prices("2017-06-08,MRF,72901.20313\n").points[0].close_text, "72901.20313");
}

TEST(Align, FirstMatch) {
    const auto pair = align(prices(kMrf), tournament()[0]);
    EXPECT_EQ(pair.pre_close(), 67716.0);
    EXPECT_EQ(pair.post_close(), 68820.5);
}

TEST(Align, KohliMrfChaining) {
    const auto series = prices(kMrf);
    const auto events = tournament();
    const auto m2 = align(series, events[1]);
    const auto m3 = align(series, events[2]);
    EXPECT_EQ(m2.post_close(), 72901.20313);
    EXPECT_EQ(m3.pre_close(), 72901.20313);
    const std::vector<std::pair<double, double>> expected = {{67716, 68820.5},
                                                             {68986, 72901.20313},
                                                             {72901.20313, 73331.60156},
                                                             {71102.10156, 71978.10156},
                                                             {71978.10156, 71760.20313}};
    for (std::size_t i = 0; i < events.size(); ++i) {
        const auto pair = align(series, events[i]);
        EXPECT_EQ(pair.pre_close(), expected[i].first) << i;
        EXPECT_EQ(pair.post_close(), expected[i].second) << i;
    }
}

TEST(Align, EventOnSeriesDateUsesPriorClose) {
    const auto s = prices("2017-06-07,X,1\n2017-06-08,X,2\n2017-06-09,X,3\n");
    const auto pair = align(s, test::event(1, "2017-06-08T09:00:00Z", "2017-06-08T17:00:00Z"));
    EXPECT_EQ(pair.pre_close(), 1.0);
    EXPECT_EQ(pair.post_close(), 2.0);
    const auto strict = align(s, test::event(1, "2017-06-08T09:00:00Z", "2017-06-08T17:00:00Z"),
                              PostCloseRule::after_end_date);
    EXPECT_EQ(strict.post_close(), 3.0);
}

TEST(Align, WeekendUsesFridayAndMonday) {
    const auto s = prices("2017-06-01,X,10\n2017-06-02,X,11\n2017-06-05,X,12\n2017-06-06,X,13\n");
    const auto pair = align(s, test::event(1, "2017-06-04T09:30:00Z", "2017-06-04T17:15:00Z"));
    EXPECT_EQ(format_date(pair.pre.date), "2017-06-02");
    EXPECT_EQ(format_date(pair.post.date), "2017-06-05");
}

TEST(Align, OutsideSpanIsAlignmentError) {
    const auto s = prices("2017-06-05,X,1\n2017-06-06,X,2\n");
    for (const auto& e : {test::event(3, "2017-06-04T09:30:00Z", "2017-06-04T17:00:00Z"),
                          test::event(3, "2017-06-07T09:30:00Z", "2017-06-07T17:00:00Z")}) {
        try {
            align(s, e);
            FAIL();
        } catch (const Error& err) {
            EXPECT_EQ(err.kind(), ErrorKind::alignment);
            EXPECT_NE(std::string(err.what()).find("M3"), std::string::npos) << err.what();
        }
    }
}

TEST(AlignProperty, NoLookaheadNoLookback) {
    const auto series = prices(kMrf);
    for (int day = 2; day <= 18; ++day) {
        const std::string d = (day < 10 ? "2017-06-0" : "2017-06-") + std::to_string(day);
        const auto e = test::event(1, d + "T09:00:00Z", d + "T18:00:00Z");
        try {
            const auto pair = align(series, e);
            EXPECT_LT(pair.pre.date, date_of(e.start));
            EXPECT_GE(pair.post.date, date_of(e.end));
            EXPECT_EQ(align(series, e).pre_close(), pair.pre_close());
        } catch (const Error& err) {
            EXPECT_EQ(err.kind(), ErrorKind::alignment);
        }
    }
}

PopularitySeries popularity(const std::string& rows) {
    std::istringstream in("date,subject,value\n" + rows);
    return load_popularity(in);
}

TEST(Popularity, Boundaries) {
    EXPECT_EQ(popularity("2017-06-01,VK,100\n").points[0].value, 100.0);
    EXPECT_THROW(popularity("2017-06-01,VK,-1\n"), Error);
    EXPECT_THROW(popularity("2017-06-01,VK,100.5\n"), Error);
}

TEST(Popularity, SevenRows) {
    std::string rows;
    for (int d = 1; d <= 7; ++d) rows += "2017-06-0" + std::to_string(d) + ",VK," + std::to_string(d * 10) + "\n";
    const auto s = popularity(rows);
    EXPECT_EQ(s.points.size(), 7u);
    EXPECT_EQ(popularity_at(s, *parse_date("2017-06-09")), 70.0);
    EXPECT_EQ(popularity_at(s, *parse_date("2017-06-03")), 30.0);
    EXPECT_FALSE(popularity_at(s, *parse_date("2017-05-31")));
}

}  // namespace
}  // namespace fanpulse
