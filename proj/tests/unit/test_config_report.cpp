#include <gtest/gtest.h>

#include <sstream>

#include "fanpulse/config.hpp"
#include "fanpulse/error.hpp"
#include "fanpulse/report.hpp"

namespace fanpulse {
namespace {

TEST(Config, ParsesAndResolvesPaths) {
    std::istringstream in(
        "# demo\n"
        "tweets = t.jsonl\n"
        "lexicon = /abs/lex.tsv\n"
        "window_hours = 6.5\n"
        "mode = both\n"
        "out_format = md\n"
        "threads = 3\n"
        "cluster_mode = exclusive\n"
        "post_close = after\n"
        "deterministic = yes\n");
    const auto c = parse_config(in, "/base");
    EXPECT_EQ(c.tweets, std::filesystem::path("/base/t.jsonl"));
    EXPECT_EQ(c.lexicon, std::filesystem::path("/abs/lex.tsv"));
    EXPECT_EQ(c.window_hours, 6.5);
    EXPECT_EQ(c.modes, (std::vector<SeriesMode>{SeriesMode::delta, SeriesMode::level}));
    EXPECT_EQ(c.out_format, OutFormat::md);
    EXPECT_EQ(c.threads, 3u);
    EXPECT_EQ(c.cluster_mode, ClusterMode::exclusive);
    EXPECT_EQ(c.post_rule, PostCloseRule::after_end_date);
    EXPECT_TRUE(c.deterministic);
}

TEST(Config, Defaults) {
    std::istringstream in("");
    const auto c = parse_config(in, "");
    EXPECT_EQ(c.window_hours, 4.0);
    EXPECT_EQ(c.modes, std::vector<SeriesMode>{SeriesMode::delta});
    EXPECT_EQ(c.out_format, OutFormat::csv);
    EXPECT_EQ(c.cluster_mode, ClusterMode::inclusive);
    EXPECT_EQ(c.post_rule, PostCloseRule::on_or_after_end_date);
}

TEST(Config, ErrorsCarryLine) {
    for (const char* bad : {"window_hours = 0\n", "window_hours = -2\n", "window_hours = abc\n", "mode = both2\n",
                            "colour = red\n", "no equals sign\n", "threads = -1\n", "out_format = xml\n"}) {
        std::istringstream in(std::string("# ok\n") + bad);
        try {
            parse_config(in, "");
            FAIL() << bad;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::config) << bad;
            EXPECT_EQ(e.line(), 2u) << bad;
        }
    }
}

TEST(Config, InputFiles) {
    RunConfig c;
    c.tweets = "t";
    c.popularity = "p";
    const auto files = input_files(c);
    std::vector<std::string> roles;
    for (const auto& [role, path] : files) roles.push_back(role);
    EXPECT_EQ(roles, (std::vector<std::string>{"tweets", "lexicon", "stopwords", "players", "matches", "prices",
                                               "popularity"}));
}

TEST(FormatFixed, RoundsHalfUpOnShortestRepresentation) {
    EXPECT_EQ(format_fixed(0.12345), "0.1235");
    EXPECT_EQ(format_fixed(0.12344999), "0.1234");
    EXPECT_EQ(format_fixed(0.1880), "0.1880");
    EXPECT_EQ(format_fixed(1880.0 / 9996.0), "0.1881");
    EXPECT_EQ(format_fixed(0.99995), "1.0000");
    EXPECT_EQ(format_fixed(9.99995), "10.0000");
    EXPECT_EQ(format_fixed(-0.00004), "0.0000");
    EXPECT_EQ(format_fixed(-0.0352), "-0.0352");
    EXPECT_EQ(format_fixed(-0.03525), "-0.0353");
    EXPECT_EQ(format_fixed(2.0, 0), "2");
    EXPECT_EQ(format_fixed(1e21), "1000000000000000000000.0000");
}

TEST(FormatExact, RoundTrips) {
    for (double v : {0.1, 1.0 / 3.0, 72901.20313, -1e-300, 12345678.9}) {
        EXPECT_EQ(std::stod(format_exact(v)), v);
    }
}

}  // namespace
}  // namespace fanpulse
