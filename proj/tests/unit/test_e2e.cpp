#include <gtest/gtest.h>

#include <json.hpp>

#include "common/scenarios.hpp"

namespace fanpulse {
namespace {

using test::TempDir;

TEST(Golden, PreprocessingBags) {
    const auto cases = test::golden_cases(test::fixtures() / "preprocess_golden.tsv");
    ASSERT_EQ(cases.size(), 25u);
    const auto rules = test::shipped_rules(FANPULSE_DATA);
    for (const auto& c : cases) {
        const Tweet t = test::tweet("1", "2017-06-04T08:00:00Z", c.text);
        const auto result = pre_process(std::span<const Tweet>(&t, 1), rules);
        const std::string got = result.kept.empty() ? "" : result.kept.front().bag.joined();
        EXPECT_EQ(got, c.expected) << c.text;
    }
}

// Values printed by tests/fixtures/e2e/oracle.py.
constexpr double kOracleTrustLevel = -0.729500745497076;

TEST(EndToEnd, TrustCorrelationMatchesOracle) {
    TempDir tmp("e2e");
    const auto files = test::run_e2e(tmp.path(), 1, 0, "json");
    const auto doc = nlohmann::json::parse(files.at("correlations.json"));
    const auto& player = doc.at("players").at(0);
    ASSERT_EQ(player.at("acronym"), "VK");
    const auto& brand = player.at("brands").at(0);
    ASSERT_EQ(brand.at("symbol"), "MRF");
    int seen = 0;
    for (const auto& cell : brand.at("correlations")) {
        if (cell.at("category") != "trust") continue;
        ++seen;
        if (cell.at("mode") == "level") {
            EXPECT_EQ(cell.at("n"), 4);
            EXPECT_NEAR(cell.at("r").get<double>(), kOracleTrustLevel, 1e-12);
        } else {
            EXPECT_EQ(cell.at("n"), 2);
            EXPECT_EQ(cell.at("r").get<double>(), -1.0);
        }
    }
    EXPECT_EQ(seen, 2);
}

TEST(EndToEnd, OracleCounts) {
    TempDir tmp("e2e");
    const auto files = test::run_e2e(tmp.path(), 1);
    const auto& profiles = files.at("profiles.csv");
    EXPECT_NE(profiles.find("VK,M1,Pre,1,7,2,6,9,3,3,13,"), std::string::npos) << profiles;
    EXPECT_NE(profiles.find("VK,M1,Post,1,5,0,1,8,1,2,8,"), std::string::npos);
    EXPECT_NE(profiles.find("VK,M2,Pre,3,4,3,7,3,5,2,4,"), std::string::npos);
    EXPECT_NE(profiles.find("VK,M2,Post,5,4,6,9,4,11,3,5,"), std::string::npos);
}

TEST(EndToEnd, ByteIdenticalAcrossThreadsAndOrder) {
    TempDir tmp("e2e");
    const auto base = test::run_e2e(tmp / "base", 1);
    ASSERT_EQ(base.size(), 5u);
    EXPECT_EQ(test::run_e2e(tmp / "again", 1), base);
    for (unsigned threads : {4u, 16u}) {
        EXPECT_EQ(test::run_e2e(tmp / ("t" + std::to_string(threads)), threads), base) << threads;
    }
    for (std::uint64_t seed : {11u, 12u, 13u}) {
        EXPECT_EQ(test::run_e2e(tmp / ("s" + std::to_string(seed)), 16, seed), base) << seed;
    }
}

}  // namespace
}  // namespace fanpulse
