#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "fanpulse/cluster.hpp"
#include "fanpulse/error.hpp"
#include "fanpulse/preprocess.hpp"

namespace fanpulse {
namespace {

PlayerProfile player(const std::string& acronym, std::set<std::string> keywords) {
    PlayerProfile p;
    p.name = acronym;
    p.acronym = acronym;
    p.keywords = std::move(keywords);
    return p;
}

std::set<std::string> assign_text(const std::string& text, const ClusterIndex& index,
                                  ClusterMode mode = ClusterMode::inclusive) {
    CleaningRules rules;
    rules.stopwords = {"the", "it"};
    return assign_clusters(tokenize_and_filter(clean_text(text, rules), rules), text, index, mode);
}

TEST(Index, SingleProfile) {
    const auto idx = ClusterIndex::build({player("VK", {"virat", "kohli"})});
    EXPECT_EQ(idx.key_count(), 2u);
    EXPECT_EQ(*idx.lookup("virat"), std::set<std::string>{"VK"});
    EXPECT_EQ(*idx.lookup("kohli"), std::set<std::string>{"VK"});
    EXPECT_EQ(idx.lookup("rohit"), nullptr);
}

TEST(Index, SharedKeyword) {
    const auto idx = ClusterIndex::build({player("YS", {"yuvraj", "singh"}), player("HP", {"singh", "hardik"})});
    EXPECT_EQ(*idx.lookup("singh"), (std::set<std::string>{"YS", "HP"}));
}

TEST(Index, KeyCountIsDistinctKeywords) {
    std::vector<PlayerProfile> players = {
        player("VK", {"virat", "kohli", "imvkohli"}),   player("RS", {"rohit", "sharma", "imro45"}),
        player("SD", {"shikhar", "dhawan"}),             player("YS", {"yuvraj", "singh", "yuvisofficial"}),
        player("KJ", {"kedar", "jadhav"}),               player("MSD", {"dhoni", "msdhoni", "mahi"}),
        player("HP", {"hardik", "pandya", "hardikpandya7"}), player("RJ", {"jadeja", "ravindra", "imjadeja"}),
        player("BK", {"bhuvneshwar", "kumar", "bhuvi"}), player("RA", {"ashwin", "ashwinravi99"}),
        player("JB", {"jasprit", "bumrah", "singh"}),
    };
    // 30 keywords, "singh" shared by YS and JB
    EXPECT_EQ(ClusterIndex::build(players).key_count(), 29u);
}

TEST(Index, ConfigErrors) {
    const auto kind = [](const std::vector<PlayerProfile>& ps) {
        try {
            ClusterIndex::build(ps);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::usage;
    };
    EXPECT_EQ(kind({}), ErrorKind::config);
    EXPECT_EQ(kind({player("VK", {"virat"}), player("VK", {"kohli"})}), ErrorKind::config);
    EXPECT_EQ(kind({player("VK", {})}), ErrorKind::config);
}

TEST(Load, PlayersJson) {
    std::istringstream in(R"({"players":[{"name":"Virat Kohli","acronym":"VK",
        "keywords":["Virat","@imVkohli","#ViratKohli"],"brands":["MRF"],
        "performance":{"M1":"81","M2":"0"}}]})");
    const auto players = load_players(in);
    ASSERT_EQ(players.size(), 1u);
    EXPECT_EQ(players[0].keywords, (std::set<std::string>{"virat", "imvkohli", "viratkohli"}));
    EXPECT_EQ(players[0].brands, std::vector<std::string>{"MRF"});
    EXPECT_EQ(players[0].performance.at(1), "81");
    EXPECT_EQ(players[0].performance.at(2), "0");
}

const ClusterIndex& kohli_and_rohit() {
    static const ClusterIndex idx = ClusterIndex::build(
        {player("VK", {"imvkohli", "virat", "viratkohli"}), player("RS", {"rohit", "imro45"})});
    return idx;
}

TEST(Assign, HandleExample) {
    EXPECT_EQ(assign_text("what a knock by @imVkohli", kohli_and_rohit()), std::set<std::string>{"VK"});
    EXPECT_EQ(assign_text("imvkohli is the king", kohli_and_rohit()), std::set<std::string>{"VK"});
}

TEST(Assign, HashtagExample) {
    EXPECT_EQ(assign_text("#ViratKohli wins it", kohli_and_rohit()), std::set<std::string>{"VK"});
}

TEST(Assign, Unclustered) { EXPECT_TRUE(assign_text("great weather", kohli_and_rohit()).empty()); }

TEST(Assign, TwoPlayers) {
    const std::string text = "Virat and Rohit put on a show";
    EXPECT_EQ(assign_text(text, kohli_and_rohit()), (std::set<std::string>{"VK", "RS"}));
    EXPECT_TRUE(assign_text(text, kohli_and_rohit(), ClusterMode::exclusive).empty());
    EXPECT_EQ(assign_text("Virat again", kohli_and_rohit(), ClusterMode::exclusive), std::set<std::string>{"VK"});
}

TEST(Assign, WholeTokenOnly) {
    EXPECT_TRUE(assign_text("greetings from rohitabad", kohli_and_rohit()).empty());
    EXPECT_TRUE(assign_text("https://rohit.example.com/virat", kohli_and_rohit()).empty());
}

TEST(Assign, UnderscoreHandles) {
    const auto idx = ClusterIndex::build({player("VK", {"virat_kohli"})});
    EXPECT_EQ(assign_text("go @Virat_Kohli", idx), std::set<std::string>{"VK"});
}

TEST(ClusterProperty, MonotoneInKeywords) {
    std::mt19937_64 rng(5);
    const std::vector<std::string> vocab = {"virat", "kohli", "rohit", "dhoni", "mahi", "great", "win", "imro45"};
    for (int i = 0; i < 500; ++i) {
        std::string text;
        for (int k = 0; k < 5; ++k) text += (rng() % 3 ? "" : "#") + vocab[rng() % vocab.size()] + " ";
        std::set<std::string> vk = {"virat"}, rs = {"rohit"};
        auto before = assign_text(text, ClusterIndex::build({player("VK", vk), player("RS", rs)}));
        vk.insert(vocab[rng() % vocab.size()]);
        rs.insert(vocab[rng() % vocab.size()]);
        const auto after = assign_text(text, ClusterIndex::build({player("VK", vk), player("RS", rs)}));
        for (const auto& a : before) EXPECT_TRUE(after.count(a)) << text;
    }
}

}  // namespace
}  // namespace fanpulse
