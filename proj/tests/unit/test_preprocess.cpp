#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "fanpulse/error.hpp"
#include "fanpulse/preprocess.hpp"
#include "fanpulse/unicode.hpp"
#include "common/support.hpp"

namespace fanpulse {
namespace {

CleaningRules example_rules() {
    CleaningRules rules;
    rules.acronyms = {{"icymi", "In case you missed it"}};
    rules.extraneous_patterns = {"CT", "ODI", "BCCI", "INDvsPAK", "India", "Sri Lanka"};
    rules.stopwords = {"the", "was", "a", "an", "s", "it", "in", "is"};
    return rules;
}

TokenBag bag_of(std::initializer_list<std::pair<const char*, std::uint64_t>> items) {
    TokenBag bag;
    for (const auto& [w, n] : items) bag.add(w, n);
    return bag;
}

TEST(StripNoise, Examples) {
    EXPECT_EQ(strip_noise("great win https://t.co/abc"), "great win ");
    EXPECT_EQ(strip_noise("no links here"), "no links here");
    EXPECT_EQ(strip_noise("www.bse.com and http://x.y both"), " and  both");
}

TEST(StripNoise, NeverGrows) {
    for (const char* s : {"a http://b c", "xwww.y", "ftp://q", "", "www."}) {
        EXPECT_LE(strip_noise(s).size(), std::string_view(s).size());
    }
    EXPECT_EQ(strip_noise("awww.what"), "awww.what");
}

TEST(ExpandAcronyms, Examples) {
    const auto rules = example_rules();
    EXPECT_EQ(expand_acronyms("ICYMI India won", rules), "In case you missed it India won");
    EXPECT_EQ(expand_acronyms("", rules), "");
    EXPECT_EQ(expand_acronyms("icymi icymi", rules), "In case you missed it In case you missed it");
}

TEST(ExpandAcronyms, WholeWordSinglePass) {
    CleaningRules rules;
    rules.acronyms = {{"a", "b a"}, {"icymi", "x"}};
    EXPECT_EQ(expand_acronyms("a", rules), "b a");
    EXPECT_EQ(expand_acronyms("icymix ICYMI:", rules), "icymix x:");
}

TEST(SquashElongated, Examples) {
    EXPECT_EQ(squash_elongated("wowww great"), " great");
    EXPECT_EQ(squash_elongated("good game"), "good game");
    EXPECT_EQ(squash_elongated("soooo happyyy yes"), " yes");
}

TEST(SquashElongated, DigitsAndPunctuationDoNotCount) {
    EXPECT_EQ(squash_elongated("scored 1000 runs!!!"), "scored 1000 runs!!!");
    EXPECT_EQ(squash_elongated("go Hooe WOOOW"), "go Hooe");
}

TEST(RemoveExtraneous, Examples) {
    const auto rules = example_rules();
    EXPECT_EQ(remove_extraneous("@fan CT final BCCI rocks", rules), "  final  rocks");
    EXPECT_EQ(remove_extraneous("plain text", rules), "plain text");
    EXPECT_EQ(remove_extraneous("#dhoni finishes", rules), "dhoni finishes");
}

TEST(RemoveExtraneous, WholeWordCaseInsensitive) {
    const auto rules = example_rules();
    EXPECT_EQ(remove_extraneous("ct Ct CTs act", rules), "  CTs act");
    EXPECT_EQ(remove_extraneous("vs sri lanka today", rules), "vs  today");
    EXPECT_EQ(remove_extraneous("@virat_kohli rocks", rules), " rocks");
    EXPECT_EQ(remove_extraneous("#INDvsPAK!", rules), "!");
    EXPECT_EQ(remove_extraneous("win#dhoni", rules), "win dhoni");
}

TEST(Tokenize, Examples) {
    CleaningRules rules;
    rules.stopwords = {"the", "was"};
    EXPECT_EQ(tokenize_and_filter("The match was great great", rules), bag_of({{"match", 1}, {"great", 2}}));
    rules.stopwords = {"a", "an", "the"};
    EXPECT_TRUE(tokenize_and_filter("a an the", rules).empty());
    rules.stopwords = {"s"};
    EXPECT_EQ(tokenize_and_filter("India's 300 runs", rules), bag_of({{"india", 1}, {"runs", 1}}));
}

TEST(Tokenize, StopwordsCanBeDisabled) {
    CleaningRules rules;
    rules.remove_stopwords = false;
    rules.stopwords = {"the"};
    EXPECT_EQ(tokenize_and_filter("the the", rules), bag_of({{"the", 2}}));
}

TEST(Tokenize, NonLatinPassesThrough) {
    CleaningRules rules;
    rules.stopwords = {"x"};
    const auto bag = tokenize_and_filter("विराट जीत", rules);
    EXPECT_EQ(bag.count("विराट"), 1u);
    EXPECT_EQ(bag.count("जीत"), 1u);
}

TEST(PreProcess, ComposedExample) {
    const auto rules = example_rules();
    Tweet t = test::tweet("1", "2017-06-04T10:00:00Z", "ICYMI @x Kohli great https://t.co/z");
    // expand -> "In case you missed it @x Kohli great " ; '@x' dropped;
    // stopwords in, it removed.
    const auto result = pre_process(std::span(&t, 1), rules);
    ASSERT_EQ(result.kept.size(), 1u);
    EXPECT_EQ(result.kept[0].bag,
              bag_of({{"case", 1}, {"you", 1}, {"missed", 1}, {"kohli", 1}, {"great", 1}}));
}

TEST(PreProcess, EmptyTweetDropped) {
    const std::vector<Tweet> tweets = {test::tweet("1", "2017-06-04T10:00:00Z", ""),
                                       test::tweet("2", "2017-06-04T10:00:00Z", "the was"),
                                       test::tweet("3", "2017-06-04T10:00:00Z", "great")};
    const auto result = pre_process(tweets, example_rules());
    EXPECT_EQ(result.dropped, 2u);
    ASSERT_EQ(result.kept.size(), 1u);
    EXPECT_EQ(result.kept[0].tweet.id, "3");
}

TEST(PreProcess, IdenticalTweetsIdenticalBags) {
    const std::vector<Tweet> tweets = {test::tweet("1", "2017-06-04T10:00:00Z", "#Dhoni finishes it off!!"),
                                       test::tweet("2", "2017-06-04T10:00:00Z", "#Dhoni finishes it off!!")};
    const auto result = pre_process(tweets, example_rules());
    ASSERT_EQ(result.kept.size(), 2u);
    EXPECT_EQ(result.kept[0].bag, result.kept[1].bag);
}

TEST(Loaders, FilesWithComments) {
    std::istringstream sw("# english\nThe\n\nwas\n");
    EXPECT_EQ(load_stopwords(sw), (std::set<std::string, std::less<>>{"the", "was"}));
    std::istringstream ac("# acronyms\nICYMI\tin case you missed it\nTBH\tto be honest\n");
    const auto acronyms = load_acronyms(ac);
    EXPECT_EQ(acronyms.at("icymi"), "in case you missed it");
    std::istringstream dup("ICYMI\ta\nicymi\tb\n");
    try {
        load_acronyms(dup);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::schema);
        EXPECT_EQ(e.line(), 2u);
    }
    std::istringstream pat("CT\n# comment\nSri Lanka\n");
    EXPECT_EQ(load_patterns(pat), (std::vector<std::string>{"CT", "Sri Lanka"}));
}

TEST(Loaders, EmptyStopwordsWithRemovalIsConfigError) {
    CleaningRules rules;
    try {
        validate_rules(rules);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::config);
    }
    rules.remove_stopwords = false;
    EXPECT_NO_THROW(validate_rules(rules));
}

// Random tweet-like strings from a vocabulary that exercises every stage.
std::string random_text(std::mt19937_64& rng) {
    static const std::vector<std::string> parts = {
        "ICYMI", "icymi", "@fan_1", "#Kohli", "CT", "ct", "BCCI", "http://t.co/x1", "www.a.com/b",
        "wowww", "soooo", "great", "Great", "win!", "India's", "300", "the", "was", "a", "Sri",
        "Lanka", "Sri Lanka", "नमस्ते", "é", "e\xCC\x81", "x#y", "#", "@", "...", "run-rate", "k0hli",
        "ODI,", "\t", "  ", "it's", "IS", "in"};
    std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
    std::uniform_int_distribution<int> len(0, 12);
    std::string s;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) {
        if (i) s += rng() % 5 ? " " : "";
        s += parts[pick(rng)];
    }
    return s;
}

TEST(PreprocessProperty, PureAndStopwordFree) {
    const auto rules = example_rules();
    std::mt19937_64 rng(7);
    std::vector<Tweet> tweets;
    for (int i = 0; i < 2000; ++i) {
        tweets.push_back(test::tweet(std::to_string(i), "2017-06-04T10:00:00Z", random_text(rng)));
    }
    const auto a = pre_process(tweets, rules, 1);
    const auto b = pre_process(tweets, rules, 6);
    ASSERT_EQ(a.kept.size(), b.kept.size());
    EXPECT_EQ(a.dropped, b.dropped);
    EXPECT_EQ(a.kept.size() + a.dropped, tweets.size());
    for (std::size_t i = 0; i < a.kept.size(); ++i) {
        EXPECT_EQ(a.kept[i].tweet, b.kept[i].tweet);
        EXPECT_EQ(a.kept[i].bag, b.kept[i].bag);
        for (const auto& [token, n] : a.kept[i].bag) {
            EXPECT_FALSE(rules.stopwords.count(token)) << token;
            EXPECT_FALSE(token.empty());
            EXPECT_EQ(token.find_first_of(" \t\n"), std::string::npos);
            EXPECT_GT(n, 0u);
        }
    }
}

TEST(PreprocessProperty, NeverInventsTokens) {
    const auto rules = example_rules();
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        const std::string text = random_text(rng);
        const std::string expanded =
            unicode::fold_case(unicode::nfc(expand_acronyms(strip_noise(unicode::nfc(text)), rules)));
        for (const auto& [token, n] : tokenize_and_filter(clean_text(text, rules), rules)) {
            EXPECT_NE(expanded.find(token), std::string::npos) << "'" << token << "' from '" << text << "'";
        }
    }
}

TEST(PreprocessProperty, TokenizeIdempotentOnJoinedOutput) {
    const auto rules = example_rules();
    std::mt19937_64 rng(13);
    for (int i = 0; i < 2000; ++i) {
        const auto bag = tokenize_and_filter(clean_text(random_text(rng), rules), rules);
        EXPECT_EQ(tokenize_and_filter(bag.joined(), rules), bag);
    }
}

TEST(PreprocessProperty, StagesArePure) {
    const auto rules = example_rules();
    std::mt19937_64 rng(17);
    for (int i = 0; i < 500; ++i) {
        const std::string text = random_text(rng);
        EXPECT_EQ(clean_text(text, rules), clean_text(text, rules));
        EXPECT_EQ(squash_elongated(text), squash_elongated(text));
        EXPECT_LE(strip_noise(text).size(), text.size());
    }
}

}  // namespace
}  // namespace fanpulse
