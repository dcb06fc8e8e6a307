#include <gtest/gtest.h>

#include <sstream>

#include "fanpulse/csv.hpp"
#include "fanpulse/error.hpp"
#include "fanpulse/parallel.hpp"
#include "fanpulse/timeutil.hpp"
#include "fanpulse/unicode.hpp"

namespace fanpulse {
namespace {

TEST(Time, ParsesUtcAndOffsets) {
    const auto z = parse_instant("2017-06-04T10:00:00Z");
    ASSERT_TRUE(z);
    EXPECT_EQ(format_instant(*z), "2017-06-04T10:00:00Z");
    EXPECT_EQ(parse_instant("2017-06-04T15:30:00+05:30"), z);
    EXPECT_EQ(parse_instant("2017-06-04 05:00:00-05:00"), z);
    EXPECT_EQ(parse_instant("2017-06-04T10:00:00.987Z"), z);
}

TEST(Time, RejectsMissingOffsetAndGarbage) {
    EXPECT_FALSE(parse_instant("2017-06-04T10:00:00"));
    EXPECT_FALSE(parse_instant("2017-02-30T10:00:00Z"));
    EXPECT_FALSE(parse_instant("2017-06-04T25:00:00Z"));
    EXPECT_FALSE(parse_instant("yesterday"));
    EXPECT_FALSE(parse_instant(""));
}

TEST(Time, Dates) {
    const auto d = parse_date("2017-06-18");
    ASSERT_TRUE(d);
    EXPECT_EQ(format_date(*d), "2017-06-18");
    EXPECT_FALSE(parse_date("2017-13-01"));
    EXPECT_FALSE(parse_date("2017-06-18x"));
    EXPECT_EQ(date_of(*parse_instant("2017-06-18T23:59:59Z")), *d);
}

TEST(Csv, QuotedFieldsAndLines) {
    std::istringstream in("a,b\n\n\"x, y\",\"he said \"\"hi\"\"\"\n\"multi\nline\",z\n");
    csv::Reader reader(in);
    csv::Record r;
    ASSERT_TRUE(reader.next(r));
    EXPECT_EQ(r.fields, (std::vector<std::string>{"a", "b"}));
    ASSERT_TRUE(reader.next(r));
    EXPECT_EQ(r.line, 3u);
    EXPECT_EQ(r.fields, (std::vector<std::string>{"x, y", "he said \"hi\""}));
    ASSERT_TRUE(reader.next(r));
    EXPECT_EQ(r.fields, (std::vector<std::string>{"multi\nline", "z"}));
    EXPECT_FALSE(reader.next(r));
}

TEST(Csv, UnterminatedQuoteIsMalformed) {
    std::istringstream in("\"open,field\n");
    csv::Reader reader(in);
    csv::Record r;
    ASSERT_TRUE(reader.next(r));
    EXPECT_TRUE(r.malformed);
}

TEST(Csv, EscapeRoundTrips) {
    const std::vector<std::string> fields = {"plain", "a,b", "q\"q", "nl\nx", ""};
    std::istringstream in(csv::join(fields) + "\n");
    csv::Reader reader(in);
    csv::Record r;
    ASSERT_TRUE(reader.next(r));
    EXPECT_EQ(r.fields, fields);
}

TEST(Unicode, FoldAndNormalize) {
    EXPECT_EQ(unicode::fold_case("ViRaT"), "virat");
    EXPECT_EQ(unicode::fold_case("STRASSE"), "strasse");
    EXPECT_EQ(unicode::fold_case("Straße"), "strasse");
    // e + combining acute composes to a single code point
    EXPECT_EQ(unicode::nfc("e\xCC\x81"), "\xC3\xA9");
    EXPECT_TRUE(unicode::is_valid_utf8("ok \xC3\xA9"));
    EXPECT_FALSE(unicode::is_valid_utf8("bad \xC3"));
}

TEST(Unicode, WordSpans) {
    const std::string text = "India's 300 runs, नमस्ते!";
    std::vector<std::string> words;
    for (const auto& s : unicode::word_spans(text)) words.emplace_back(s.of(text));
    EXPECT_EQ(words, (std::vector<std::string>{"India", "s", "300", "runs", "नमस्ते"}));
    EXPECT_TRUE(unicode::is_number("300"));
    EXPECT_FALSE(unicode::is_number("3rd"));
}

TEST(Unicode, RepeatedLetters) {
    EXPECT_TRUE(unicode::has_repeated_letter("wowww"));
    EXPECT_TRUE(unicode::has_repeated_letter("sOoO"));
    EXPECT_FALSE(unicode::has_repeated_letter("good"));
    EXPECT_FALSE(unicode::has_repeated_letter("1000"));
}

TEST(Parallel, ChunksCoverRangeInOrder) {
    for (unsigned threads : {1u, 3u, 8u, 64u}) {
        std::vector<int> hits(37, 0);
        for_each_chunk(hits.size(), threads, [&](std::size_t, std::size_t b, std::size_t e) {
            for (std::size_t i = b; i < e; ++i) ++hits[i];
        });
        for (int h : hits) EXPECT_EQ(h, 1);
    }
}

TEST(Parallel, RethrowsFirstChunkError) {
    try {
        for_each_chunk(100, 4, [](std::size_t chunk, std::size_t, std::size_t) {
            if (chunk >= 1) throw Error(ErrorKind::data, "chunk " + std::to_string(chunk));
        });
        FAIL() << "expected an exception";
    } catch (const Error& e) {
        EXPECT_STREQ(e.what(), "chunk 1");
    }
}

TEST(Errors, LineAndStage) {
    const Error e(ErrorKind::parse, "bad flag", 7);
    EXPECT_EQ(e.line(), 7u);
    EXPECT_STREQ(e.what(), "line 7: bad flag");
    const Error tagged = e.with_stage("score");
    EXPECT_EQ(tagged.kind(), ErrorKind::parse);
    EXPECT_EQ(tagged.stage(), "score");
    EXPECT_STREQ(tagged.what(), "[score] line 7: bad flag");
}

}  // namespace
}  // namespace fanpulse
