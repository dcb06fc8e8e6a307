#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "fanpulse/corpus.hpp"
#include "fanpulse/lexicon.hpp"
#include "fanpulse/preprocess.hpp"

namespace fanpulse {

// Raw per-category counts in canonical order.
class EmotionVector {
public:
    using Counts = std::array<std::uint64_t, kCategoryCount>;

    EmotionVector() = default;
    explicit EmotionVector(const Counts& counts) : counts_(counts) {}

    std::uint64_t operator[](EmotionCategory c) const { return counts_[index_of(c)]; }
    std::uint64_t& operator[](EmotionCategory c) { return counts_[index_of(c)]; }
    const Counts& counts() const { return counts_; }

    // Adds `times` copies of an association vector.
    void add(const Association& flags, std::uint64_t times = 1);

    std::uint64_t emotion_total() const;
    std::uint64_t sentiment_total() const;
    bool is_zero() const { return emotion_total() == 0 && sentiment_total() == 0; }

    EmotionVector& operator+=(const EmotionVector& other);
    friend EmotionVector operator+(EmotionVector a, const EmotionVector& b) { return a += b; }
    friend EmotionVector operator*(EmotionVector v, std::uint64_t k);
    friend bool operator==(const EmotionVector&, const EmotionVector&) = default;

private:
    Counts counts_{};
};

// Sum over tokens, with multiplicity, of their association vectors.
EmotionVector score_bag(const TokenBag& bag, const Lexicon& lexicon);

struct ProfileKey {
    std::string acronym;
    int event_ordinal = 0;
    Phase phase = Phase::pre;

    friend auto operator<=>(const ProfileKey&, const ProfileKey&) = default;
};

struct ScoredTweet {
    std::set<std::string> clusters;
    int event_ordinal = 0;
    Phase phase = Phase::pre;
    EmotionVector vector;
};

struct Tally {
    EmotionVector raw;
    std::uint64_t tweets = 0;

    Tally& operator+=(const Tally& other) {
        raw += other.raw;
        tweets += other.tweets;
        return *this;
    }
    friend bool operator==(const Tally&, const Tally&) = default;
};

using Aggregate = std::map<ProfileKey, Tally>;

// Groups by (acronym, event, phase); a tweet in several clusters counts in
// each. Entries whose phase is Outside are ignored. The parallel overload
// folds contiguous partitions independently and merges them; integer sums
// make the result identical to the sequential fold.
Aggregate aggregate(std::span<const ScoredTweet> scored);
Aggregate aggregate(std::span<const ScoredTweet> scored, unsigned threads);
void merge_into(Aggregate& into, const Aggregate& from);

struct Proportions {
    std::array<double, kEmotionCount> emotions{};
    std::array<double, kSentimentCount> sentiments{};
    bool emotions_empty = true;
    bool sentiments_empty = true;

    double of(EmotionCategory c) const {
        return is_sentiment(c) ? sentiments[index_of(c) - kEmotionCount] : emotions[index_of(c)];
    }
    std::array<double, kCategoryCount> all() const;
};

// Emotions are divided by the sum of the eight emotion counts, sentiments by
// the sum of the two sentiment counts. A zero denominator leaves that block
// at zero and flags it empty.
Proportions normalize(const EmotionVector& raw);

struct EmotionProfile {
    std::string acronym;
    int event_ordinal = 0;
    Phase phase = Phase::pre;
    EmotionVector raw;
    Proportions props;
    std::uint64_t tweet_count = 0;
};

EmotionProfile make_profile(const ProfileKey& key, const Tally& tally);

// post - pre per category proportion. Usage error unless both profiles share
// acronym and event and are Pre and Post respectively.
std::array<double, kCategoryCount> delta(const EmotionProfile& pre, const EmotionProfile& post);

}  // namespace fanpulse
