#include "fanpulse/emotion.hpp"

#include <numeric>

#include "fanpulse/error.hpp"
#include "fanpulse/parallel.hpp"

namespace fanpulse {

void EmotionVector::add(const Association& flags, std::uint64_t times) {
    for (std::size_t i = 0; i < kCategoryCount; ++i) {
        if (flags.test(i)) counts_[i] += times;
    }
}

std::uint64_t EmotionVector::emotion_total() const {
    return std::accumulate(counts_.begin(), counts_.begin() + kEmotionCount, std::uint64_t{0});
}

std::uint64_t EmotionVector::sentiment_total() const {
    return std::accumulate(counts_.begin() + kEmotionCount, counts_.end(), std::uint64_t{0});
}

EmotionVector& EmotionVector::operator+=(const EmotionVector& other) {
    for (std::size_t i = 0; i < kCategoryCount; ++i) counts_[i] += other.counts_[i];
    return *this;
}

EmotionVector operator*(EmotionVector v, std::uint64_t k) {
    for (auto& c : v.counts_) c *= k;
    return v;
}

EmotionVector score_bag(const TokenBag& bag, const Lexicon& lexicon) {
    EmotionVector score;
    for (const auto& [token, n] : bag) score.add(lexicon.lookup(token), n);
    return score;
}

Aggregate aggregate(std::span<const ScoredTweet> scored) {
    Aggregate out;
    for (const auto& tweet : scored) {
        if (tweet.phase == Phase::outside) continue;
        for (const auto& acronym : tweet.clusters) {
            Tally& tally = out[ProfileKey{acronym, tweet.event_ordinal, tweet.phase}];
            tally.raw += tweet.vector;
            ++tally.tweets;
        }
    }
    return out;
}

void merge_into(Aggregate& into, const Aggregate& from) {
    for (const auto& [key, tally] : from) into[key] += tally;
}

Aggregate aggregate(std::span<const ScoredTweet> scored, unsigned threads) {
    std::vector<Aggregate> partials(chunk_count(scored.size(), threads));
    for_each_chunk(scored.size(), threads, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
        partials[chunk] = aggregate(scored.subspan(begin, end - begin));
    });
    Aggregate out;
    for (const auto& partial : partials) merge_into(out, partial);
    return out;
}

std::array<double, kCategoryCount> Proportions::all() const {
    std::array<double, kCategoryCount> out{};
    for (std::size_t i = 0; i < kEmotionCount; ++i) out[i] = emotions[i];
    for (std::size_t i = 0; i < kSentimentCount; ++i) out[kEmotionCount + i] = sentiments[i];
    return out;
}

Proportions normalize(const EmotionVector& raw) {
    Proportions p;
    const auto& counts = raw.counts();
    if (const std::uint64_t total = raw.emotion_total(); total > 0) {
        p.emotions_empty = false;
        for (std::size_t i = 0; i < kEmotionCount; ++i) {
            p.emotions[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
        }
    }
    if (const std::uint64_t total = raw.sentiment_total(); total > 0) {
        p.sentiments_empty = false;
        for (std::size_t i = 0; i < kSentimentCount; ++i) {
            p.sentiments[i] = static_cast<double>(counts[kEmotionCount + i]) / static_cast<double>(total);
        }
    }
    return p;
}

EmotionProfile make_profile(const ProfileKey& key, const Tally& tally) {
    return EmotionProfile{key.acronym, key.event_ordinal, key.phase, tally.raw, normalize(tally.raw),
                          tally.tweets};
}

std::array<double, kCategoryCount> delta(const EmotionProfile& pre, const EmotionProfile& post) {
    if (pre.acronym != post.acronym || pre.event_ordinal != post.event_ordinal) {
        throw Error(ErrorKind::usage, "delta needs profiles of the same player and event, got " +
                                          pre.acronym + "/M" + std::to_string(pre.event_ordinal) +
                                          " and " + post.acronym + "/M" +
                                          std::to_string(post.event_ordinal));
    }
    if (pre.phase != Phase::pre || post.phase != Phase::post) {
        throw Error(ErrorKind::usage, "delta needs a Pre profile and a Post profile");
    }
    const auto a = pre.props.all();
    const auto b = post.props.all();
    std::array<double, kCategoryCount> out{};
    for (std::size_t i = 0; i < kCategoryCount; ++i) out[i] = b[i] - a[i];
    return out;
}

}  // namespace fanpulse
