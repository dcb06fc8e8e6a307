#pragma once

#include <array>
#include <bitset>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace fanpulse {

// Canonical order for every vector and report: eight emotions, then the two
// sentiments.
enum class EmotionCategory : std::uint8_t {
    anger,
    anticipation,
    disgust,
    fear,
    joy,
    sadness,
    surprise,
    trust,
    negative,
    positive,
};

inline constexpr std::size_t kCategoryCount = 10;
inline constexpr std::size_t kEmotionCount = 8;
inline constexpr std::size_t kSentimentCount = 2;

inline constexpr std::array<EmotionCategory, kCategoryCount> kAllCategories = {
    EmotionCategory::anger,   EmotionCategory::anticipation, EmotionCategory::disgust,
    EmotionCategory::fear,    EmotionCategory::joy,          EmotionCategory::sadness,
    EmotionCategory::surprise, EmotionCategory::trust,       EmotionCategory::negative,
    EmotionCategory::positive,
};

constexpr std::size_t index_of(EmotionCategory c) { return static_cast<std::size_t>(c); }
constexpr bool is_sentiment(EmotionCategory c) { return index_of(c) >= kEmotionCount; }

std::string_view category_name(EmotionCategory c);
std::optional<EmotionCategory> parse_category(std::string_view name);

// One flag per category, indexed by index_of().
using Association = std::bitset<kCategoryCount>;

// Word -> emotion association map in the NRC three-column layout
// (word<TAB>category<TAB>0|1). Immutable once loaded.
class Lexicon {
public:
    Lexicon() = default;

    // Malformed lines are parse errors carrying the line number; category
    // names outside the canonical ten are schema errors. Multi-word entries
    // are skipped and noted in warnings().
    static Lexicon load(std::istream& source);
    static Lexicon load_file(const std::filesystem::path& path);

    // All-zero for unknown words.
    Association lookup(const std::string& word) const;
    bool contains(const std::string& word) const { return entries_.count(word) > 0; }
    std::size_t size() const { return entries_.size(); }

    // Words for which fewer than ten categories were listed.
    std::vector<std::string> incomplete_words() const;
    const std::vector<std::string>& warnings() const { return warnings_; }

    // Three-column form, words sorted, categories in canonical order.
    void write(std::ostream& out) const;

    friend bool operator==(const Lexicon& a, const Lexicon& b) { return a.entries_ == b.entries_; }

private:
    std::unordered_map<std::string, Association> entries_;
    std::unordered_map<std::string, Association> listed_;  // categories seen per word
    std::vector<std::string> warnings_;
};

inline Association emotion_extractor(const std::string& word, const Lexicon& lexicon) {
    return lexicon.lookup(word);
}

}  // namespace fanpulse
