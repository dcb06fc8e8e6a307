#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fanpulse/corpus.hpp"

namespace fanpulse {

// Multiset of lowercase word tokens. Iteration is in token order.
class TokenBag {
public:
    using Counts = std::map<std::string, std::uint64_t, std::less<>>;

    void add(std::string token, std::uint64_t n = 1);
    void merge(const TokenBag& other);

    std::uint64_t count(std::string_view token) const;
    std::uint64_t total() const { return total_; }
    std::size_t distinct() const { return counts_.size(); }
    bool empty() const { return total_ == 0; }

    Counts::const_iterator begin() const { return counts_.begin(); }
    Counts::const_iterator end() const { return counts_.end(); }

    // Tokens joined by single spaces, each repeated by its multiplicity.
    std::string joined() const;

    friend bool operator==(const TokenBag&, const TokenBag&) = default;

private:
    Counts counts_;
    std::uint64_t total_ = 0;
};

struct CleaningRules {
    // Whole-word, case-insensitive literals ("CT", "ODI", "INDvsPAK", ...).
    // A pattern may span several words.
    std::vector<std::string> extraneous_patterns;
    // Case-folded acronym -> expansion.
    std::map<std::string, std::string, std::less<>> acronyms;
    std::set<std::string, std::less<>> stopwords;
    bool remove_stopwords = true;
};

// One lowercase word per line; '#' starts a comment.
std::set<std::string, std::less<>> load_stopwords(std::istream& source);
// acronym<TAB>expansion per line; '#' comment lines allowed. Keys that
// collide case-insensitively are a schema error.
std::map<std::string, std::string, std::less<>> load_acronyms(std::istream& source);
// One literal pattern per line; '#' comment lines allowed.
std::vector<std::string> load_patterns(std::istream& source);

// Throws config error when stopword removal is enabled with an empty list.
void validate_rules(const CleaningRules& rules);

// Removes URLs: runs starting with scheme:// or www.
std::string strip_noise(std::string_view text);
// Replaces whole-word acronyms by their expansion in a single pass.
std::string expand_acronyms(std::string_view text, const CleaningRules& rules);
// Deletes whitespace-delimited tokens in which some letter repeats three or
// more times in a row, together with the whitespace run just before them.
std::string squash_elongated(std::string_view text);
// Removes '@' mentions, '#' characters and the extraneous patterns.
std::string remove_extraneous(std::string_view text, const CleaningRules& rules);
// Case-folds, splits on non-alphanumerics and drops numbers and stopwords.
TokenBag tokenize_and_filter(std::string_view text, const CleaningRules& rules);

// NFC normalisation followed by the four text-rewriting stages, in order.
std::string clean_text(std::string_view text, const CleaningRules& rules);

struct CleanTweet {
    Tweet tweet;
    TokenBag bag;
};

struct PreprocessResult {
    std::vector<CleanTweet> kept;  // input order
    std::size_t dropped = 0;       // tweets whose bag came out empty
};

PreprocessResult pre_process(std::span<const Tweet> tweets, const CleaningRules& rules,
                             unsigned threads = 1);

}  // namespace fanpulse
