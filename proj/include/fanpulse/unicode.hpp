#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

// UTF-8 text helpers backed by ICU. All offsets are byte offsets.
namespace fanpulse::unicode {

struct Span {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::size_t size() const { return end - begin; }
    std::string_view of(std::string_view text) const { return text.substr(begin, end - begin); }
};

bool is_valid_utf8(std::string_view text);

std::string nfc(std::string_view text);
std::string fold_case(std::string_view text);

// Letters, digits and combining marks in any script. Everything else
// (punctuation, symbols, whitespace, emoji, '_') is a word boundary.
bool is_word_char(char32_t cp);

// End of the run of word characters (and '_' when allowed) starting at pos.
std::size_t word_run_end(std::string_view text, std::size_t pos, bool allow_underscore = false);

// Maximal runs of word characters.
std::vector<Span> word_spans(std::string_view text);

// Maximal runs of non-whitespace.
std::vector<Span> whitespace_tokens(std::string_view text);

// True when every code point is a decimal digit.
bool is_number(std::string_view word);

// True when some letter occurs `run` or more times in a row, ignoring case.
bool has_repeated_letter(std::string_view token, std::size_t run = 3);

}  // namespace fanpulse::unicode
