#include "fanpulse/unicode.hpp"

#include <algorithm>

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

namespace fanpulse::unicode {

namespace {

// Calls fn(code_point, begin, end) for every code point; malformed bytes
// arrive as a negative code point covering one byte.
template <typename Fn>
void for_each_code_point(std::string_view text, Fn&& fn) {
    const auto* s = reinterpret_cast<const uint8_t*>(text.data());
    const auto length = static_cast<int32_t>(text.size());
    int32_t i = 0;
    while (i < length) {
        const int32_t start = i;
        UChar32 c;
        U8_NEXT(s, i, length, c);
        fn(c, static_cast<std::size_t>(start), static_cast<std::size_t>(i));
    }
}

std::string to_utf8(const icu::UnicodeString& u) {
    std::string out;
    u.toUTF8String(out);
    return out;
}

icu::UnicodeString from_utf8(std::string_view text) {
    return icu::UnicodeString::fromUTF8(
        icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
}

}  // namespace

bool is_valid_utf8(std::string_view text) {
    bool ok = true;
    for_each_code_point(text, [&](UChar32 c, std::size_t, std::size_t) {
        if (c < 0) ok = false;
    });
    return ok;
}

std::string nfc(std::string_view text) {
    if (std::all_of(text.begin(), text.end(),
                    [](char c) { return static_cast<unsigned char>(c) < 0x80; })) {
        return std::string(text);
    }
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* normalizer = icu::Normalizer2::getNFCInstance(status);
    if (U_FAILURE(status)) return std::string(text);
    const icu::UnicodeString source = from_utf8(text);
    if (normalizer->isNormalized(source, status) && U_SUCCESS(status)) return std::string(text);
    status = U_ZERO_ERROR;
    const icu::UnicodeString result = normalizer->normalize(source, status);
    if (U_FAILURE(status)) return std::string(text);
    return to_utf8(result);
}

std::string fold_case(std::string_view text) {
    bool ascii = true;
    for (const char c : text) {
        if (static_cast<unsigned char>(c) >= 0x80) {
            ascii = false;
            break;
        }
    }
    if (ascii) {
        std::string out(text);
        for (char& c : out) {
            if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
        }
        return out;
    }
    icu::UnicodeString u = from_utf8(text);
    u.foldCase(U_FOLD_CASE_DEFAULT);
    return to_utf8(u);
}

bool is_word_char(char32_t cp) {
    const auto c = static_cast<UChar32>(cp);
    if (c < 0x80) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
    }
    if (u_isalnum(c)) return true;
    const int8_t type = u_charType(c);
    return type == U_NON_SPACING_MARK || type == U_COMBINING_SPACING_MARK ||
           type == U_ENCLOSING_MARK;
}

std::size_t word_run_end(std::string_view text, std::size_t pos, bool allow_underscore) {
    const auto* s = reinterpret_cast<const uint8_t*>(text.data());
    const auto length = static_cast<int32_t>(text.size());
    auto i = static_cast<int32_t>(pos);
    while (i < length) {
        int32_t next = i;
        UChar32 c;
        U8_NEXT(s, next, length, c);
        const bool word = c >= 0 && (is_word_char(static_cast<char32_t>(c)) ||
                                     (allow_underscore && c == '_'));
        if (!word) break;
        i = next;
    }
    return static_cast<std::size_t>(i);
}

std::vector<Span> word_spans(std::string_view text) {
    std::vector<Span> spans;
    bool open = false;
    Span current;
    for_each_code_point(text, [&](UChar32 c, std::size_t begin, std::size_t end) {
        const bool word = c >= 0 && is_word_char(static_cast<char32_t>(c));
        if (word) {
            if (!open) {
                current.begin = begin;
                open = true;
            }
            current.end = end;
        } else if (open) {
            spans.push_back(current);
            open = false;
        }
    });
    if (open) spans.push_back(current);
    return spans;
}

std::vector<Span> whitespace_tokens(std::string_view text) {
    std::vector<Span> spans;
    bool open = false;
    Span current;
    for_each_code_point(text, [&](UChar32 c, std::size_t begin, std::size_t end) {
        const bool space = c >= 0 && u_isUWhiteSpace(c);
        if (!space) {
            if (!open) {
                current.begin = begin;
                open = true;
            }
            current.end = end;
        } else if (open) {
            spans.push_back(current);
            open = false;
        }
    });
    if (open) spans.push_back(current);
    return spans;
}

bool is_number(std::string_view word) {
    if (word.empty()) return false;
    bool digits = true;
    for_each_code_point(word, [&](UChar32 c, std::size_t, std::size_t) {
        if (c < 0 || !u_isdigit(c)) digits = false;
    });
    return digits;
}

bool has_repeated_letter(std::string_view token, std::size_t run) {
    UChar32 previous = -1;
    std::size_t length = 0;
    bool found = false;
    for_each_code_point(token, [&](UChar32 c, std::size_t, std::size_t) {
        if (found) return;
        if (c < 0 || !u_isalpha(c)) {
            previous = -1;
            length = 0;
            return;
        }
        const UChar32 folded = u_foldCase(c, U_FOLD_CASE_DEFAULT);
        length = folded == previous ? length + 1 : 1;
        previous = folded;
        if (length >= run) found = true;
    });
    return found;
}

}  // namespace fanpulse::unicode
