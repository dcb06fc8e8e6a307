#include "fanpulse/preprocess.hpp"

#include <algorithm>
#include <optional>

#include "fanpulse/error.hpp"
#include "fanpulse/parallel.hpp"
#include "fanpulse/unicode.hpp"

namespace fanpulse {

namespace {

bool is_ascii_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_ascii_alnum(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

bool is_scheme_char(char c) {
    return is_ascii_alnum(c) || c == '+' || c == '-' || c == '.';
}

bool starts_with_ci(std::string_view text, std::size_t pos, std::string_view prefix) {
    if (pos + prefix.size() > text.size()) return false;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        char c = text[pos + i];
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
        if (c != prefix[i]) return false;
    }
    return true;
}

// Length of the URL starting at pos, or 0 when none starts there.
std::size_t url_length_at(std::string_view text, std::size_t pos) {
    const bool boundary = pos == 0 || !is_ascii_alnum(text[pos - 1]);
    if (!boundary) return 0;
    std::size_t body = 0;
    if (starts_with_ci(text, pos, "www.")) {
        body = pos + 4;
    } else {
        const char first = text[pos];
        if (!((first >= 'a' && first <= 'z') || (first >= 'A' && first <= 'Z'))) return 0;
        std::size_t j = pos;
        while (j < text.size() && is_scheme_char(text[j])) ++j;
        if (text.substr(j, 3) != "://") return 0;
        body = j + 3;
    }
    while (body < text.size() && !is_ascii_space(text[body])) ++body;
    return body - pos;
}

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

// Yields trimmed, non-empty, non-comment lines with their line numbers.
template <typename Fn>
void for_each_data_line(std::istream& in, Fn&& fn) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string content = trim(line);
        if (content.empty() || content.front() == '#') continue;
        fn(line, content, line_no);
    }
}

struct CompiledPattern {
    std::vector<std::string> words;       // case-folded
    std::vector<std::string> separators;  // case-folded text between words
};

CompiledPattern compile_pattern(std::string_view pattern) {
    CompiledPattern compiled;
    const std::string folded = unicode::fold_case(pattern);
    const auto spans = unicode::word_spans(folded);
    for (std::size_t i = 0; i < spans.size(); ++i) {
        compiled.words.emplace_back(spans[i].of(folded));
        if (i > 0) {
            compiled.separators.emplace_back(
                std::string_view(folded).substr(spans[i - 1].end, spans[i].begin - spans[i - 1].end));
        }
    }
    return compiled;
}

std::string remove_mentions_and_hashes(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == '@') {
            i = unicode::word_run_end(text, i + 1, /*allow_underscore=*/true);
        } else if (text[i] == '#') {
            // A '#' glued to a preceding word becomes a break so the two words stay apart.
            if (!out.empty() && (is_ascii_alnum(out.back()) ||
                                 static_cast<unsigned char>(out.back()) >= 0x80)) {
                out.push_back(' ');
            }
            ++i;
        } else {
            out.push_back(text[i]);
            ++i;
        }
    }
    return out;
}

}  // namespace

void TokenBag::add(std::string token, std::uint64_t n) {
    if (n == 0 || token.empty()) return;
    counts_[std::move(token)] += n;
    total_ += n;
}

void TokenBag::merge(const TokenBag& other) {
    for (const auto& [token, n] : other) add(token, n);
}

std::uint64_t TokenBag::count(std::string_view token) const {
    const auto it = counts_.find(token);
    return it == counts_.end() ? 0 : it->second;
}

std::string TokenBag::joined() const {
    std::string out;
    for (const auto& [token, n] : counts_) {
        for (std::uint64_t i = 0; i < n; ++i) {
            if (!out.empty()) out.push_back(' ');
            out += token;
        }
    }
    return out;
}

std::set<std::string, std::less<>> load_stopwords(std::istream& source) {
    std::set<std::string, std::less<>> words;
    for_each_data_line(source, [&](const std::string&, const std::string& content, std::size_t) {
        words.insert(unicode::fold_case(content));
    });
    return words;
}

std::map<std::string, std::string, std::less<>> load_acronyms(std::istream& source) {
    std::map<std::string, std::string, std::less<>> acronyms;
    for_each_data_line(source, [&](const std::string& raw, const std::string&, std::size_t line) {
        const auto tab = raw.find('\t');
        if (tab == std::string::npos) {
            throw Error(ErrorKind::parse, "expected acronym<TAB>expansion", line);
        }
        const std::string key = unicode::fold_case(trim(std::string_view(raw).substr(0, tab)));
        const std::string expansion = trim(std::string_view(raw).substr(tab + 1));
        if (key.empty() || expansion.empty()) {
            throw Error(ErrorKind::parse, "empty acronym or expansion", line);
        }
        if (!acronyms.emplace(key, expansion).second) {
            throw Error(ErrorKind::schema, "duplicate acronym '" + key + "'", line);
        }
    });
    return acronyms;
}

std::vector<std::string> load_patterns(std::istream& source) {
    std::vector<std::string> patterns;
    for_each_data_line(source, [&](const std::string&, const std::string& content, std::size_t) {
        patterns.push_back(content);
    });
    return patterns;
}

void validate_rules(const CleaningRules& rules) {
    if (rules.remove_stopwords && rules.stopwords.empty()) {
        throw Error(ErrorKind::config, "stopword removal is enabled but the stopword list is empty");
    }
    for (const auto& [key, expansion] : rules.acronyms) {
        if (key != unicode::fold_case(key)) {
            throw Error(ErrorKind::config, "acronym key '" + key + "' is not case-folded");
        }
    }
}

std::string strip_noise(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        if (const std::size_t n = url_length_at(text, i); n > 0) {
            i += n;
            continue;
        }
        out.push_back(text[i]);
        ++i;
    }
    return out;
}

std::string expand_acronyms(std::string_view text, const CleaningRules& rules) {
    if (rules.acronyms.empty()) return std::string(text);
    std::string out;
    std::size_t cursor = 0;
    for (const auto& span : unicode::word_spans(text)) {
        const auto it = rules.acronyms.find(unicode::fold_case(span.of(text)));
        if (it == rules.acronyms.end()) continue;
        out.append(text.substr(cursor, span.begin - cursor));
        out += it->second;
        cursor = span.end;
    }
    out.append(text.substr(cursor));
    return out;
}

std::string squash_elongated(std::string_view text) {
    std::string out;
    std::size_t cursor = 0;
    std::size_t gap_start = 0;
    for (const auto& token : unicode::whitespace_tokens(text)) {
        if (unicode::has_repeated_letter(token.of(text))) {
            if (gap_start > cursor) out.append(text.substr(cursor, gap_start - cursor));
            cursor = token.end;
        }
        gap_start = token.end;
    }
    out.append(text.substr(cursor));
    return out;
}

std::string remove_extraneous(std::string_view input, const CleaningRules& rules) {
    const std::string text = remove_mentions_and_hashes(input);
    if (rules.extraneous_patterns.empty()) return text;

    std::vector<CompiledPattern> patterns;
    for (const auto& p : rules.extraneous_patterns) {
        auto compiled = compile_pattern(p);
        if (!compiled.words.empty()) patterns.push_back(std::move(compiled));
    }
    // Longest pattern wins when several match at the same word.
    std::stable_sort(patterns.begin(), patterns.end(), [](const auto& a, const auto& b) {
        return a.words.size() > b.words.size();
    });

    const std::string_view view = text;
    const auto spans = unicode::word_spans(view);
    std::vector<std::string> folded;
    folded.reserve(spans.size());
    for (const auto& span : spans) folded.push_back(unicode::fold_case(span.of(view)));

    std::string out;
    std::size_t cursor = 0;
    std::size_t i = 0;
    while (i < spans.size()) {
        std::size_t matched = 0;
        for (const auto& pattern : patterns) {
            const std::size_t k = pattern.words.size();
            if (i + k > spans.size()) continue;
            bool ok = true;
            for (std::size_t w = 0; ok && w < k; ++w) {
                ok = folded[i + w] == pattern.words[w];
                if (ok && w > 0) {
                    const auto gap = view.substr(spans[i + w - 1].end,
                                                 spans[i + w].begin - spans[i + w - 1].end);
                    ok = unicode::fold_case(gap) == pattern.separators[w - 1];
                }
            }
            if (ok) {
                matched = k;
                break;
            }
        }
        if (matched == 0) {
            ++i;
            continue;
        }
        out.append(view.substr(cursor, spans[i].begin - cursor));
        cursor = spans[i + matched - 1].end;
        i += matched;
    }
    out.append(view.substr(cursor));
    return out;
}

TokenBag tokenize_and_filter(std::string_view text, const CleaningRules& rules) {
    TokenBag bag;
    for (const auto& span : unicode::word_spans(text)) {
        std::string token = unicode::nfc(unicode::fold_case(span.of(text)));
        if (token.empty() || unicode::is_number(token)) continue;
        if (rules.remove_stopwords && rules.stopwords.count(token) > 0) continue;
        bag.add(std::move(token));
    }
    return bag;
}

std::string clean_text(std::string_view text, const CleaningRules& rules) {
    std::string s = unicode::nfc(text);
    s = strip_noise(s);
    s = expand_acronyms(s, rules);
    s = squash_elongated(s);
    return remove_extraneous(s, rules);
}

PreprocessResult pre_process(std::span<const Tweet> tweets, const CleaningRules& rules,
                             unsigned threads) {
    std::vector<std::optional<TokenBag>> bags(tweets.size());
    for_each_chunk(tweets.size(), threads, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            TokenBag bag = tokenize_and_filter(clean_text(tweets[i].text, rules), rules);
            if (!bag.empty()) bags[i] = std::move(bag);
        }
    });

    PreprocessResult result;
    result.kept.reserve(tweets.size());
    for (std::size_t i = 0; i < tweets.size(); ++i) {
        if (bags[i]) {
            result.kept.push_back(CleanTweet{tweets[i], std::move(*bags[i])});
        } else {
            ++result.dropped;
        }
    }
    return result;
}

}  // namespace fanpulse
