#include "fanpulse/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "fanpulse/error.hpp"
#include "fanpulse/unicode.hpp"

namespace fanpulse {

namespace {

constexpr std::array<std::string_view, kCategoryCount> kNames = {
    "anger", "anticipation", "disgust", "fear",     "joy",
    "sadness", "surprise",   "trust",   "negative", "positive",
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

}  // namespace

std::string_view category_name(EmotionCategory c) { return kNames[index_of(c)]; }

std::optional<EmotionCategory> parse_category(std::string_view name) {
    const std::string folded = unicode::fold_case(trim(name));
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        if (folded == kNames[i]) return kAllCategories[i];
    }
    return std::nullopt;
}

Lexicon Lexicon::load(std::istream& source) {
    Lexicon lexicon;
    std::set<std::string> skipped;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(source, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;

        const auto tab1 = line.find('\t');
        const auto tab2 = tab1 == std::string::npos ? tab1 : line.find('\t', tab1 + 1);
        if (tab2 == std::string::npos || line.find('\t', tab2 + 1) != std::string::npos) {
            throw Error(ErrorKind::parse, "expected word<TAB>category<TAB>flag", line_no);
        }
        const std::string_view view = line;
        const std::string word = unicode::fold_case(trim(view.substr(0, tab1)));
        const std::string_view category_text = trim(view.substr(tab1 + 1, tab2 - tab1 - 1));
        const std::string_view flag = trim(view.substr(tab2 + 1));

        if (word.empty()) throw Error(ErrorKind::parse, "empty word", line_no);
        if (flag != "0" && flag != "1") {
            throw Error(ErrorKind::parse, "flag must be 0 or 1, got '" + std::string(flag) + "'",
                        line_no);
        }
        const auto category = parse_category(category_text);
        if (!category) {
            throw Error(ErrorKind::schema,
                        "unknown category '" + std::string(category_text) + "'", line_no);
        }
        if (word.find_first_of(" \t") != std::string::npos) {
            if (skipped.insert(word).second) {
                lexicon.warnings_.push_back("line " + std::to_string(line_no) +
                                            ": skipped multi-word entry '" + word + "'");
            }
            continue;
        }

        const std::size_t bit = index_of(*category);
        Association& listed = lexicon.listed_[word];
        Association& flags = lexicon.entries_[word];
        if (listed.test(bit) && flags.test(bit) != (flag == "1")) {
            throw Error(ErrorKind::schema,
                        "conflicting flags for '" + word + "' / " + std::string(category_text),
                        line_no);
        }
        listed.set(bit);
        flags.set(bit, flag == "1");
    }
    if (source.bad()) throw Error(ErrorKind::io, "read failure while loading lexicon");
    return lexicon;
}

Lexicon Lexicon::load_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::io, "cannot open lexicon " + path.string());
    return load(in);
}

Association Lexicon::lookup(const std::string& word) const {
    const auto it = entries_.find(word);
    return it == entries_.end() ? Association{} : it->second;
}

std::vector<std::string> Lexicon::incomplete_words() const {
    std::vector<std::string> words;
    for (const auto& [word, listed] : listed_) {
        if (!listed.all()) words.push_back(word);
    }
    std::sort(words.begin(), words.end());
    return words;
}

void Lexicon::write(std::ostream& out) const {
    std::vector<const std::string*> words;
    words.reserve(entries_.size());
    for (const auto& entry : entries_) words.push_back(&entry.first);
    std::sort(words.begin(), words.end(), [](const auto* a, const auto* b) { return *a < *b; });
    for (const std::string* word : words) {
        const Association& flags = entries_.at(*word);
        for (const EmotionCategory c : kAllCategories) {
            out << *word << '\t' << category_name(c) << '\t' << (flags.test(index_of(c)) ? '1' : '0')
                << '\n';
        }
    }
}

}  // namespace fanpulse
