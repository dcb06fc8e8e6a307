#include "fanpulse/cluster.hpp"

#include <fstream>

#include <json.hpp>

#include "fanpulse/error.hpp"
#include "fanpulse/unicode.hpp"

namespace fanpulse {

namespace {

using nlohmann::json;

std::string normalized_keyword(std::string_view raw) {
    std::string_view s = raw;
    while (!s.empty() && (s.front() == '@' || s.front() == '#' || s.front() == ' ')) s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return unicode::nfc(unicode::fold_case(s));
}

std::vector<std::string> string_list(const json& entry, const char* key, const std::string& where,
                                     bool required) {
    const auto it = entry.find(key);
    if (it == entry.end()) {
        if (required) throw Error(ErrorKind::schema, where + ": missing " + key);
        return {};
    }
    if (!it->is_array()) throw Error(ErrorKind::schema, where + ": " + key + " must be an array");
    std::vector<std::string> values;
    for (const auto& v : *it) {
        if (!v.is_string()) throw Error(ErrorKind::schema, where + ": " + key + " must hold strings");
        values.push_back(v.get<std::string>());
    }
    return values;
}

int performance_ordinal(const std::string& key, const std::string& where) {
    std::string_view k = key;
    if (!k.empty() && (k.front() == 'M' || k.front() == 'm')) k.remove_prefix(1);
    int value = 0;
    if (k.empty()) throw Error(ErrorKind::schema, where + ": bad performance key '" + key + "'");
    for (const char c : k) {
        if (c < '0' || c > '9') throw Error(ErrorKind::schema, where + ": bad performance key '" + key + "'");
        value = value * 10 + (c - '0');
    }
    if (value < 1) throw Error(ErrorKind::schema, where + ": bad performance key '" + key + "'");
    return value;
}

}  // namespace

std::vector<PlayerProfile> load_players(std::istream& source) {
    json doc;
    try {
        doc = json::parse(source);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::parse, std::string("players config is not valid JSON: ") + e.what());
    }
    const json* entries = &doc;
    if (doc.is_object()) {
        const auto it = doc.find("players");
        if (it == doc.end()) throw Error(ErrorKind::schema, "players config has no \"players\"");
        entries = &*it;
    }
    if (!entries->is_array()) throw Error(ErrorKind::schema, "players must be an array");

    std::vector<PlayerProfile> players;
    for (std::size_t i = 0; i < entries->size(); ++i) {
        const json& entry = (*entries)[i];
        std::string where = "player #" + std::to_string(i + 1);
        if (!entry.is_object()) throw Error(ErrorKind::schema, where + " is not an object");

        PlayerProfile profile;
        const auto acronym = entry.find("acronym");
        if (acronym == entry.end() || !acronym->is_string() || acronym->get<std::string>().empty()) {
            throw Error(ErrorKind::schema, where + ": missing acronym");
        }
        profile.acronym = acronym->get<std::string>();
        where += " (" + profile.acronym + ")";
        if (const auto name = entry.find("name"); name != entry.end() && name->is_string()) {
            profile.name = name->get<std::string>();
        } else {
            profile.name = profile.acronym;
        }
        for (const auto& k : string_list(entry, "keywords", where, true)) {
            const std::string keyword = normalized_keyword(k);
            if (!keyword.empty()) profile.keywords.insert(keyword);
        }
        profile.brands = string_list(entry, "brands", where, false);

        if (const auto perf = entry.find("performance"); perf != entry.end() && !perf->is_null()) {
            if (perf->is_object()) {
                for (const auto& [key, value] : perf->items()) {
                    if (!value.is_string() && !value.is_number()) {
                        throw Error(ErrorKind::schema, where + ": performance values must be strings");
                    }
                    profile.performance[performance_ordinal(key, where)] =
                        value.is_string() ? value.get<std::string>() : value.dump();
                }
            } else if (perf->is_array()) {
                int ordinal = 1;
                for (const auto& value : *perf) {
                    if (!value.is_string()) {
                        throw Error(ErrorKind::schema, where + ": performance values must be strings");
                    }
                    profile.performance[ordinal++] = value.get<std::string>();
                }
            } else {
                throw Error(ErrorKind::schema, where + ": performance must be an object or array");
            }
        }
        players.push_back(std::move(profile));
    }
    return players;
}

std::vector<PlayerProfile> load_players_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::io, "cannot open players config " + path.string());
    return load_players(in);
}

ClusterIndex ClusterIndex::build(const std::vector<PlayerProfile>& profiles) {
    if (profiles.empty()) throw Error(ErrorKind::config, "no player profiles configured");
    ClusterIndex index;
    std::set<std::string> seen;
    for (const auto& profile : profiles) {
        if (profile.acronym.empty()) throw Error(ErrorKind::config, "player without an acronym");
        if (!seen.insert(profile.acronym).second) {
            throw Error(ErrorKind::config, "duplicate player acronym " + profile.acronym);
        }
        if (profile.keywords.empty()) {
            throw Error(ErrorKind::config, "player " + profile.acronym + " has no keywords");
        }
        index.acronyms_.push_back(profile.acronym);
        for (const auto& keyword : profile.keywords) {
            index.keys_[normalized_keyword(keyword)].insert(profile.acronym);
        }
    }
    return index;
}

const std::set<std::string>* ClusterIndex::lookup(std::string_view keyword) const {
    const auto it = keys_.find(keyword);
    return it == keys_.end() ? nullptr : &it->second;
}

std::set<std::string> assign_clusters(const TokenBag& bag, std::string_view raw_text,
                                      const ClusterIndex& index, ClusterMode mode) {
    std::set<std::string> matched;
    auto match = [&](std::string_view word) {
        if (const auto* acronyms = index.lookup(word)) matched.insert(acronyms->begin(), acronyms->end());
    };
    for (const auto& [token, n] : bag) match(token);

    const std::string text = strip_noise(raw_text);
    const std::string_view view = text;
    for (const auto& span : unicode::word_spans(view)) {
        match(unicode::nfc(unicode::fold_case(span.of(view))));
    }
    // Handles keep their underscores: @imVkohli_18.
    for (std::size_t i = 0; i < view.size(); ++i) {
        if (view[i] != '@' && view[i] != '#') continue;
        const std::size_t end = unicode::word_run_end(view, i + 1, /*allow_underscore=*/true);
        if (end > i + 1) match(unicode::nfc(unicode::fold_case(view.substr(i + 1, end - i - 1))));
    }

    if (mode == ClusterMode::exclusive && matched.size() > 1) matched.clear();
    return matched;
}

}  // namespace fanpulse
