#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fanpulse/preprocess.hpp"

namespace fanpulse {

struct PlayerProfile {
    std::string name;
    std::string acronym;
    std::set<std::string> keywords;         // case-folded names, hashtag words, handles
    std::vector<std::string> brands;        // price-series symbols
    std::map<int, std::string> performance;  // event ordinal -> "81", "DNB", "20/2", ...
};

// Players config: a JSON array (or {"players": [...]}) of
// {name, acronym, keywords[], brands[], performance{"M1": "81", ...}}.
std::vector<PlayerProfile> load_players(std::istream& source);
std::vector<PlayerProfile> load_players_file(const std::filesystem::path& path);

enum class ClusterMode { inclusive, exclusive };

// keyword -> acronyms sharing it.
class ClusterIndex {
public:
    // Config error on an empty profile list, an empty keyword set or a
    // duplicated acronym.
    static ClusterIndex build(const std::vector<PlayerProfile>& profiles);

    const std::set<std::string>* lookup(std::string_view keyword) const;
    std::size_t key_count() const { return keys_.size(); }
    const std::vector<std::string>& acronyms() const { return acronyms_; }
    const std::map<std::string, std::set<std::string>, std::less<>>& keys() const { return keys_; }

private:
    std::map<std::string, std::set<std::string>, std::less<>> keys_;
    std::vector<std::string> acronyms_;  // config order
};

// Whole-token, case-insensitive matching of the cleaned bag and of the words
// (and '@'/'#' handles) of the raw text. In exclusive mode a tweet naming more
// than one player is assigned to none.
std::set<std::string> assign_clusters(const TokenBag& bag, std::string_view raw_text,
                                      const ClusterIndex& index,
                                      ClusterMode mode = ClusterMode::inclusive);

}  // namespace fanpulse
