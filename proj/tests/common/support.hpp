#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "fanpulse/corpus.hpp"
#include "fanpulse/timeutil.hpp"

namespace fanpulse::test {

inline std::filesystem::path fixtures() { return FANPULSE_FIXTURES; }

inline std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void spit(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
}

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        std::random_device rd;
        path_ = std::filesystem::temp_directory_path() /
                ("fanpulse-" + tag + "-" + std::to_string(rd()) + std::to_string(rd()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

inline Instant at(const std::string& iso) { return parse_instant(iso).value(); }

inline MatchEvent event(int ordinal, const std::string& start, const std::string& end,
                        Outcome outcome = Outcome::win) {
    MatchEvent e;
    e.label = "M" + std::to_string(ordinal);
    e.ordinal = ordinal;
    e.start = at(start);
    e.end = at(end);
    e.outcome = outcome;
    return e;
}

inline Tweet tweet(const std::string& id, const std::string& created_at, const std::string& text) {
    return Tweet{id, at(created_at), text, std::nullopt};
}

}  // namespace fanpulse::test
