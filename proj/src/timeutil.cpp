#include "fanpulse/timeutil.hpp"

#include <cstdio>

namespace fanpulse {

namespace {

// Reads exactly `width` ASCII digits starting at pos.
std::optional<int> read_digits(std::string_view s, std::size_t pos, std::size_t width) {
    if (pos + width > s.size()) return std::nullopt;
    int value = 0;
    for (std::size_t i = pos; i < pos + width; ++i) {
        const char c = s[i];
        if (c < '0' || c > '9') return std::nullopt;
        value = value * 10 + (c - '0');
    }
    return value;
}

std::optional<Date> parse_date_prefix(std::string_view s) {
    if (s.size() < 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
    const auto y = read_digits(s, 0, 4);
    const auto m = read_digits(s, 5, 2);
    const auto d = read_digits(s, 8, 2);
    if (!y || !m || !d) return std::nullopt;
    const std::chrono::year_month_day ymd{std::chrono::year{*y},
                                          std::chrono::month{static_cast<unsigned>(*m)},
                                          std::chrono::day{static_cast<unsigned>(*d)}};
    if (!ymd.ok()) return std::nullopt;
    return Date{ymd};
}

}  // namespace

std::optional<Date> parse_date(std::string_view text) {
    if (text.size() != 10) return std::nullopt;
    return parse_date_prefix(text);
}

std::optional<Instant> parse_instant(std::string_view s) {
    const auto day = parse_date_prefix(s);
    if (!day || s.size() < 19) return std::nullopt;
    if (s[10] != 'T' && s[10] != 't' && s[10] != ' ') return std::nullopt;
    if (s[13] != ':' || s[16] != ':') return std::nullopt;
    const auto hh = read_digits(s, 11, 2);
    const auto mm = read_digits(s, 14, 2);
    const auto ss = read_digits(s, 17, 2);
    if (!hh || !mm || !ss || *hh > 23 || *mm > 59 || *ss > 60) return std::nullopt;

    std::size_t pos = 19;
    if (pos < s.size() && (s[pos] == '.' || s[pos] == ',')) {
        ++pos;
        const std::size_t frac_start = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        if (pos == frac_start) return std::nullopt;
    }
    if (pos >= s.size()) return std::nullopt;  // offset is mandatory

    int offset_minutes = 0;
    if (s[pos] == 'Z' || s[pos] == 'z') {
        ++pos;
    } else if (s[pos] == '+' || s[pos] == '-') {
        const int sign = s[pos] == '-' ? -1 : 1;
        ++pos;
        const auto oh = read_digits(s, pos, 2);
        if (!oh || *oh > 23) return std::nullopt;
        pos += 2;
        int om = 0;
        if (pos < s.size()) {
            if (s[pos] == ':') ++pos;
            const auto m = read_digits(s, pos, 2);
            if (!m || *m > 59) return std::nullopt;
            om = *m;
            pos += 2;
        }
        offset_minutes = sign * (*oh * 60 + om);
    } else {
        return std::nullopt;
    }
    if (pos != s.size()) return std::nullopt;

    using namespace std::chrono;
    return *day + hours{*hh} + minutes{*mm} + seconds{*ss} - minutes{offset_minutes};
}

std::string format_date(Date d) {
    const std::chrono::year_month_day ymd{d};
    char buf[32];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buf;
}

std::string format_instant(Instant t) {
    const auto day = date_of(t);
    const std::chrono::hh_mm_ss hms{t - day};
    char buf[64];
    std::snprintf(buf, sizeof buf, "T%02ld:%02ld:%02ldZ", static_cast<long>(hms.hours().count()),
                  static_cast<long>(hms.minutes().count()),
                  static_cast<long>(hms.seconds().count()));
    return format_date(day) + buf;
}

}  // namespace fanpulse
