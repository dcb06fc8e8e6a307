#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace fanpulse {

using Instant = std::chrono::sys_seconds;
using Date = std::chrono::sys_days;

// ISO-8601 date-time with a mandatory UTC designator: "Z", "+hh:mm", "+hhmm"
// or "+hh". Fractional seconds are accepted and truncated. A space may stand
// in for the 'T' separator.
std::optional<Instant> parse_instant(std::string_view text);

// ISO-8601 calendar date, YYYY-MM-DD.
std::optional<Date> parse_date(std::string_view text);

std::string format_instant(Instant t);  // YYYY-MM-DDThh:mm:ssZ
std::string format_date(Date d);        // YYYY-MM-DD

inline Date date_of(Instant t) { return std::chrono::floor<std::chrono::days>(t); }

}  // namespace fanpulse
