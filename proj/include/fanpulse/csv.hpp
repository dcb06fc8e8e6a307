#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace fanpulse::csv {

struct Record {
    std::vector<std::string> fields;
    std::size_t line = 0;    // physical line the record starts on (1-based)
    bool malformed = false;  // stray quote or unterminated quoted field
};

// Streaming RFC-4180 reader. Quoted fields may span lines; CRLF and LF are
// both accepted as record terminators.
class Reader {
public:
    explicit Reader(std::istream& in) : in_(in) {}

    // False at end of input. Blank lines are skipped.
    bool next(Record& record);

private:
    std::istream& in_;
    std::size_t line_ = 0;
};

// Quotes the field when it contains a delimiter, quote or line break.
std::string escape(std::string_view field);

std::string join(const std::vector<std::string>& fields);

}  // namespace fanpulse::csv
