#include "fanpulse/csv.hpp"

namespace fanpulse::csv {

bool Reader::next(Record& record) {
    record = Record{};
    std::string line;
    while (true) {
        if (!std::getline(in_, line)) return false;
        ++line_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) break;
    }
    record.line = line_;

    std::string field;
    bool in_quotes = false;
    bool field_was_quoted = false;
    std::size_t i = 0;
    while (true) {
        if (i >= line.size()) {
            if (!in_quotes) break;
            // Quoted field continues on the next physical line.
            if (!std::getline(in_, line)) {
                record.malformed = true;
                break;
            }
            ++line_;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            field.push_back('\n');
            i = 0;
            continue;
        }
        const char c = line[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                field.push_back(c);
            }
        } else if (c == ',') {
            record.fields.push_back(std::move(field));
            field.clear();
            field_was_quoted = false;
        } else if (c == '"') {
            if (field.empty() && !field_was_quoted) {
                in_quotes = true;
                field_was_quoted = true;
            } else {
                record.malformed = true;
                field.push_back(c);
            }
        } else {
            if (field_was_quoted) record.malformed = true;  // text after closing quote
            field.push_back(c);
        }
        ++i;
    }
    record.fields.push_back(std::move(field));
    return true;
}

std::string escape(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (const char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string join(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.push_back(',');
        out += escape(fields[i]);
    }
    return out;
}

}  // namespace fanpulse::csv
