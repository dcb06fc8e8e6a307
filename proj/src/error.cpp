#include "fanpulse/error.hpp"

namespace fanpulse {

namespace {

std::string decorate(const std::string& message, std::optional<std::size_t> line) {
    if (!line) return message;
    return "line " + std::to_string(*line) + ": " + message;
}

}  // namespace

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::io: return "io";
        case ErrorKind::parse: return "parse";
        case ErrorKind::schema: return "schema";
        case ErrorKind::data: return "data";
        case ErrorKind::config: return "config";
        case ErrorKind::usage: return "usage";
        case ErrorKind::corpus_rejected: return "corpus-rejected";
        case ErrorKind::alignment: return "alignment";
        case ErrorKind::join: return "join";
        case ErrorKind::undefined_correlation: return "undefined-correlation";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::optional<std::size_t> line)
    : std::runtime_error(decorate(message, line)), kind_(kind), line_(line) {}

Error Error::with_stage(std::string stage) const {
    Error tagged(kind_, "[" + stage + "] " + what());
    tagged.line_ = line_;
    tagged.stage_ = std::move(stage);
    return tagged;
}

}  // namespace fanpulse
