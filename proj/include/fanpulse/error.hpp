#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fanpulse {

enum class ErrorKind {
    io,
    parse,
    schema,
    data,
    config,
    usage,
    corpus_rejected,
    alignment,
    join,
    undefined_correlation,
};

std::string_view error_kind_name(ErrorKind kind);

// Single exception type for the whole library; callers branch on kind().
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message,
          std::optional<std::size_t> line = std::nullopt);

    ErrorKind kind() const noexcept { return kind_; }
    std::optional<std::size_t> line() const noexcept { return line_; }
    const std::string& stage() const noexcept { return stage_; }

    // Copy of this error tagged with the pipeline stage it came from.
    Error with_stage(std::string stage) const;

private:
    ErrorKind kind_;
    std::optional<std::size_t> line_;
    std::string stage_;
};

}  // namespace fanpulse
