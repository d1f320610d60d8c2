#pragma once

#include <stdexcept>
#include <string>

namespace gcp {

// Input violates a documented precondition (mismatched r, bad index, ...).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A configured cap (group order, word length, expansion dimension) was hit.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// No usable configuration (e.g. no suitable prime) could be found.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Word-grammar errors carry the byte offset of the offending token.
struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

// A rewrite rule was applied where its left-hand pattern does not match.
struct RuleApplicationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace gcp
