#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace parstem {

// Raised when a token is empty, whitespace-only, or normalizes to nothing.
class EmptyTokenError : public std::runtime_error {
public:
    explicit EmptyTokenError(const std::string& what) : std::runtime_error(what) {}
};

// Raised by the lexicon and gold-file loaders; carries the 1-based line.
class ParseError : public std::runtime_error {
public:
    enum class Kind { MalformedLine, DuplicateKey, EmptyField };

    ParseError(Kind kind, std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          kind_(kind),
          line_(line) {}

    Kind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }

private:
    Kind kind_;
    std::size_t line_;
};

// Raised when a stem result is classified against the wrong gold entry.
class WordMismatchError : public std::logic_error {
public:
    explicit WordMismatchError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace parstem
