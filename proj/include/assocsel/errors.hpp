#pragma once

#include <stdexcept>
#include <string>

namespace assocsel {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Word or length outside the configured universe, or a combinatorial guard.
class RangeError : public Error {
public:
    using Error::Error;
};

// Malformed encoding (pair codes, set codes, advice words).
class FormatError : public Error {
public:
    using Error::Error;
};

// An operation's documented precondition does not hold. The message names
// the offending pair or triple.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Something the theory guarantees failed to happen; indicates a bug.
class InvariantError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& source, std::size_t line, const std::string& what)
        : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace assocsel
