#pragma once

#include <stdexcept>
#include <string>

namespace cff {

// Invalid input or a violated operation contract, detectable from the arguments.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input exceeds a documented size limit (oracle scale, formula-mode reduction).
class SizeLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Instance text error with a 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int column)
        : std::runtime_error(msg), line_(line), column_(column) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace cff
