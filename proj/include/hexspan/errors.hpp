#pragma once

#include <stdexcept>
#include <string>

namespace hexspan {

// Parameter outside the domain an operation is defined on. Maps to CLI exit 2.
class RangeError : public std::invalid_argument {
public:
    RangeError(std::string parameter, const std::string& what)
        : std::invalid_argument(parameter + ": " + what), parameter_(std::move(parameter)) {}

    const std::string& parameter() const noexcept { return parameter_; }

private:
    std::string parameter_;
};

// Resource guard refusal. An exact search never answers past its guard. Maps to CLI exit 3.
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace hexspan
