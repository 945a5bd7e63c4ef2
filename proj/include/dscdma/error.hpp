#pragma once

#include <stdexcept>
#include <string>

namespace dscdma {

/// Placement could not satisfy the exclusion constraints within the retry cap.
class InfeasiblePacking : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A closed-form evaluation produced a value outside its mathematical range.
class NumericalFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Scenario text could not be parsed. Carries the offending key and line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::string key, int line)
        : std::runtime_error(what), key_(std::move(key)), line_(line) {}

    const std::string& key() const noexcept { return key_; }
    int line() const noexcept { return line_; }

private:
    std::string key_;
    int line_;
};

/// A parameter violates a named constraint.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace dscdma
