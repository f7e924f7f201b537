#pragma once

#include <stdexcept>
#include <string>

namespace bladeprof {

// Malformed or inconsistent run configuration. Carries the 1-based line
// number of the offending entry, or 0 when the problem is file-wide
// (e.g. a missing required key).
class ConfigError : public std::runtime_error {
public:
    ConfigError(int line, const std::string& msg)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// Evaluation outside a declared domain, or a tabulated law dipping
// non-positive between its samples.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// File could not be read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace bladeprof
