#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace localhk {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Problem too large for a dense code path.
class CapacityError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class SingularityError : public Error {
public:
    using Error::Error;
};

class ScheduleError : public Error {
public:
    using Error::Error;
};

/// One failed condition of the b-boundable predicate. Condition 0 means the
/// boundary vector itself is trivial; 1..3 are the three subset conditions.
struct Violation {
    int condition = 0;
    std::string message;
};

class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<Violation> violations)
        : Error(summarize(violations)), violations_(std::move(violations)) {}
    const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
    static std::string summarize(const std::vector<Violation>& vs) {
        std::string out = "subset is not b-boundable:";
        for (const auto& v : vs) out += " [" + v.message + "]";
        return out;
    }
    std::vector<Violation> violations_;
};

}  // namespace localhk
