#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gci {

// Malformed input: bad config, bad polynomial text, mismatched shapes.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public ValidationError {
public:
    ParseError(const std::string& msg, std::size_t position)
        : ValidationError(msg + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Input is well-formed but a mathematical precondition does not hold
// (class not in the kernel, nonvanishing H^1 hypothesis, ...).
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace gci
