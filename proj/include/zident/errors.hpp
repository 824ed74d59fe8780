#pragma once

#include <stdexcept>
#include <string>

namespace zident {

/// Input text (expression, word, JSON payload) failed to parse.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t position)
        : std::runtime_error(std::move(message)), position_(position) {}
    explicit ParseError(std::string message)
        : std::runtime_error(std::move(message)), position_(0) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Mathematically invalid request (divergent object, domain violation).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Requested accuracy cannot be met with the given precision budget.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace zident
