#pragma once

#include <stdexcept>
#include <string>

namespace pnev {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad input data: malformed literals, non-prime modulus, inconsistent
// fixture, or a configuration outside the supported exact-decision scope.
// CLI exit status 1.
class FixtureError : public Error {
public:
    explicit FixtureError(const std::string& msg) : Error(msg) {}
};

// Parse failure with a position inside the offending literal.
class ParseError : public FixtureError {
public:
    ParseError(const std::string& msg, std::size_t column)
        : FixtureError(msg + " (column " + std::to_string(column + 1) + ")"),
          column_(column) {}
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

// Fixture escapes the exact decision procedures (e.g. an intersection
// point is irrational). Fails loudly instead of guessing.
class UnsupportedFixtureError : public FixtureError {
public:
    explicit UnsupportedFixtureError(const std::string& msg) : FixtureError(msg) {}
};

// Query beyond the certified radius of a truncated series.
class ReliabilityError : public FixtureError {
public:
    explicit ReliabilityError(const std::string& msg) : FixtureError(msg) {}
};

// A theorem hypothesis does not hold for the given data. Checkers report
// these as audited refusals; CLI exit status 2.
class HypothesisError : public Error {
public:
    explicit HypothesisError(const std::string& msg) : Error(msg) {}
};

// Image of the curve lies inside a divisor, so Q∘f vanishes identically.
class ContainmentError : public HypothesisError {
public:
    ContainmentError(const std::string& divisor, const std::string& msg)
        : HypothesisError(msg), divisor_(divisor) {}
    const std::string& divisor() const { return divisor_; }

private:
    std::string divisor_;
};

// Identities that are proved to hold failed to hold. Always a bug.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

} // namespace pnev
