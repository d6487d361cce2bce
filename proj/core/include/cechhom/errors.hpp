#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cechhom {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries the 1-based line number when known (0 otherwise).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A value contradicts a structural rule (built-in sphere rules, Hall membership, ...).
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// An enumeration would exceed its configured size bound.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

/// Arguments outside an operation's domain (bad degrees, mismatched ambient groups, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A homotopy group of a sphere was needed as a concrete group but the table does not know it.
class UnresolvedGroupError : public Error {
public:
    UnresolvedGroupError(int n, int q)
        : Error("pi_" + std::to_string(n) + "(S^" + std::to_string(q) + ") is not known to the table"),
          n_(n), q_(q) {}
    int n() const noexcept { return n_; }
    int q() const noexcept { return q_; }

private:
    int n_;
    int q_;
};

}  // namespace cechhom
