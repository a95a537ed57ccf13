#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace afsolve {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Duplicate argument names, undeclared attack endpoints, invalid ids.
class FrameworkError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// A caller-checked precondition of a verification routine did not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// The search node budget ran out; the answer is unknown.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

// The caller's stop predicate fired (wall-clock timeouts live outside the library).
class SearchCancelled : public Error {
public:
    using Error::Error;
};

class OracleCapExceeded : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

class SolverError : public Error {
public:
    using Error::Error;
};

}  // namespace afsolve
