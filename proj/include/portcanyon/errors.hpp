#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace portcanyon {

/// Coarse error category, used by the command-line tool to pick an exit code.
enum class ErrorCategory {
    domain,        // argument outside the mathematical domain of an operation
    shape,         // mismatched grids or lengths
    lookup,        // missing key, off-grid angle
    pairing,       // base/vehicle scans do not match
    insufficient,  // not enough samples for an estimator
    degenerate,    // rank-deficient regression
    no_solution,   // inversion has no finite answer
    parse,         // malformed input file
    grid,          // non-uniform angle grid in input data
    config,        // bad configuration value
    io,
};

const char* to_string(ErrorCategory category) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, const std::string& what)
        : std::runtime_error(what), category_(category) {}

    ErrorCategory category() const noexcept { return category_; }

private:
    ErrorCategory category_;
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(ErrorCategory::domain, what) {}
};

struct ShapeError : Error {
    explicit ShapeError(const std::string& what) : Error(ErrorCategory::shape, what) {}
};

struct LookupError : Error {
    explicit LookupError(const std::string& what) : Error(ErrorCategory::lookup, what) {}
};

struct PairingError : Error {
    explicit PairingError(const std::string& what) : Error(ErrorCategory::pairing, what) {}
};

struct InsufficientDataError : Error {
    explicit InsufficientDataError(const std::string& what)
        : Error(ErrorCategory::insufficient, what) {}
};

struct DegenerateFitError : Error {
    explicit DegenerateFitError(const std::string& what)
        : Error(ErrorCategory::degenerate, what) {}
};

struct NoSolutionError : Error {
    explicit NoSolutionError(const std::string& what)
        : Error(ErrorCategory::no_solution, what) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(ErrorCategory::config, what) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error(ErrorCategory::io, what) {}
};

/// Malformed input row. `line()` is 1-based and counts the header line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(ErrorCategory::parse, "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

struct GridError : Error {
    explicit GridError(const std::string& what) : Error(ErrorCategory::grid, what) {}
};

}  // namespace portcanyon
