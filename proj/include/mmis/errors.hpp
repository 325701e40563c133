#pragma once

#include <stdexcept>
#include <string>

namespace mmis {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad user input / configuration (CLI exit code 2).
struct ConfigError : Error {
    using Error::Error;
};

// A cross-check between two independent routes failed (CLI exit code 3).
struct OracleMismatch : Error {
    using Error::Error;
};

// Requested problem size exceeds the dense-simulation budget (CLI exit code 4).
struct BudgetExceeded : Error {
    using Error::Error;
};

// The requested symmetry sector contains no states.
struct EmptySectorError : Error {
    using Error::Error;
};

// A character table failed an exact consistency check.
struct CorruptTableError : Error {
    using Error::Error;
};

}  // namespace mmis
