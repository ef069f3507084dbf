#pragma once

#include <stdexcept>
#include <string>

namespace dgli {

// Base class; maps to CLI exit code 1 when no subclass matches.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or inconsistent input (exit code 2).
struct DataError : Error {
    explicit DataError(const std::string& what) : Error(what) {}
};

// Degenerate or singular numerical situation (exit code 3).
struct NumericError : Error {
    explicit NumericError(const std::string& what) : Error(what) {}
};

}  // namespace dgli
