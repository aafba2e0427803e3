#pragma once

#include <stdexcept>
#include <string>

namespace reeder {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed arguments: bad ranks, out-of-range vertices, dimension mismatches.
struct ArgumentError : Error {
    explicit ArgumentError(const std::string& msg) : Error(msg) {}
};

// Unknown catalog name or invalid parameters for a named real form.
struct CatalogError : Error {
    explicit CatalogError(const std::string& msg) : Error(msg) {}
};

// Request is well-formed but outside what the method supports:
// vertex subsets that are not unions of finite diagrams, even fundamental
// groups, families without a closed-form count or a built-in recipe.
struct UnsupportedError : Error {
    explicit UnsupportedError(const std::string& msg) : Error(msg) {}
};

// State space too large for the configured enumeration cap.
struct CapError : Error {
    explicit CapError(const std::string& msg) : Error(msg) {}
};

} // namespace reeder
