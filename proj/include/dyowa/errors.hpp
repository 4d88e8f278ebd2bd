#pragma once

#include <stdexcept>
#include <string>

namespace dyowa {

// Base class for all recoverable errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input length does not match the arity an operator requires.
class ArityError : public Error {
public:
    explicit ArityError(const std::string& what) : Error(what) {}
};

// A weight-function family produced weights that do not sum to 1.
class FamilyError : public Error {
public:
    explicit FamilyError(const std::string& what) : Error(what) {}
};

// Two images (or an image and a block size) have incompatible dimensions.
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& what) : Error(what) {}
};

// Malformed input data, e.g. a broken PGM stream or out-of-range samples.
class FormatError : public Error {
public:
    explicit FormatError(const std::string& what) : Error(what) {}
};

// Invalid user-facing parameters (bad window size, unknown method name, ...).
class UsageError : public Error {
public:
    explicit UsageError(const std::string& what) : Error(what) {}
};

}  // namespace dyowa
