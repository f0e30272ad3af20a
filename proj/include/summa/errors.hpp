#pragma once

#include <stdexcept>
#include <string>

namespace summa {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Requested index/range exceeds what was sieved, cached, or is representable.
struct SizingError : Error {
    explicit SizingError(const std::string& msg) : Error(msg) {}
};

// Argument outside the mathematical or supported numerical domain.
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Evaluation at (or too near) a pole of the function.
struct PoleError : Error {
    explicit PoleError(const std::string& msg) : Error(msg) {}
};

// Denominator is a zero of zeta within working precision.
struct NearZeroError : Error {
    explicit NearZeroError(const std::string& msg) : Error(msg) {}
};

// Malformed persistent data (zero cache, config).
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

} // namespace summa
