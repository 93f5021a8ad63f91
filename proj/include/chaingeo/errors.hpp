#pragma once

#include <stdexcept>

namespace chaingeo {

/// Arithmetic between elements of different fields Q(sqrt n).
class RadicandMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Division by zero, square root of a negative number.
class ArithmeticError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A geometric operation was applied to circles that do not meet its
/// contact requirement.
class GeometryError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Invalid parameters for a construction or solver (n out of range,
/// non-positive radius, bad tolerance).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace chaingeo
