/// @file errors.hpp
/// @brief Exception types shared by all ofb modules.
#pragma once

#include <stdexcept>
#include <string>

namespace ofb {

/// Argument outside the domain where a formula is defined (e.g. h <= 1).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An integrand or iterate produced NaN/Inf.
class NonFinite : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Root bracketing failed: no sign change on the search interval.
class BracketError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The discrete Dirichlet solve broke down (non-SPD system or stagnation).
class SingularSolve : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ofb
