#pragma once

#include <stdexcept>
#include <string>

namespace fano2 {

// Base type for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Divisor classes (or a form and a class) carry different basis tags.
struct BasisError : Error { using Error::Error; };

// Degenerate or out-of-domain numeric input.
struct InputError : Error { using Error::Error; };

// A linear system that should be solvable is singular.
struct SolveError : Error { using Error::Error; };

// Lookup into a closed rule table with an unknown key.
struct KeyError : Error { using Error::Error; };

// A data file failed to parse.
struct FormatError : Error { using Error::Error; };

// Parsed data violates a catalog or certificate invariant.
struct ValidationError : Error { using Error::Error; };

// A substitution is not total on the variables it is applied to.
struct SubstError : Error { using Error::Error; };

// A fresh variable name collides with an existing one.
struct NameError : Error { using Error::Error; };

// A presentation is not triangular-solvable where it must be.
struct ShapeError : Error { using Error::Error; };

// A certificate references an unknown external fact.
struct FactError : Error { using Error::Error; };

} // namespace fano2
