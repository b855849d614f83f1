#pragma once

#include <stdexcept>
#include <string>

namespace radon {

/// Malformed input data: a table that is not a group, a set that is not a
/// subgroup, a rho-function violating its transformation law, ...
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain (e.g. L not contained in H).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two functions, measures or operators live on different spaces.
class SpaceMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace radon
