#ifndef HDRAN_ERROR_HPP
#define HDRAN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hdran {

/// A precondition on an argument was violated (k < 3, label out of range, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured size or work budget would be exceeded. Raised before any
/// work is done, so callers never observe partial state.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numerical procedure could not meet its contract (no bracket, no
/// convergence within the iteration cap).
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input file.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hdran

#endif  // HDRAN_ERROR_HPP
