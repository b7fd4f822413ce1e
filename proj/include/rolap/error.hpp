#pragma once

#include <stdexcept>
#include <string>

namespace rolap {

/// Argument outside the mathematical domain of an operation (bad t, bad length, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Request exceeds what the implementation materializes explicitly
/// (word length above 64, graph order above 2^16, ...).
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Malformed textual input (word strings, code files).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace rolap
