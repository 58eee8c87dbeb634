#pragma once

#include <stdexcept>
#include <string>

namespace slicebound {

/// Malformed notation text (bad token, unbalanced bracket, ...).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Well-formed input that violates a diagram or code invariant.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input outside the domain of an operation (a link passed to a knot-only
/// query, a split diagram where connectivity is required).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Oracle refused a diagram above its crossing limit.
class LimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two computations that must agree did not. Always a bug, never bad input.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace slicebound
