#pragma once

#include <stdexcept>

namespace signspec {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Size or index mismatch between operands.
class dimension_error : public error {
public:
    using error::error;
};

/// Malformed CSV or JSON matrix input.
class parse_error : public error {
public:
    using error::error;
};

/// A pair table that violates the orientation/reflexivity conditions of a
/// relation set.
class relation_error : public error {
public:
    using error::error;
};

/// An operation that requires a linear order received a non-transitive
/// relation set.
class not_transitive_error : public error {
public:
    using error::error;
};

/// A documented precondition of an operation does not hold for the input.
class precondition_error : public error {
public:
    using error::error;
};

/// Iterative eigenvalue computation exceeded its sweep budget.
class convergence_error : public error {
public:
    using error::error;
};

/// Two independent routes to the same quantity disagreed.
class verification_error : public error {
public:
    using error::error;
};

}  // namespace signspec
