#pragma once

#include <stdexcept>
#include <string>

namespace padic {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands belong to different scalar universes (field kind, p, or precision).
class descriptor_mismatch : public error {
public:
    using error::error;
};

/// Matrix or vector shapes are not conformable for the requested operation.
class shape_error : public error {
public:
    using error::error;
};

class division_by_zero : public error {
public:
    using error::error;
};

/// A Q_p addition cancelled every tracked digit: the result is
/// indistinguishable from zero at the working precision.  Callers that
/// verify identities opt into treating this as exact zero (Cancel::zero).
class zero_at_precision : public error {
public:
    using error::error;
};

/// An enumeration would exceed the configured candidate budget.
class budget_exceeded : public error {
public:
    using error::error;
};

/// The operation is outside the supported parameter range (e.g. square
/// roots in Q_2).
class unsupported : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    using error::error;
};

/// A documented precondition does not hold (invalid witness, not a fixed
/// point, ...).  Distinct from a checked property evaluating to false.
class precondition_error : public error {
public:
    using error::error;
};

} // namespace padic
