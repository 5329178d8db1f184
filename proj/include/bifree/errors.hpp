#pragma once

#include <stdexcept>
#include <string>

namespace bifree {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Enumeration request beyond the configured cap.
class size_error : public error {
public:
  using error::error;
};

/// Mismatched ground sets, truncation orders, or invalid scalar arguments.
class argument_error : public error {
public:
  using error::error;
};

/// Violated partial-order precondition (p not below q, block too large, ...).
class order_error : public error {
public:
  using error::error;
};

/// Division by a series with vanishing constant term.
class division_error : public error {
public:
  using error::error;
};

/// Monomial division applied to a series with nonzero low-order coefficients.
class divisibility_error : public error {
public:
  using error::error;
};

/// Composition with an inner series whose constant term is nonzero.
class composition_error : public error {
public:
  using error::error;
};

/// Compositional inverse of a series with f(0) != 0 or f'(0) == 0.
class inversion_error : public error {
public:
  using error::error;
};

/// Input outside the mathematical domain of the operation (e.g. kappa_1 = 0
/// for an S-transform, or a multiplicative function not in M_1).
class domain_error : public error {
public:
  using error::error;
};

/// Malformed JSON or configuration input.
class parse_error : public error {
public:
  using error::error;
};

}  // namespace bifree
