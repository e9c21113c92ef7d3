#pragma once

#include <stdexcept>
#include <string>

namespace cellcrystal {

/// Malformed input: bad Lie type, index out of range, word that fails a
/// precondition, mismatched braid window.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A B(∞) table was asked about an element above its generated height.
/// Distinct from "not a member": the caller should regenerate with a larger
/// bound.
class TableTooSmall : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No decomposition x = h_c + b was found with |c_i| <= bound.
class NoDecomposition : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural identity that must hold in the model failed at runtime.
class ModelViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cellcrystal
