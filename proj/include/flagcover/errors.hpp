#pragma once

#include <stdexcept>
#include <string>

namespace flagcover {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different ambient dimensions, fields, or tuple sizes.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Invalid argument value (non-prime modulus, d = 0, same-flag query, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Witness search: some avoided subspace contains the whole search space.
class CoverageImpossible : public Error {
 public:
  using Error::Error;
};

/// Witness search: a finite field has no vector outside the avoided subspaces.
class FieldTooSmall : public Error {
 public:
  using Error::Error;
};

class NotTransverse : public Error {
 public:
  using Error::Error;
};

/// height_order called on cycles that cross or interleave.
class NotComparable : public Error {
 public:
  using Error::Error;
};

/// Randomized construction gave up after its retry cap.
class RetryExhausted : public Error {
 public:
  using Error::Error;
};

class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

/// Entrywise reduction of a rational flag modulo p failed.
class ReductionFailure : public Error {
 public:
  using Error::Error;
};

/// A proven statement failed to hold; always an implementation bug.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace flagcover
