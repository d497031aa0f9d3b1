#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace flagcover {

class Scalar;

/// The field all arithmetic happens in: the rationals or F_p for a prime p.
///
/// A Field is a small value type; two fields compare equal iff they have the
/// same characteristic. Moduli are limited to p < 2^32 so that products of
/// residues fit in 64 bits.
class Field {
 public:
  Field() = default;

  static Field rationals() noexcept { return Field{}; }
  /// Throws InvalidArgument unless p is a prime below 2^32.
  static Field prime(std::uint64_t p);
  /// Parses "rational" or "fp:<p>".
  static Field parse(std::string_view text);

  bool is_rational() const noexcept { return p_ == 0; }
  /// 0 for the rationals.
  std::uint64_t characteristic() const noexcept { return p_; }
  /// Number of elements, or nullopt for the (infinite) rationals.
  std::optional<std::uint64_t> order() const noexcept;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long value) const;
  /// Maps a rational into the field; ReductionFailure if p divides the
  /// denominator.
  Scalar from_rational(const mpq_class& value) const;
  /// Parses "num/den", "k", or a decimal residue.
  Scalar parse_scalar(std::string_view text) const;

  /// "rational" or "fp:<p>".
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// An exact field element. Rationals are kept in lowest terms with a positive
/// denominator (GMP canonical form); residues are kept in [0, p).
class Scalar {
 public:
  /// Rational zero.
  Scalar() = default;

  Field field() const noexcept;
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Valid only over the rationals.
  const mpq_class& rational() const;
  /// Valid only over a prime field.
  std::uint64_t residue() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  /// Throws InvalidArgument on division by zero.
  Scalar& operator/=(const Scalar& rhs);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "num/den" in lowest terms, "k" for integers, decimal residue over F_p.
  std::string to_string() const;

 private:
  friend class Field;
  void check_same_field(const Scalar& rhs) const;

  std::uint64_t p_ = 0;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

}  // namespace flagcover
