#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "flagcover/field.hpp"
#include "flagcover/matrix.hpp"

namespace flagcover {

/// A linear subspace of K^d, stored as a reduced echelon basis: each basis
/// vector has a pivot coordinate where it is 1 and every other basis vector
/// is 0. The representation is canonical, so equal subspaces compare equal.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(const Field& field, std::size_t ambient_dim);
  static Subspace whole(const Field& field, std::size_t ambient_dim);
  static Subspace span(const Field& field, std::size_t ambient_dim,
                       std::span<const Vector> generators);

  const Field& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return basis_.size(); }

  /// Columns form a basis (ambient_dim x dim).
  Matrix basis() const;
  const std::vector<Vector>& basis_vectors() const noexcept { return basis_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  /// Adds v to the spanning set; returns true iff the dimension grew.
  bool extend(const Vector& v);

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  /// v minus its projection along the echelon basis.
  Vector reduced(Vector v) const;

  Field field_;
  std::size_t ambient_dim_ = 0;
  std::vector<Vector> basis_;        // sorted by pivot
  std::vector<std::size_t> pivots_;  // ascending
};

/// Basis of a ∩ b (Zassenhaus). Throws DimensionMismatch.
Subspace intersect(const Subspace& a, const Subspace& b);
/// a + b. Throws DimensionMismatch.
Subspace sum(const Subspace& a, const Subspace& b);
/// dim(a ∩ b) via dim a + dim b - dim(a + b).
std::size_t intersection_dim(const Subspace& a, const Subspace& b);

bool member(const Vector& v, const Subspace& s);

/// A vector of `w` lying outside every subspace in `avoid`.
///
/// Incremental procedure: keep v avoiding the subspaces processed so far; to
/// also avoid the next one, if v lies in it pick the first basis vector u of w
/// outside it and try v + c*u for c = 1, 2, ..., k+1 (k = subspaces already
/// handled). Each handled subspace rules out at most one c. Over a prime field
/// with too few nonzero scalars the search falls back to enumerating w.
///
/// Throws CoverageImpossible if some avoided subspace contains w, and
/// FieldTooSmall if over a finite field no such vector exists.
Vector avoid_subspaces(const Subspace& w, std::span<const Subspace> avoid);

/// Exhaustive scan of w over a prime field, in counting order of the
/// coefficient tuple. Returns an empty vector when nothing qualifies.
Vector enumerate_avoiding(const Subspace& w, std::span<const Subspace> avoid);

}  // namespace flagcover
