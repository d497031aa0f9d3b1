#include "flagcover/subspace.hpp"

#include <algorithm>

#include "flagcover/errors.hpp"

namespace flagcover {

namespace {

void check_compatible(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.field() != b.field()) {
    throw DimensionMismatch("subspaces of different ambient spaces (" +
                            std::to_string(a.ambient_dim()) + " vs " +
                            std::to_string(b.ambient_dim()) + ")");
  }
}

std::size_t first_nonzero(const Vector& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) return i;
  }
  return v.size();
}

}  // namespace

Subspace Subspace::zero(const Field& field, std::size_t ambient_dim) {
  Subspace s;
  s.field_ = field;
  s.ambient_dim_ = ambient_dim;
  return s;
}

Subspace Subspace::whole(const Field& field, std::size_t ambient_dim) {
  Subspace s = zero(field, ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    s.basis_.push_back(unit_vector(field, ambient_dim, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(const Field& field, std::size_t ambient_dim,
                        std::span<const Vector> generators) {
  Subspace s = zero(field, ambient_dim);
  for (const auto& g : generators) s.extend(g);
  return s;
}

Matrix Subspace::basis() const {
  return Matrix::from_columns(field_, ambient_dim_, basis_);
}

Vector Subspace::reduced(Vector v) const {
  if (v.size() != ambient_dim_) {
    throw DimensionMismatch("vector of length " + std::to_string(v.size()) +
                            " in K^" + std::to_string(ambient_dim_));
  }
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const Scalar& coeff = v[pivots_[r]];
    if (!coeff.is_zero()) axpy(v, -coeff, basis_[r]);
  }
  return v;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduced(v)); }

bool Subspace::contains(const Subspace& other) const {
  check_compatible(*this, other);
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const Vector& v) { return contains(v); });
}

bool Subspace::extend(const Vector& v) {
  Vector r = reduced(v);
  const std::size_t pivot = first_nonzero(r);
  if (pivot == r.size()) return false;
  Scalar inv = r[pivot].inverse();
  for (auto& x : r) x *= inv;
  for (auto& row : basis_) {
    if (!row[pivot].is_zero()) axpy(row, -row[pivot], r);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  const auto offset = pos - pivots_.begin();
  pivots_.insert(pos, pivot);
  basis_.insert(basis_.begin() + offset, std::move(r));
  return true;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  check_compatible(a, b);
  const std::size_t d = a.ambient_dim();
  const Field& field = a.field();
  // Zassenhaus: rows (x, x) for x in a and (y, 0) for y in b; after echelon
  // reduction the rows with vanishing left half span a ∩ b in the right half.
  Subspace work = Subspace::zero(field, 2 * d);
  for (const auto& x : a.basis_vectors()) {
    Vector row = x;
    row.insert(row.end(), x.begin(), x.end());
    work.extend(row);
  }
  for (const auto& y : b.basis_vectors()) {
    Vector row = y;
    row.resize(2 * d, field.zero());
    work.extend(row);
  }
  Subspace out = Subspace::zero(field, d);
  for (const auto& row : work.basis_vectors()) {
    if (first_nonzero(row) >= d) out.extend(Vector(row.begin() + static_cast<std::ptrdiff_t>(d), row.end()));
  }
  return out;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  check_compatible(a, b);
  Subspace out = a;
  for (const auto& y : b.basis_vectors()) out.extend(y);
  return out;
}

std::size_t intersection_dim(const Subspace& a, const Subspace& b) {
  return a.dim() + b.dim() - sum(a, b).dim();
}

bool member(const Vector& v, const Subspace& s) { return s.contains(v); }

namespace {

bool avoids_all(const Vector& v, std::span<const Subspace> avoid) {
  return std::none_of(avoid.begin(), avoid.end(),
                      [&](const Subspace& a) { return a.contains(v); });
}

}  // namespace

Vector enumerate_avoiding(const Subspace& w, std::span<const Subspace> avoid) {
  const Field& field = w.field();
  if (field.is_rational()) {
    throw InvalidArgument("exhaustive enumeration needs a finite field");
  }
  const std::uint64_t p = field.characteristic();
  const auto& basis = w.basis_vectors();
  std::vector<std::uint64_t> coeffs(basis.size(), 0);
  // Counting order with the first coordinate least significant; the all-zero
  // tuple is skipped since 0 lies in every subspace.
  while (true) {
    std::size_t pos = 0;
    while (pos < coeffs.size() && coeffs[pos] == p - 1) coeffs[pos++] = 0;
    if (pos == coeffs.size()) return {};
    ++coeffs[pos];
    Vector v = zero_vector(field, w.ambient_dim());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (coeffs[i] != 0) axpy(v, field.from_int(static_cast<long long>(coeffs[i])), basis[i]);
    }
    if (avoids_all(v, avoid)) return v;
  }
}

Vector avoid_subspaces(const Subspace& w, std::span<const Subspace> avoid) {
  for (const auto& a : avoid) {
    if (a.ambient_dim() != w.ambient_dim() || a.field() != w.field()) {
      throw DimensionMismatch("avoided subspace lives in a different ambient space");
    }
    if (a.contains(w)) {
      throw CoverageImpossible("an avoided subspace contains the search space");
    }
  }
  const Field& field = w.field();
  Vector v = zero_vector(field, w.ambient_dim());
  const auto available = field.order();  // nullopt: infinitely many scalars
  for (std::size_t k = 0; k < avoid.size(); ++k) {
    const Subspace& next = avoid[k];
    if (!next.contains(v)) continue;
    const auto& basis = w.basis_vectors();
    auto u = std::find_if(basis.begin(), basis.end(),
                          [&](const Vector& b) { return !next.contains(b); });
    // v + c*u leaves `next` for every c != 0; each handled subspace blocks at
    // most one c, so k + 1 distinct nonzero scalars suffice.
    std::size_t tries = k + 1;
    bool found = false;
    if (available && *available - 1 < tries) tries = *available - 1;
    for (std::size_t c = 1; c <= tries && !found; ++c) {
      Vector candidate = v;
      axpy(candidate, field.from_int(static_cast<long long>(c)), *u);
      if (avoids_all(candidate, avoid.subspan(0, k + 1))) {
        v = std::move(candidate);
        found = true;
      }
    }
    if (!found) {
      if (field.is_rational()) {
        throw InternalInconsistency("incremental avoidance failed over the rationals");
      }
      Vector exhaustive = enumerate_avoiding(w, avoid);
      if (exhaustive.empty()) {
        throw FieldTooSmall("no vector of the subspace avoids all " +
                            std::to_string(avoid.size()) + " subspaces over " +
                            field.name());
      }
      return exhaustive;
    }
  }
  return v;
}

}  // namespace flagcover
