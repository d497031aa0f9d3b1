#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "flagcover/field.hpp"
#include "flagcover/matrix.hpp"
#include "flagcover/subspace.hpp"

namespace flagcover {

/// A complete flag in K^d, given by an ordered basis b_1..b_d:
/// layer(i) = span(b_1..b_i).
class Flag {
 public:
  Flag() = default;
  /// Throws InvalidArgument unless `basis` is square, nonempty and invertible.
  explicit Flag(Matrix basis);

  static Flag standard(std::size_t d, const Field& field);

  std::size_t dim() const noexcept { return basis_.rows(); }
  const Field& field() const noexcept { return basis_.field(); }
  const Matrix& basis() const noexcept { return basis_; }

  /// Layer i for 0 <= i <= d.
  const Subspace& layer(std::size_t i) const { return layers_.at(i); }

  /// The unique level i with v in layer(i) \ layer(i-1); 0 for v = 0.
  std::size_t level_of(const Vector& v) const;
  /// v is new for layer(level).
  bool is_new(const Vector& v, std::size_t level) const {
    return level > 0 && level_of(v) == level;
  }

  /// Same layers (bases may differ).
  friend bool operator==(const Flag& a, const Flag& b) { return a.layers_ == b.layers_; }

 private:
  Matrix basis_;
  Matrix inverse_;
  std::vector<Subspace> layers_;
};

/// An ordered list of m >= 1 flags sharing d and the field.
class FlagTuple {
 public:
  FlagTuple() = default;
  /// Throws InvalidArgument when empty, DimensionMismatch on mixed d/field.
  explicit FlagTuple(std::vector<Flag> flags);

  std::size_t size() const noexcept { return flags_.size(); }
  std::size_t dim() const noexcept { return flags_.empty() ? 0 : flags_.front().dim(); }
  Field field() const { return flags_.at(0).field(); }
  const Flag& operator[](std::size_t i) const { return flags_.at(i); }
  const std::vector<Flag>& flags() const noexcept { return flags_; }

  friend bool operator==(const FlagTuple&, const FlagTuple&) = default;

 private:
  std::vector<Flag> flags_;
};

/// dim(layer_i(u) ∩ layer_j(v)) for 0 <= i, j <= d, row-major in i.
class PairGrid {
 public:
  PairGrid(const Flag& u, const Flag& v);
  std::size_t dim() const noexcept { return d_; }
  std::size_t operator()(std::size_t i, std::size_t j) const { return table_[i * (d_ + 1) + j]; }

 private:
  std::size_t d_ = 0;
  std::vector<std::size_t> table_;
};

/// dim(U_i ∩ V_j ∩ W_k) for a triple, 0 <= i, j, k <= d.
class DimGrid {
 public:
  DimGrid() = default;
  explicit DimGrid(const FlagTuple& triple);

  std::size_t dim() const noexcept { return d_; }
  std::size_t operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return table_[(i * (d_ + 1) + j) * (d_ + 1) + k];
  }
  /// Lookup with levels given per flag index: levels[0] for U, [1] V, [2] W.
  std::size_t at(const std::array<std::size_t, 3>& levels) const {
    return (*this)(levels[0], levels[1], levels[2]);
  }

 private:
  std::size_t d_ = 0;
  std::vector<std::size_t> table_;
};

DimGrid dim_grid(const FlagTuple& triple);

/// Deterministic engine used by every randomized constructor.
using Rng = std::mt19937_64;

/// Integer entries uniform in [-coeff_bound, coeff_bound] (reduced into the
/// field), resampled until invertible; RetryExhausted after 1000 draws.
Flag random_flag(std::size_t d, const Field& field, std::uint64_t seed,
                 long long coeff_bound = 10);
Flag random_flag(std::size_t d, const Field& field, Rng& rng, long long coeff_bound = 10);

/// Flag with basis P*B: P a random permutation matrix, B unit upper
/// triangular whose off-diagonal entries are nonzero with probability
/// `density`. Such flags sit in arbitrary Bruhat cells relative to each
/// other, which exercises the non-generic code paths.
Flag random_sparse_flag(std::size_t d, const Field& field, Rng& rng,
                        double density = 0.3, long long coeff_bound = 2);

FlagTuple random_tuple(std::size_t m, std::size_t d, const Field& field,
                       std::uint64_t seed, long long coeff_bound = 10);
FlagTuple random_sparse_tuple(std::size_t m, std::size_t d, const Field& field,
                              std::uint64_t seed, double density = 0.3);

struct TransverseSample {
  FlagTuple tuple;
  std::size_t attempts = 0;
};

/// Draws random tuples until is_transverse holds; RetryExhausted after
/// `max_attempts`.
TransverseSample random_transverse_tuple(std::size_t m, std::size_t d,
                                         const Field& field, std::uint64_t seed,
                                         long long coeff_bound = 10,
                                         std::size_t max_attempts = 1000);

/// All subset intersections of one layer per flag have codimension
/// min(d, sum of codimensions).
bool is_transverse(const FlagTuple& t);

/// Flag i of the result has basis (t1[i] embedded in the first d coordinates)
/// followed by (t2[i] embedded in the last e coordinates).
FlagTuple direct_sum(const FlagTuple& t1, const FlagTuple& t2);

/// Applies one invertible change of basis g to every flag.
FlagTuple transform(const FlagTuple& t, const Matrix& g);

/// Entrywise reduction of a rational tuple into a prime field. Throws
/// ReductionFailure when a denominator vanishes mod p or a reduced basis is
/// singular.
FlagTuple reduce_mod(const FlagTuple& t, const Field& target);

}  // namespace flagcover
