#include "flagcover/flags.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "flagcover/errors.hpp"

namespace flagcover {

namespace {

constexpr std::size_t kMaxFlagDraws = 1000;

}  // namespace

Flag::Flag(Matrix basis) : basis_(std::move(basis)) {
  const std::size_t d = basis_.rows();
  if (d == 0 || basis_.cols() != d) {
    throw InvalidArgument("flag basis must be a nonempty square matrix");
  }
  auto inv = inverse(basis_);
  if (!inv) throw InvalidArgument("flag basis is singular");
  inverse_ = std::move(*inv);
  layers_.reserve(d + 1);
  Subspace layer = Subspace::zero(field(), d);
  layers_.push_back(layer);
  for (std::size_t c = 0; c < d; ++c) {
    layer.extend(basis_.column(c));
    layers_.push_back(layer);
  }
}

Flag Flag::standard(std::size_t d, const Field& field) {
  if (d == 0) throw InvalidArgument("flag dimension must be at least 1");
  return Flag(Matrix::identity(field, d));
}

std::size_t Flag::level_of(const Vector& v) const {
  Vector coords = inverse_ * v;
  for (std::size_t i = coords.size(); i > 0; --i) {
    if (!coords[i - 1].is_zero()) return i;
  }
  return 0;
}

FlagTuple::FlagTuple(std::vector<Flag> flags) : flags_(std::move(flags)) {
  if (flags_.empty()) throw InvalidArgument("a flag tuple needs at least one flag");
  for (const auto& f : flags_) {
    if (f.dim() != flags_.front().dim() || f.field() != flags_.front().field()) {
      throw DimensionMismatch("flags in a tuple must share dimension and field");
    }
  }
}

PairGrid::PairGrid(const Flag& u, const Flag& v) : d_(u.dim()) {
  if (u.dim() != v.dim() || u.field() != v.field()) {
    throw DimensionMismatch("flag pair with different dimension or field");
  }
  table_.assign((d_ + 1) * (d_ + 1), 0);
  for (std::size_t i = 0; i <= d_; ++i) {
    Subspace span = u.layer(i);
    for (std::size_t j = 1; j <= d_; ++j) {
      span.extend(v.basis().column(j - 1));
      table_[i * (d_ + 1) + j] = i + j - span.dim();
    }
  }
}

DimGrid::DimGrid(const FlagTuple& triple) : d_(triple.dim()) {
  if (triple.size() != 3) throw InvalidArgument("dimension grid needs exactly three flags");
  const Flag& u = triple[0];
  const Flag& v = triple[1];
  const Flag& w = triple[2];
  table_.assign((d_ + 1) * (d_ + 1) * (d_ + 1), 0);
  for (std::size_t i = 0; i <= d_; ++i) {
    for (std::size_t j = 0; j <= d_; ++j) {
      Subspace uv = intersect(u.layer(i), v.layer(j));
      Subspace span = uv;
      for (std::size_t k = 1; k <= d_; ++k) {
        span.extend(w.basis().column(k - 1));
        table_[(i * (d_ + 1) + j) * (d_ + 1) + k] = uv.dim() + k - span.dim();
      }
    }
  }
}

DimGrid dim_grid(const FlagTuple& triple) { return DimGrid(triple); }

Flag random_flag(std::size_t d, const Field& field, Rng& rng, long long coeff_bound) {
  if (d == 0) throw InvalidArgument("flag dimension must be at least 1");
  if (coeff_bound < 1) throw InvalidArgument("coeff_bound must be positive");
  std::uniform_int_distribution<long long> entry(-coeff_bound, coeff_bound);
  for (std::size_t attempt = 0; attempt < kMaxFlagDraws; ++attempt) {
    Matrix m(field, d, d);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) m(r, c) = field.from_int(entry(rng));
    }
    if (rank(m) == d) return Flag(std::move(m));
  }
  throw RetryExhausted("no invertible random basis after 1000 draws");
}

Flag random_flag(std::size_t d, const Field& field, std::uint64_t seed,
                 long long coeff_bound) {
  Rng rng(seed);
  return random_flag(d, field, rng, coeff_bound);
}

Flag random_sparse_flag(std::size_t d, const Field& field, Rng& rng, double density,
                        long long coeff_bound) {
  if (d == 0) throw InvalidArgument("flag dimension must be at least 1");
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<long long> entry(1, coeff_bound);
  std::bernoulli_distribution negative(0.5);
  Matrix upper = Matrix::identity(field, d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = r + 1; c < d; ++c) {
      if (!keep(rng)) continue;
      long long x = entry(rng);
      upper(r, c) = field.from_int(negative(rng) ? -x : x);
    }
  }
  Matrix permutation(field, d, d);
  for (std::size_t i = 0; i < d; ++i) permutation(perm[i], i) = field.one();
  return Flag(permutation * upper);
}

FlagTuple random_tuple(std::size_t m, std::size_t d, const Field& field,
                       std::uint64_t seed, long long coeff_bound) {
  Rng rng(seed);
  std::vector<Flag> flags;
  for (std::size_t i = 0; i < m; ++i) flags.push_back(random_flag(d, field, rng, coeff_bound));
  return FlagTuple(std::move(flags));
}

FlagTuple random_sparse_tuple(std::size_t m, std::size_t d, const Field& field,
                              std::uint64_t seed, double density) {
  Rng rng(seed);
  std::vector<Flag> flags;
  for (std::size_t i = 0; i < m; ++i) flags.push_back(random_sparse_flag(d, field, rng, density));
  return FlagTuple(std::move(flags));
}

TransverseSample random_transverse_tuple(std::size_t m, std::size_t d,
                                         const Field& field, std::uint64_t seed,
                                         long long coeff_bound,
                                         std::size_t max_attempts) {
  Rng rng(seed);
  for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
    std::vector<Flag> flags;
    for (std::size_t i = 0; i < m; ++i) flags.push_back(random_flag(d, field, rng, coeff_bound));
    FlagTuple t(std::move(flags));
    if (is_transverse(t)) return {std::move(t), attempt};
  }
  throw RetryExhausted("no transverse " + std::to_string(m) + "-tuple in K^" +
                       std::to_string(d) + " over " + field.name() + " after " +
                       std::to_string(max_attempts) + " attempts");
}

bool is_transverse(const FlagTuple& t) {
  const std::size_t d = t.dim();
  const std::size_t m = t.size();
  // Walk every choice of (subset of flags, one level per chosen flag) while
  // carrying the running intersection and codimension sum.
  std::function<bool(std::size_t, const Subspace&, std::size_t)> walk =
      [&](std::size_t f, const Subspace& meet, std::size_t codim_sum) -> bool {
    if (f == m) return true;
    if (!walk(f + 1, meet, codim_sum)) return false;
    for (std::size_t level = 1; level <= d; ++level) {
      Subspace next = intersect(meet, t[f].layer(level));
      const std::size_t sum = codim_sum + (d - level);
      if (d - next.dim() != std::min(d, sum)) return false;
      if (!walk(f + 1, next, sum)) return false;
    }
    return true;
  };
  return walk(0, Subspace::whole(t.field(), d), 0);
}

FlagTuple direct_sum(const FlagTuple& t1, const FlagTuple& t2) {
  if (t1.size() != t2.size()) {
    throw DimensionMismatch("direct sum of tuples with different flag counts");
  }
  if (t1.field() != t2.field()) throw DimensionMismatch("direct sum across fields");
  const std::size_t d = t1.dim();
  const std::size_t e = t2.dim();
  const Field field = t1.field();
  std::vector<Flag> flags;
  for (std::size_t i = 0; i < t1.size(); ++i) {
    Matrix basis(field, d + e, d + e);
    for (std::size_t c = 0; c < d; ++c) {
      for (std::size_t r = 0; r < d; ++r) basis(r, c) = t1[i].basis()(r, c);
    }
    for (std::size_t c = 0; c < e; ++c) {
      for (std::size_t r = 0; r < e; ++r) basis(d + r, d + c) = t2[i].basis()(r, c);
    }
    flags.emplace_back(std::move(basis));
  }
  return FlagTuple(std::move(flags));
}

FlagTuple transform(const FlagTuple& t, const Matrix& g) {
  std::vector<Flag> flags;
  for (const auto& f : t.flags()) flags.emplace_back(g * f.basis());
  return FlagTuple(std::move(flags));
}

FlagTuple reduce_mod(const FlagTuple& t, const Field& target) {
  if (!t.field().is_rational()) {
    if (t.field() == target) return t;
    throw ReductionFailure("can only reduce rational flags, got " + t.field().name());
  }
  const std::size_t d = t.dim();
  std::vector<Flag> flags;
  for (std::size_t i = 0; i < t.size(); ++i) {
    Matrix basis(target, d, d);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        basis(r, c) = target.from_rational(t[i].basis()(r, c).rational());
      }
    }
    if (rank(basis) != d) {
      throw ReductionFailure("flag " + std::to_string(i + 1) + " becomes singular over " +
                             target.name());
    }
    flags.emplace_back(std::move(basis));
  }
  return FlagTuple(std::move(flags));
}

}  // namespace flagcover
