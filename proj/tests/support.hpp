#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "flagcover/cover3.hpp"
#include "flagcover/flags.hpp"
#include "flagcover/generating_set.hpp"

namespace testing {

using namespace flagcover;

inline const Field Q = Field::rationals();

inline Vector vec(const Field& f, std::initializer_list<long long> xs) {
  Vector v;
  for (auto x : xs) v.push_back(f.from_int(x));
  return v;
}

inline Subspace span_of(const Field& f, std::size_t d, std::vector<Vector> gens) {
  return Subspace::span(f, d, gens);
}

/// Transverse triple in K^d over the rationals.
inline FlagTuple generic_triple(std::uint64_t seed, std::size_t d = 3) {
  return random_transverse_tuple(3, d, Q, seed).tuple;
}

/// Direct sum of two generic K^3 triples: the d = 6 lower-bound instance.
inline FlagTuple equality_instance(std::uint64_t seed = 11) {
  return direct_sum(generic_triple(seed), generic_triple(seed + 1));
}

inline FlagTuple identical_triple(std::size_t d, const Field& f = Q, std::uint64_t seed = 3) {
  const Flag u = random_flag(d, f, seed);
  return FlagTuple({u, u, u});
}

/// Entries in {-1, 0, 1}: many coincidences, so G has long and crossing cycles.
inline FlagTuple degenerate_tuple(std::size_t m, std::size_t d, std::uint64_t seed,
                                  const Field& f = Q) {
  return random_tuple(m, d, f, seed, 1);
}

/// Mixed family of triples used by property tests: degenerate rationals, small
/// prime fields and generic rationals.
inline FlagTuple mixed_triple(std::uint64_t seed, std::size_t d) {
  switch (seed % 4) {
    case 0: return degenerate_tuple(3, d, seed);
    case 1: return random_tuple(3, d, Field::prime(3), seed, 2);
    case 2: return random_tuple(3, d, Field::prime(2), seed, 1);
    default: return random_tuple(3, d, Q, seed, 4);
  }
}

/// Every vector of F_p^d in counting order.
inline std::vector<Vector> all_vectors(const Field& f, std::size_t d) {
  const auto p = static_cast<long long>(f.characteristic());
  std::vector<Vector> out;
  std::vector<long long> digits(d, 0);
  while (true) {
    Vector v;
    for (auto x : digits) v.push_back(f.from_int(x));
    out.push_back(std::move(v));
    std::size_t i = 0;
    while (i < d && ++digits[i] == p) digits[i++] = 0;
    if (i == d) break;
  }
  return out;
}

/// Brute force over F_p: whether some vector is new for every listed layer.
inline bool brute_compatible(const FlagTuple& t, const std::vector<LayerRef>& layers) {
  for (const auto& v : all_vectors(t.field(), t.dim())) {
    bool ok = true;
    for (const auto& l : layers) {
      const auto& f = t[l.flag];
      if (!f.layer(l.level).contains(v) || f.layer(l.level - 1).contains(v)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

/// Brute force over F_p: log_p of the number of vectors in `s`.
inline std::size_t brute_dim(const Subspace& s) {
  std::size_t count = 0;
  for (const auto& v : all_vectors(s.field(), s.ambient_dim())) count += s.contains(v) ? 1 : 0;
  std::size_t dim = 0;
  for (std::size_t n = 1; n < count; n *= s.field().characteristic()) ++dim;
  return dim;
}

/// The kind of unit to look for across seeds.
inline std::optional<std::pair<FlagTuple, CoverUnit>> find_unit(
    UnitKind kind, const std::function<bool(const CoverUnit&)>& extra = {}) {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    for (std::size_t d = 3; d <= 8; ++d) {
      const auto t = seed % 2 ? random_tuple(3, d, Field::prime(3), seed, 2)
                              : degenerate_tuple(3, d, seed);
      const auto r = synth3_detailed(t);
      for (const auto* group : {&r.classification.A, &r.classification.B, &r.classification.C}) {
        for (const auto& u : *group) {
          if (u.kind == kind && (!extra || extra(u))) return std::make_pair(t, u);
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace testing
