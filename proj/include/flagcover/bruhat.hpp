#pragma once

#include <cstddef>
#include <vector>

#include "flagcover/flags.hpp"
#include "flagcover/generating_set.hpp"

namespace flagcover {

/// The relative position sigma of an ordered flag pair (U, V): sigma(i) is the
/// least j with dim(U_i ∩ V_j) > dim(U_{i-1} ∩ V_j). Levels are 1-based.
struct BruhatPerm {
  std::vector<std::size_t> sigma;  // sigma[i - 1] = sigma(i)
  std::size_t source = kU;
  std::size_t target = kV;

  std::size_t size() const noexcept { return sigma.size(); }
  std::size_t operator()(std::size_t i) const { return sigma.at(i - 1); }
  BruhatPerm inverse() const;
  bool is_permutation() const;

  friend bool operator==(const BruhatPerm& a, const BruhatPerm& b) { return a.sigma == b.sigma; }
};

BruhatPerm bruhat_perm(const PairGrid& grid);
/// Throws DimensionMismatch on different d or field.
BruhatPerm bruhat_perm(const Flag& u, const Flag& v);

/// Flags `a` and `b` of `t`, tagged with those indices.
BruhatPerm bruhat_perm(const FlagTuple& t, std::size_t a, std::size_t b);

/// d vectors s_1..s_d, s_i new for U_i and for V_{sigma(i)}. Sets are tagged
/// with flag indices 0 (U) and 1 (V).
GeneratingSet two_flag_generators(const Flag& u, const Flag& v);

/// Same for flags `a`, `b` of a tuple; layers carry those indices. When a == b
/// each set lists the single layer.
GeneratingSet two_flag_generators(const FlagTuple& t, std::size_t a, std::size_t b);

/// Reads a permutation back from a basis: tau(i) = level of s_i in V, after
/// checking s_i is new for U_i.
std::vector<std::size_t> permutation_from_basis(const Flag& u, const Flag& v,
                                                const std::vector<Vector>& basis);

}  // namespace flagcover
