#include "flagcover/bruhat.hpp"

#include <algorithm>

#include "flagcover/errors.hpp"

namespace flagcover {

BruhatPerm BruhatPerm::inverse() const {
  BruhatPerm inv;
  inv.source = target;
  inv.target = source;
  inv.sigma.assign(sigma.size(), 0);
  for (std::size_t i = 0; i < sigma.size(); ++i) inv.sigma.at(sigma[i] - 1) = i + 1;
  return inv;
}

bool BruhatPerm::is_permutation() const {
  std::vector<bool> seen(sigma.size() + 1, false);
  for (auto j : sigma) {
    if (j < 1 || j > sigma.size() || seen[j]) return false;
    seen[j] = true;
  }
  return true;
}

BruhatPerm bruhat_perm(const PairGrid& grid) {
  const std::size_t d = grid.dim();
  BruhatPerm perm;
  perm.sigma.assign(d, 0);
  for (std::size_t i = 1; i <= d; ++i) {
    for (std::size_t j = 1; j <= d; ++j) {
      if (grid(i, j) > grid(i - 1, j)) {
        perm.sigma[i - 1] = j;
        break;
      }
    }
  }
  if (!perm.is_permutation()) {
    throw InternalInconsistency("relative position of a flag pair is not a permutation");
  }
  return perm;
}

BruhatPerm bruhat_perm(const Flag& u, const Flag& v) { return bruhat_perm(PairGrid(u, v)); }

BruhatPerm bruhat_perm(const FlagTuple& t, std::size_t a, std::size_t b) {
  BruhatPerm perm = bruhat_perm(t[a], t[b]);
  perm.source = a;
  perm.target = b;
  return perm;
}

GeneratingSet two_flag_generators(const FlagTuple& t, std::size_t a, std::size_t b) {
  const BruhatPerm sigma = bruhat_perm(t, a, b);
  GeneratingSet out;
  for (std::size_t i = 1; i <= t.dim(); ++i) {
    std::vector<LayerRef> layers{{a, i}};
    if (b != a) layers.push_back({b, sigma(i)});
    auto witness = find_witness(t, layers);
    if (!witness) {
      throw InternalInconsistency("no common new vector for " + to_string(layers[0]) +
                                  " and its Bruhat partner");
    }
    out.sets.push_back({std::move(layers), std::move(*witness)});
  }
  return out;
}

GeneratingSet two_flag_generators(const Flag& u, const Flag& v) {
  return two_flag_generators(FlagTuple({u, v}), kU, kV);
}

std::vector<std::size_t> permutation_from_basis(const Flag& u, const Flag& v,
                                                const std::vector<Vector>& basis) {
  std::vector<std::size_t> tau;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!u.is_new(basis[i], i + 1)) {
      throw InvalidArgument("basis vector " + std::to_string(i + 1) + " is not new for U" +
                            std::to_string(i + 1));
    }
    tau.push_back(v.level_of(basis[i]));
  }
  return tau;
}

}  // namespace flagcover
