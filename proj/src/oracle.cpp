#include "flagcover/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <unordered_map>

#include "flagcover/errors.hpp"

namespace flagcover {

std::size_t CompatibleCatalog::count(std::size_t k) const {
  return static_cast<std::size_t>(std::count_if(
      entries.begin(), entries.end(), [k](const Entry& e) { return e.layers.size() == k; }));
}

void check_oracle_size(std::size_t m, std::size_t d) {
  if (m * d > 24 || (m > 3 && (m > 4 || d > 4))) {
    throw InstanceTooLarge("oracle limited to m*d <= 24 (and m <= 4, d <= 4 beyond three "
                           "flags); got m = " + std::to_string(m) + ", d = " +
                           std::to_string(d));
  }
}

CompatibleCatalog enumerate_compatible(const FlagTuple& t) {
  const std::size_t m = t.size();
  const std::size_t d = t.dim();
  check_oracle_size(m, d);
  const bool finite = !t.field().is_rational();

  CompatibleCatalog catalog;
  catalog.m = m;
  catalog.d = d;
  std::vector<LayerRef> chosen;

  // Depth-first over (skip | level) per flag. Subsets of a compatible set are
  // compatible, so an incompatible prefix prunes its extensions.
  std::function<void(std::size_t, const Subspace&)> walk = [&](std::size_t f,
                                                              const Subspace& meet) {
    if (f == m) return;
    walk(f + 1, meet);
    for (std::size_t level = 1; level <= d; ++level) {
      Subspace next = intersect(meet, t[f].layer(level));
      if (next.dim() == 0) continue;
      chosen.push_back({f, level});
      CompatibleCatalog::Entry entry;
      bool ok = true;
      if (finite) {
        auto witness = find_witness(t, chosen);
        ok = witness.has_value();
        if (ok) entry.witness = std::move(*witness);
      } else {
        ok = std::all_of(chosen.begin(), chosen.end(), [&](const LayerRef& layer) {
          return intersection_dim(next, t[layer.flag].layer(layer.level - 1)) < next.dim();
        });
      }
      if (ok) {
        entry.layers = chosen;
        for (const auto& layer : chosen) {
          entry.mask |= std::uint32_t{1} << (layer.flag * d + layer.level - 1);
        }
        catalog.entries.push_back(std::move(entry));
        walk(f + 1, next);
      }
      chosen.pop_back();
    }
  };
  walk(0, Subspace::whole(t.field(), d));
  std::sort(catalog.entries.begin(), catalog.entries.end(),
            [](const auto& a, const auto& b) { return a.layers < b.layers; });
  return catalog;
}

namespace {

class CoverSearch {
 public:
  CoverSearch(const CompatibleCatalog& catalog, std::size_t slots)
      : full_(slots == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << slots) - 1),
        by_slot_(slots) {
    // Only inclusion-maximal sets matter: any cover can trade a set for a
    // superset without growing.
    for (std::size_t i = 0; i < catalog.entries.size(); ++i) {
      const auto mask = catalog.entries[i].mask;
      const bool dominated = std::any_of(
          catalog.entries.begin(), catalog.entries.end(), [&](const auto& other) {
            return other.mask != mask && (other.mask & mask) == mask;
          });
      if (!dominated) candidates_.push_back(i);
      max_size_ = std::max<std::size_t>(max_size_, std::popcount(mask));
    }
    for (auto i : candidates_) {
      for (std::size_t s = 0; s < slots; ++s) {
        if (catalog.entries[i].mask >> s & 1U) by_slot_[s].push_back(i);
      }
    }
    for (auto& list : by_slot_) {
      std::stable_sort(list.begin(), list.end(), [&](std::size_t a, std::size_t b) {
        return std::popcount(catalog.entries[a].mask) > std::popcount(catalog.entries[b].mask);
      });
    }
    masks_.reserve(catalog.entries.size());
    for (const auto& e : catalog.entries) masks_.push_back(e.mask);
  }

  std::vector<std::size_t> run() {
    best_ = greedy();
    std::vector<std::size_t> chosen;
    dfs(0, chosen);
    return best_;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  std::vector<std::size_t> greedy() const {
    std::vector<std::size_t> out;
    std::uint32_t covered = 0;
    while (covered != full_) {
      std::size_t pick = candidates_.front();
      int gain = -1;
      for (auto i : candidates_) {
        const int g = std::popcount(masks_[i] & ~covered);
        if (g > gain) {
          gain = g;
          pick = i;
        }
      }
      out.push_back(pick);
      covered |= masks_[pick];
    }
    return out;
  }

  void dfs(std::uint32_t covered, std::vector<std::size_t>& chosen) {
    ++nodes_;
    if (covered == full_) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    const std::size_t remaining = std::popcount(full_ & ~covered);
    if (chosen.size() + (remaining + max_size_ - 1) / max_size_ >= best_.size()) return;
    auto [it, inserted] = seen_.try_emplace(covered, chosen.size());
    if (!inserted) {
      if (it->second <= chosen.size()) return;
      it->second = chosen.size();
    }
    // Most constrained uncovered slot.
    std::size_t slot = 0;
    std::size_t fewest = static_cast<std::size_t>(-1);
    for (std::size_t s = 0; s < by_slot_.size(); ++s) {
      if (covered >> s & 1U) continue;
      if (by_slot_[s].size() < fewest) {
        fewest = by_slot_[s].size();
        slot = s;
      }
    }
    for (auto i : by_slot_[slot]) {
      chosen.push_back(i);
      dfs(covered | masks_[i], chosen);
      chosen.pop_back();
    }
  }

  std::uint32_t full_;
  std::vector<std::vector<std::size_t>> by_slot_;
  std::vector<std::size_t> candidates_;
  std::vector<std::uint32_t> masks_;
  std::size_t max_size_ = 1;
  std::vector<std::size_t> best_;
  std::unordered_map<std::uint32_t, std::size_t> seen_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

OracleResult mu_exact(const FlagTuple& t) {
  OracleResult result;
  result.catalog = enumerate_compatible(t);
  CoverSearch search(result.catalog, t.size() * t.dim());
  result.cover = search.run();
  std::sort(result.cover.begin(), result.cover.end());
  result.nodes = search.nodes();
  result.mu = result.cover.size();
  for (auto i : result.cover) {
    auto& entry = result.catalog.entries[i];
    if (entry.witness.empty()) {
      auto witness = find_witness(t, entry.layers);
      if (!witness) throw InternalInconsistency("catalog entry without a witness");
      entry.witness = std::move(*witness);
    }
    result.generators.sets.push_back({entry.layers, entry.witness});
  }
  return result;
}

OracleResult mu_exact_over_field(const FlagTuple& t, const Field& field) {
  if (field.is_rational()) {
    if (!t.field().is_rational()) {
      throw ReductionFailure("cannot lift a prime-field tuple to the rationals");
    }
    return mu_exact(t);
  }
  return mu_exact(reduce_mod(t, field));
}

}  // namespace flagcover
