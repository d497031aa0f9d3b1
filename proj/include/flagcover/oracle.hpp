#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "flagcover/flags.hpp"
#include "flagcover/generating_set.hpp"

namespace flagcover {

/// Every compatible set of layers (at most one layer per flag) of a tuple,
/// with the layer slots encoded as a bitmask: bit flag * d + level - 1.
struct CompatibleCatalog {
  struct Entry {
    std::vector<LayerRef> layers;
    std::uint32_t mask = 0;
    /// Filled during enumeration over finite fields; empty over the rationals
    /// until a cover is instantiated.
    Vector witness;
  };

  std::size_t m = 0;
  std::size_t d = 0;
  std::vector<Entry> entries;

  /// Number of entries with exactly k layers.
  std::size_t count(std::size_t k) const;
};

/// Limits: m * d <= 24, and m <= 4 with d <= 4 once m > 3.
void check_oracle_size(std::size_t m, std::size_t d);

/// Enumerates the catalog. Over a finite field every entry is decided by an
/// explicit witness search; over the rationals by intersection dimensions.
/// Throws InstanceTooLarge past the oracle limits.
CompatibleCatalog enumerate_compatible(const FlagTuple& t);

struct OracleResult {
  std::size_t mu = 0;
  /// Indices into `catalog.entries` of one optimal cover.
  std::vector<std::size_t> cover;
  GeneratingSet generators;
  CompatibleCatalog catalog;
  std::uint64_t nodes = 0;
};

/// Exact minimum generating-set size as a minimum cover of the layer slots by
/// compatible sets (branch and bound on the most constrained slot).
OracleResult mu_exact(const FlagTuple& t);

/// mu_exact after reducing a rational tuple entrywise into `field` (or of a
/// tuple already over it). Throws ReductionFailure.
OracleResult mu_exact_over_field(const FlagTuple& t, const Field& field);

}  // namespace flagcover
