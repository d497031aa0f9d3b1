#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "flagcover/flags.hpp"
#include "flagcover/matrix.hpp"

namespace flagcover {

inline constexpr std::size_t kU = 0;
inline constexpr std::size_t kV = 1;
inline constexpr std::size_t kW = 2;

/// One layer of one flag in a tuple: flag index (0 = U, 1 = V, 2 = W, ...)
/// and level in [1, d].
struct LayerRef {
  std::size_t flag = 0;
  std::size_t level = 1;

  friend auto operator<=>(const LayerRef&, const LayerRef&) = default;
};

/// "U3", "V1", "W2"; flags past the third are "F4", "F5", ...
std::string to_string(const LayerRef& layer);
/// "U", "V", "W", "F4", ...
std::string flag_name(std::size_t flag);
/// Inverse of flag_name; throws InvalidArgument.
std::size_t parse_flag_name(const std::string& name);

/// Layers (at most one per flag) with a vector new for every one of them.
struct CompatibleSet {
  std::vector<LayerRef> layers;
  Vector witness;
};

/// A cover of every layer slot by compatible sets; the witnesses form the
/// generating vectors.
struct GeneratingSet {
  std::vector<CompatibleSet> sets;

  std::size_t size() const noexcept { return sets.size(); }
  std::vector<Vector> vectors() const;
  /// Each declared layer mapped to the index of the first set listing it.
  std::map<LayerRef, std::size_t> coverage() const;
};

struct VerifyReport {
  bool pass = false;
  /// Layer slots with no new vector among the inputs.
  std::vector<LayerRef> missing;
  /// Declared layers whose set's witness is not new there.
  std::vector<std::string> witness_errors;
  std::size_t slots = 0;
};

/// Checks that every layer of every flag receives a new vector.
VerifyReport verify_generating_set(const FlagTuple& t, std::span<const Vector> vectors);
/// As above, and re-checks each set's witness against its declared layers.
VerifyReport verify_generating_set(const FlagTuple& t, const GeneratingSet& s);

/// Intersection of the listed layers.
Subspace layer_intersection(const FlagTuple& t, std::span<const LayerRef> layers);

/// A vector new for every listed layer, or nullopt when none exists. Over a
/// finite field the answer is exact (falls back to enumeration).
std::optional<Vector> find_witness(const FlagTuple& t, std::span<const LayerRef> layers);

/// Whether some vector is new for all listed layers (at most one per flag).
///
/// With X the intersection, each lowered layer must meet X in a proper
/// subspace. Over F_q a space is a union of n proper subspaces only when
/// n >= q + 1, so the dimension test decides whenever n <= |K|; below that
/// the decision is made by witness enumeration.
bool is_compatible(const FlagTuple& t, std::span<const LayerRef> layers);

/// Throws InvalidArgument when two layers share a flag or a ref is out of range.
void check_layer_refs(const FlagTuple& t, std::span<const LayerRef> layers);

}  // namespace flagcover
