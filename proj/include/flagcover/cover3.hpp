#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "flagcover/flags.hpp"
#include "flagcover/generating_set.hpp"
#include "flagcover/prism.hpp"

namespace flagcover {

enum class UnitKind {
  EvenCycle,             // A
  CompatibleTriangle,    // A
  CrossingOddPair,       // A
  LongOddCycle,          // B
  IncompatibleTriangle,  // C
};

std::string to_string(UnitKind kind);

/// One or two cycles of G that are covered together.
struct CoverUnit {
  UnitKind kind = UnitKind::EvenCycle;
  std::vector<Cycle> cycles;

  std::size_t vertex_count() const;
};

/// Cycles of G grouped by how cheaply they can be covered: A (even cycles,
/// compatible triangles, crossing odd pairs), B (leftover odd cycles of
/// length >= 9) and C (leftover incompatible triangles, bottom to top).
struct CycleClassification {
  std::size_t d = 0;
  std::vector<CoverUnit> A;
  std::vector<CoverUnit> B;
  std::vector<CoverUnit> C;

  /// Vertex counts |A|, |B|, |C|.
  std::size_t a_size() const;
  std::size_t b_size() const;
  std::size_t c_size() const;
};

CycleClassification classify(const PrismGraph& g, const FlagTuple& t);

/// Compatible sets covering every vertex of the unit, with witnesses:
/// even cycle |S|/2 pairs, compatible triangle 1 triple, crossing odd pair
/// |S|/2 pairs, long odd cycle (|S|+1)/2 sets, incompatible triangle 2 pairs.
/// Throws InternalInconsistency if a set has no witness.
std::vector<CompatibleSet> cover_unit(const CoverUnit& unit, const PrismGraph& g,
                                      const FlagTuple& t);

struct Synth3Options {
  /// Also rebuild the lattice-path certificate and require it to pass.
  bool debug_asserts = false;
};

struct Synth3Result {
  PrismGraph graph;
  CycleClassification classification;
  GeneratingSet generators;
};

/// Generating set of size at most floor(5d/3) for a triple of flags. Throws
/// InternalInconsistency if any proven bound fails (a bug, never bad input).
Synth3Result synth3_detailed(const FlagTuple& t, const Synth3Options& options = {});
GeneratingSet synth3(const FlagTuple& t, const Synth3Options& options = {});

struct EqualityVerdict {
  bool candidate = false;
  std::vector<std::string> diagnostics;
};

/// The necessary combinatorial conditions on G for mu = 5d/3: d divisible by
/// 3, exactly d/3 triangles, all incompatible and pairwise non-crossing,
/// every other cycle even, and every two consecutive edges of an even cycle
/// both cross a common triangle.
EqualityVerdict is_equality_candidate(const PrismGraph& g, const FlagTuple& t);

}  // namespace flagcover
