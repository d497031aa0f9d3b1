#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flagcover/cover3.hpp"
#include "flagcover/flags.hpp"
#include "flagcover/prism.hpp"

namespace flagcover {

/// A unit step of the walk from (0,0,0) to (d,d,d): the vertex hopped on and
/// the position reached.
struct Hop {
  LayerRef vertex;
  std::array<std::size_t, 3> position{0, 0, 0};
};

struct LatticePath {
  std::size_t d = 0;
  std::vector<Hop> hops;
};

/// Builds a path from a per-step flag sequence (each flag exactly d times).
LatticePath path_from_steps(std::size_t d, const std::vector<std::size_t>& steps);
/// Uniformly shuffled step sequence.
LatticePath random_lattice_path(std::size_t d, Rng& rng);
/// Throws InvalidArgument unless the path has 3d unit steps ending at (d,d,d).
void validate_path(const LatticePath& path);

/// The schedule that makes every C-triangle cost 0: for each C-triangle
/// (bottom to top) hop U, then V, then W up to just below it, then hop the
/// triangle itself; finish with the remaining U, V, W levels.
/// Throws InvalidArgument if the C-triangles are not strictly increasing.
LatticePath build_lattice_path(const CycleClassification& c, std::size_t d);

/// Cost of every hop: the increase of dim(i,j,k) it causes (0 or 1).
std::map<LayerRef, int> hop_costs(const LatticePath& path, const DimGrid& grid);

struct UnitCost {
  UnitKind kind = UnitKind::EvenCycle;
  std::size_t length = 0;  // vertices in this cycle
  int cost = 0;
  std::string bound;  // "<= |S|/2", "<= |S|/3", "= 0"
  bool ok = true;
};

struct CostReport {
  std::size_t d = 0;
  std::map<LayerRef, int> vertex_cost;
  std::vector<UnitCost> cycles;  // A cycles, then B, then C
  int cost_a = 0;
  int cost_b = 0;
  int cost_c = 0;
  std::size_t a_size = 0;
  std::size_t b_size = 0;
  std::size_t c_size = 0;
  /// 6 * (|A|/2 + |B|/3) versus 6 * d.
  std::size_t lhs_times_6 = 0;
  std::size_t rhs_times_6 = 0;
  bool pass = false;
  std::vector<std::string> violations;

  double lhs() const { return static_cast<double>(lhs_times_6) / 6.0; }
};

/// Evaluates every bound without throwing.
CostReport evaluate_costs(const LatticePath& path, const DimGrid& grid,
                          const CycleClassification& c);
/// As evaluate_costs, but throws InternalInconsistency on any violated bound.
CostReport cost_report(const LatticePath& path, const DimGrid& grid,
                       const CycleClassification& c);

/// Vertices of cost 1 along `path` form an independent set of G.
bool cost_one_is_independent(const LatticePath& path, const DimGrid& grid,
                             const PrismGraph& g);

/// For a G-edge (X_a, Y_b') and a position with X at level a and Y at level
/// b < b': dim at the position equals dim with X lowered to a - 1.
/// nullopt when the configuration does not meet those preconditions.
std::optional<bool> check_lemma_sleight(const DimGrid& grid, const PrismGraph& g,
                                        const std::array<std::size_t, 3>& position,
                                        const Edge& edge);

/// For a G-triangle (U_i, V_j, W_k): lowering any one coordinate gives the
/// fully lowered dimension dim(i-1,j-1,k-1); if the triangle is incompatible
/// also dim(i,j,k) = dim(i-1,j-1,k-1), and if it is compatible a witness lies
/// in the triple intersection outside the lowered one.
bool check_lemma_magic(const FlagTuple& t, const DimGrid& grid, const Cycle& triangle);

}  // namespace flagcover
