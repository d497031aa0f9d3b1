#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "flagcover/bruhat.hpp"
#include "flagcover/flags.hpp"
#include "flagcover/generating_set.hpp"

namespace flagcover {

/// An edge on one rectangular face of the prism, oriented so that
/// b.flag == (a.flag + 1) % 3. The face is identified by a.flag:
/// 0 = UV, 1 = VW, 2 = WU.
struct Edge {
  LayerRef a;
  LayerRef b;

  std::size_t face() const noexcept { return a.flag; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Orients {x, y} onto its face; throws InvalidArgument for a same-column pair.
Edge make_edge(const LayerRef& x, const LayerRef& y);

/// A cycle of G, listed U, V, W, U, V, W, ... starting at its lowest U vertex.
struct Cycle {
  std::vector<LayerRef> vertices;

  std::size_t length() const noexcept { return vertices.size(); }
  bool is_even() const noexcept { return vertices.size() % 2 == 0; }
  bool is_triangle() const noexcept { return vertices.size() == 3; }
  /// Consecutive edges, closing edge last.
  std::vector<Edge> edges() const;
  /// Levels of the cycle's vertices in one column, ascending.
  std::vector<std::size_t> levels(std::size_t flag) const;
  /// Vertex count per flag.
  std::array<std::size_t, 3> counts() const;
  bool contains(const LayerRef& v) const;

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// The graph G on the 3d layers of a triple (edges from the three relative
/// positions), its cycle decomposition, and the derived compatibility graph
/// G~ (queried through gtilde_edge).
class PrismGraph {
 public:
  PrismGraph() = default;

  std::size_t dim() const noexcept { return d_; }
  const BruhatPerm& sigma_uv() const noexcept { return sigma_[0]; }
  const BruhatPerm& sigma_vw() const noexcept { return sigma_[1]; }
  const BruhatPerm& sigma_wu() const noexcept { return sigma_[2]; }

  /// The G-neighbour of v in the adjacent column `flag`.
  LayerRef partner(const LayerRef& v, std::size_t flag) const;
  bool has_g_edge(const LayerRef& x, const LayerRef& y) const;
  /// All 3d edges of G, face by face, ascending.
  std::vector<Edge> g_edges() const;
  /// Every G~ edge, face by face, lexicographic within a face.
  std::vector<Edge> gtilde_edges() const;

  const std::vector<Cycle>& cycles() const noexcept { return cycles_; }
  std::size_t cycle_index(const LayerRef& v) const;

  friend PrismGraph build_G(const FlagTuple& t);

 private:
  std::size_t d_ = 0;
  std::array<BruhatPerm, 3> sigma_;
  std::array<BruhatPerm, 3> sigma_inv_;
  std::vector<Cycle> cycles_;
  std::vector<std::size_t> cycle_of_;  // indexed by flag * d + level - 1
};

/// Throws InvalidArgument unless t has exactly three flags.
PrismGraph build_G(const FlagTuple& t);

/// G~ adjacency by the crossing rule: with i', j' the G-partners of the two
/// endpoints, (U_i, V_j) is an edge iff i >= i' and j >= j'.
bool gtilde_edge(const PrismGraph& g, const LayerRef& a, const LayerRef& b);

/// Decided from intersection dimensions. Throws InvalidArgument if same flag.
bool compatible_pair(const FlagTuple& t, const LayerRef& a, const LayerRef& b);
/// Throws InvalidArgument unless the refs name three distinct flags.
bool compatible_triple(const FlagTuple& t, const LayerRef& a, const LayerRef& b,
                       const LayerRef& c);

/// Edges on the same face whose endpoints interleave; false across faces.
bool edges_cross(const Edge& e1, const Edge& e2);
/// Some edge of one crosses some edge of the other.
bool cycles_cross(const Cycle& c1, const Cycle& c2);
/// Sorts pairwise non-crossing cycles bottom to top; throws NotComparable if
/// two cycles are not separated in every column.
std::vector<Cycle> height_order(std::vector<Cycle> cycles);

}  // namespace flagcover
