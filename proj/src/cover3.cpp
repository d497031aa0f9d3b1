#include "flagcover/cover3.hpp"

#include <algorithm>

#include "flagcover/certify.hpp"
#include "flagcover/errors.hpp"

namespace flagcover {

std::string to_string(UnitKind kind) {
  switch (kind) {
    case UnitKind::EvenCycle: return "even_cycle";
    case UnitKind::CompatibleTriangle: return "compatible_triangle";
    case UnitKind::CrossingOddPair: return "crossing_odd_pair";
    case UnitKind::LongOddCycle: return "long_odd_cycle";
    case UnitKind::IncompatibleTriangle: return "incompatible_triangle";
  }
  return "unknown";
}

std::size_t CoverUnit::vertex_count() const {
  std::size_t n = 0;
  for (const auto& c : cycles) n += c.length();
  return n;
}

namespace {

std::size_t total_vertices(const std::vector<CoverUnit>& units) {
  std::size_t n = 0;
  for (const auto& u : units) n += u.vertex_count();
  return n;
}

CompatibleSet make_set(const FlagTuple& t, std::vector<LayerRef> layers) {
  auto witness = find_witness(t, layers);
  if (!witness) {
    std::string names;
    for (const auto& l : layers) names += " " + to_string(l);
    throw InternalInconsistency("claimed compatible set has no witness:" + names);
  }
  return {std::move(layers), std::move(*witness)};
}

// Pairs up consecutive vertices of the path vertices[first], ..., in cyclic
// order, skipping `skip` (the one vertex handled elsewhere).
void match_path(const FlagTuple& t, const Cycle& cycle, std::size_t skip,
                std::vector<CompatibleSet>& out) {
  const std::size_t n = cycle.length();
  for (std::size_t step = 1; step + 1 < n; step += 2) {
    out.push_back(make_set(t, {cycle.vertices[(skip + step) % n],
                               cycle.vertices[(skip + step + 1) % n]}));
  }
}

std::size_t position(const Cycle& cycle, const LayerRef& v) {
  return static_cast<std::size_t>(
      std::find(cycle.vertices.begin(), cycle.vertices.end(), v) - cycle.vertices.begin());
}

// First G~ edge joining the two cycles: faces UV, VW, WU in turn,
// lexicographic by (lower-column level, upper-column level) within a face.
Edge connector(const PrismGraph& g, const Cycle& c1, const Cycle& c2) {
  const std::size_t d = g.dim();
  for (std::size_t face = 0; face < 3; ++face) {
    for (std::size_t i = 1; i <= d; ++i) {
      const LayerRef x{face, i};
      const bool x_in_1 = c1.contains(x);
      if (!x_in_1 && !c2.contains(x)) continue;
      const Cycle& other = x_in_1 ? c2 : c1;
      for (std::size_t j = 1; j <= d; ++j) {
        const LayerRef y{(face + 1) % 3, j};
        if (other.contains(y) && gtilde_edge(g, x, y)) return {x, y};
      }
    }
  }
  throw InternalInconsistency("crossing odd cycles without a connecting G~ edge");
}

}  // namespace

std::size_t CycleClassification::a_size() const { return total_vertices(A); }
std::size_t CycleClassification::b_size() const { return total_vertices(B); }
std::size_t CycleClassification::c_size() const { return total_vertices(C); }

CycleClassification classify(const PrismGraph& g, const FlagTuple& t) {
  CycleClassification out;
  out.d = g.dim();
  std::vector<Cycle> odd;
  for (const auto& cycle : g.cycles()) {
    if (cycle.is_even()) {
      out.A.push_back({UnitKind::EvenCycle, {cycle}});
    } else if (cycle.is_triangle() &&
               compatible_triple(t, cycle.vertices[0], cycle.vertices[1], cycle.vertices[2])) {
      out.A.push_back({UnitKind::CompatibleTriangle, {cycle}});
    } else {
      odd.push_back(cycle);
    }
  }
  // Greedy: take the first crossing pair in canonical order, then rescan.
  bool paired = true;
  while (paired) {
    paired = false;
    for (std::size_t a = 0; a < odd.size() && !paired; ++a) {
      for (std::size_t b = a + 1; b < odd.size() && !paired; ++b) {
        if (!cycles_cross(odd[a], odd[b])) continue;
        out.A.push_back({UnitKind::CrossingOddPair, {odd[a], odd[b]}});
        odd.erase(odd.begin() + static_cast<std::ptrdiff_t>(b));
        odd.erase(odd.begin() + static_cast<std::ptrdiff_t>(a));
        paired = true;
      }
    }
  }
  std::vector<Cycle> triangles;
  for (auto& cycle : odd) {
    if (cycle.is_triangle()) {
      triangles.push_back(std::move(cycle));
    } else {
      out.B.push_back({UnitKind::LongOddCycle, {std::move(cycle)}});
    }
  }
  try {
    for (auto& tri : height_order(std::move(triangles))) {
      out.C.push_back({UnitKind::IncompatibleTriangle, {std::move(tri)}});
    }
  } catch (const NotComparable& e) {
    throw InternalInconsistency(std::string("leftover triangles not ordered by height: ") +
                                e.what());
  }
  return out;
}

std::vector<CompatibleSet> cover_unit(const CoverUnit& unit, const PrismGraph& g,
                                      const FlagTuple& t) {
  std::vector<CompatibleSet> out;
  const Cycle& first = unit.cycles.at(0);
  switch (unit.kind) {
    case UnitKind::EvenCycle:
      for (std::size_t i = 0; i < first.length(); i += 2) {
        out.push_back(make_set(t, {first.vertices[i], first.vertices[i + 1]}));
      }
      break;
    case UnitKind::CompatibleTriangle:
      out.push_back(make_set(t, first.vertices));
      break;
    case UnitKind::CrossingOddPair: {
      const Cycle& second = unit.cycles.at(1);
      const Edge link = connector(g, first, second);
      out.push_back(make_set(t, {link.a, link.b}));
      for (const Cycle* c : {&first, &second}) {
        const LayerRef& mine = c->contains(link.a) ? link.a : link.b;
        match_path(t, *c, position(*c, mine), out);
      }
      break;
    }
    case UnitKind::LongOddCycle:
      out.push_back(make_set(t, {first.vertices[0]}));
      match_path(t, first, 0, out);
      break;
    case UnitKind::IncompatibleTriangle:
      // The two G-edges at the U vertex.
      out.push_back(make_set(t, {first.vertices[0], first.vertices[1]}));
      out.push_back(make_set(t, {first.vertices[2], first.vertices[0]}));
      break;
  }
  return out;
}

Synth3Result synth3_detailed(const FlagTuple& t, const Synth3Options& options) {
  if (t.size() != 3) throw InvalidArgument("synth3 needs exactly three flags");
  Synth3Result result;
  result.graph = build_G(t);
  result.classification = classify(result.graph, t);
  const auto& cls = result.classification;
  for (const auto* group : {&cls.A, &cls.B, &cls.C}) {
    for (const auto& unit : *group) {
      auto sets = cover_unit(unit, result.graph, t);
      for (auto& s : sets) result.generators.sets.push_back(std::move(s));
    }
  }

  const std::size_t d = t.dim();
  const std::size_t a = cls.a_size();
  const std::size_t b = cls.b_size();
  const std::size_t c = cls.c_size();
  const std::size_t n = result.generators.size();
  if (a + b + c != 3 * d) throw InternalInconsistency("|A| + |B| + |C| != 3d");
  // 18 * (|A|/2 + 5|B|/9 + 2|C|/3) in integers.
  const std::size_t weighted = 9 * a + 10 * b + 12 * c;
  if (18 * n > weighted) {
    throw InternalInconsistency("cover uses more sets than the per-class accounting allows");
  }
  if (weighted > 30 * d || n > 5 * d / 3) {
    throw InternalInconsistency("generating set of size " + std::to_string(n) +
                                " exceeds floor(5d/3) for d = " + std::to_string(d));
  }
  const VerifyReport report = verify_generating_set(t, result.generators);
  if (!report.pass) throw InternalInconsistency("synth3 output does not generate the triple");
  if (options.debug_asserts) {
    const DimGrid grid(t);
    const LatticePath path = build_lattice_path(cls, d);
    (void)cost_report(path, grid, cls);
  }
  return result;
}

GeneratingSet synth3(const FlagTuple& t, const Synth3Options& options) {
  return synth3_detailed(t, options).generators;
}

EqualityVerdict is_equality_candidate(const PrismGraph& g, const FlagTuple& t) {
  EqualityVerdict verdict;
  auto& why = verdict.diagnostics;
  const std::size_t d = g.dim();
  if (d % 3 != 0) why.push_back("d = " + std::to_string(d) + " is not a multiple of 3");

  std::vector<const Cycle*> triangles;
  std::vector<const Cycle*> even;
  for (const auto& cycle : g.cycles()) {
    if (cycle.is_triangle()) {
      triangles.push_back(&cycle);
      const auto& v = cycle.vertices;
      if (compatible_triple(t, v[0], v[1], v[2])) {
        why.push_back("triangle at " + to_string(v[0]) + " is a compatible triple");
      }
    } else if (cycle.is_even()) {
      even.push_back(&cycle);
    } else {
      why.push_back("odd cycle of length " + std::to_string(cycle.length()) + " at " +
                    to_string(cycle.vertices[0]));
    }
  }
  if (3 * triangles.size() != d) {
    why.push_back(std::to_string(triangles.size()) + " triangles, need d/3");
  }
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    for (std::size_t j = i + 1; j < triangles.size(); ++j) {
      if (cycles_cross(*triangles[i], *triangles[j])) {
        why.push_back("triangles at " + to_string(triangles[i]->vertices[0]) + " and " +
                      to_string(triangles[j]->vertices[0]) + " cross");
      }
    }
  }
  for (const Cycle* cycle : even) {
    const auto edges = cycle->edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const Edge& e1 = edges[e];
      const Edge& e2 = edges[(e + 1) % edges.size()];
      const bool shared = std::any_of(triangles.begin(), triangles.end(), [&](const Cycle* tri) {
        const auto tri_edges = tri->edges();
        return edges_cross(e1, tri_edges[e1.face()]) && edges_cross(e2, tri_edges[e2.face()]);
      });
      if (!shared) {
        why.push_back("consecutive edges " + to_string(e1.a) + "-" + to_string(e1.b) + ", " +
                      to_string(e2.a) + "-" + to_string(e2.b) + " cross no common triangle");
      }
    }
  }
  verdict.candidate = why.empty();
  return verdict;
}

}  // namespace flagcover
