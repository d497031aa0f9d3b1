#include "flagcover/certify.hpp"

#include <algorithm>

#include "flagcover/errors.hpp"

namespace flagcover {

LatticePath path_from_steps(std::size_t d, const std::vector<std::size_t>& steps) {
  LatticePath path;
  path.d = d;
  std::array<std::size_t, 3> pos{0, 0, 0};
  for (auto f : steps) {
    if (f > kW) throw InvalidArgument("lattice step along a non-existent axis");
    ++pos[f];
    if (pos[f] > d) throw InvalidArgument("lattice path leaves the box");
    path.hops.push_back({{f, pos[f]}, pos});
  }
  validate_path(path);
  return path;
}

LatticePath random_lattice_path(std::size_t d, Rng& rng) {
  std::vector<std::size_t> steps;
  for (std::size_t f = 0; f < 3; ++f) steps.insert(steps.end(), d, f);
  std::shuffle(steps.begin(), steps.end(), rng);
  return path_from_steps(d, steps);
}

void validate_path(const LatticePath& path) {
  if (path.hops.size() != 3 * path.d) {
    throw InvalidArgument("lattice path must have 3d hops");
  }
  std::array<std::size_t, 3> pos{0, 0, 0};
  for (const auto& hop : path.hops) {
    const std::size_t f = hop.vertex.flag;
    if (f > kW) throw InvalidArgument("hop on a non-prism vertex");
    ++pos[f];
    if (hop.position != pos || hop.vertex.level != pos[f]) {
      throw InvalidArgument("hop on " + to_string(hop.vertex) + " is not a unit step");
    }
  }
  if (pos != std::array<std::size_t, 3>{path.d, path.d, path.d}) {
    throw InvalidArgument("lattice path does not end at (d,d,d)");
  }
}

LatticePath build_lattice_path(const CycleClassification& c, std::size_t d) {
  std::vector<std::size_t> steps;
  std::array<std::size_t, 3> pos{0, 0, 0};
  auto climb_to = [&](std::size_t f, std::size_t level) {
    while (pos[f] < level) {
      steps.push_back(f);
      ++pos[f];
    }
  };
  for (const auto& unit : c.C) {
    const Cycle& tri = unit.cycles.at(0);
    std::array<std::size_t, 3> target{0, 0, 0};
    for (const auto& v : tri.vertices) target.at(v.flag) = v.level;
    for (std::size_t f = 0; f < 3; ++f) {
      if (target[f] <= pos[f]) {
        throw InvalidArgument("C-triangles are not ordered by height");
      }
    }
    for (std::size_t f = 0; f < 3; ++f) climb_to(f, target[f] - 1);
    for (std::size_t f = 0; f < 3; ++f) climb_to(f, target[f]);
  }
  for (std::size_t f = 0; f < 3; ++f) climb_to(f, d);
  return path_from_steps(d, steps);
}

std::map<LayerRef, int> hop_costs(const LatticePath& path, const DimGrid& grid) {
  if (grid.dim() != path.d) throw DimensionMismatch("lattice path and grid disagree on d");
  std::map<LayerRef, int> out;
  for (const auto& hop : path.hops) {
    auto before = hop.position;
    --before[hop.vertex.flag];
    out[hop.vertex] = static_cast<int>(grid.at(hop.position)) - static_cast<int>(grid.at(before));
  }
  return out;
}

namespace {

int cycle_cost(const Cycle& cycle, const std::map<LayerRef, int>& costs) {
  int total = 0;
  for (const auto& v : cycle.vertices) total += costs.at(v);
  return total;
}

}  // namespace

CostReport evaluate_costs(const LatticePath& path, const DimGrid& grid,
                          const CycleClassification& c) {
  CostReport report;
  report.d = path.d;
  report.vertex_cost = hop_costs(path, grid);
  for (const auto& [v, cost] : report.vertex_cost) {
    if (cost != 0 && cost != 1) {
      report.violations.push_back("cost of " + to_string(v) + " is " + std::to_string(cost));
    }
  }
  auto record = [&](const CoverUnit& unit, const Cycle& cycle, int& class_total) {
    UnitCost uc;
    uc.kind = unit.kind;
    uc.length = cycle.length();
    uc.cost = cycle_cost(cycle, report.vertex_cost);
    class_total += uc.cost;
    const auto cost = static_cast<std::size_t>(uc.cost);
    switch (unit.kind) {
      case UnitKind::LongOddCycle:
        uc.bound = "<= |S|/3";
        uc.ok = 3 * cost <= uc.length;
        break;
      case UnitKind::IncompatibleTriangle:
        uc.bound = "= 0";
        uc.ok = cost == 0;
        break;
      default:
        uc.bound = "<= |S|/2";
        uc.ok = 2 * cost <= uc.length;
        break;
    }
    if (!uc.ok) {
      report.violations.push_back(to_string(unit.kind) + " at " + to_string(cycle.vertices[0]) +
                                  " costs " + std::to_string(uc.cost) + ", bound " + uc.bound);
    }
    report.cycles.push_back(uc);
  };
  for (const auto& unit : c.A) {
    for (const auto& cycle : unit.cycles) record(unit, cycle, report.cost_a);
  }
  for (const auto& unit : c.B) record(unit, unit.cycles.at(0), report.cost_b);
  for (const auto& unit : c.C) record(unit, unit.cycles.at(0), report.cost_c);

  report.a_size = c.a_size();
  report.b_size = c.b_size();
  report.c_size = c.c_size();
  const int total = report.cost_a + report.cost_b + report.cost_c;
  if (total != static_cast<int>(report.d)) {
    report.violations.push_back("total cost " + std::to_string(total) + " != d = " +
                                std::to_string(report.d));
  }
  report.lhs_times_6 = 3 * report.a_size + 2 * report.b_size;
  report.rhs_times_6 = 6 * report.d;
  if (report.lhs_times_6 < report.rhs_times_6) {
    report.violations.push_back("|A|/2 + |B|/3 < d");
  }
  report.pass = report.violations.empty();
  return report;
}

CostReport cost_report(const LatticePath& path, const DimGrid& grid,
                       const CycleClassification& c) {
  CostReport report = evaluate_costs(path, grid, c);
  if (!report.pass) {
    std::string all;
    for (const auto& v : report.violations) all += "; " + v;
    throw InternalInconsistency("cost certificate failed" + all);
  }
  return report;
}

bool cost_one_is_independent(const LatticePath& path, const DimGrid& grid,
                             const PrismGraph& g) {
  const auto costs = hop_costs(path, grid);
  const auto edges = g.g_edges();
  return std::none_of(edges.begin(), edges.end(), [&](const Edge& e) {
    return costs.at(e.a) == 1 && costs.at(e.b) == 1;
  });
}

std::optional<bool> check_lemma_sleight(const DimGrid& grid, const PrismGraph& g,
                                        const std::array<std::size_t, 3>& position,
                                        const Edge& edge) {
  const LayerRef& x = edge.a;
  const LayerRef& y_partner = edge.b;
  if (x.flag > kW || y_partner.flag > kW || x.flag == y_partner.flag) return std::nullopt;
  if (!g.has_g_edge(x, y_partner)) return std::nullopt;
  if (position[x.flag] != x.level || x.level < 1) return std::nullopt;
  if (position[y_partner.flag] >= y_partner.level) return std::nullopt;
  auto lowered = position;
  --lowered[x.flag];
  return grid.at(position) == grid.at(lowered);
}

bool check_lemma_magic(const FlagTuple& t, const DimGrid& grid, const Cycle& triangle) {
  if (!triangle.is_triangle()) throw InvalidArgument("check_lemma_magic needs a triangle");
  std::array<std::size_t, 3> top{0, 0, 0};
  for (const auto& v : triangle.vertices) top.at(v.flag) = v.level;
  const std::array<std::size_t, 3> bottom{top[0] - 1, top[1] - 1, top[2] - 1};
  const std::size_t low = grid.at(bottom);
  for (std::size_t f = 0; f < 3; ++f) {
    auto one_lowered = top;
    --one_lowered[f];
    if (grid.at(one_lowered) != low) return false;
  }
  const auto& v = triangle.vertices;
  if (!compatible_triple(t, v[0], v[1], v[2])) return grid.at(top) == low;
  if (grid.at(top) != low + 1) return false;
  const auto witness = find_witness(t, v);
  if (!witness) return false;
  const Subspace meet = layer_intersection(t, v);
  std::vector<LayerRef> lowered_refs;
  for (const auto& layer : v) lowered_refs.push_back({layer.flag, layer.level - 1});
  Subspace lowered = Subspace::whole(t.field(), t.dim());
  for (const auto& layer : lowered_refs) {
    lowered = intersect(lowered, t[layer.flag].layer(layer.level));
  }
  return meet.contains(*witness) && !lowered.contains(*witness);
}

}  // namespace flagcover
