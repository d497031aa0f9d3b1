#include <doctest.h>

#include <set>

#include "flagcover/certify.hpp"
#include "flagcover/errors.hpp"
#include "support.hpp"

using namespace testing;

namespace {

std::vector<std::string> hop_names(const LatticePath& p) {
  std::vector<std::string> out;
  for (const auto& h : p.hops) out.push_back(to_string(h.vertex));
  return out;
}

CostReport canonical_report(const FlagTuple& t) {
  const auto g = build_G(t);
  const auto c = classify(g, t);
  return evaluate_costs(build_lattice_path(c, t.dim()), DimGrid(t), c);
}

}  // namespace

TEST_CASE("path without C-triangles hops U, then V, then W") {
  const auto t = identical_triple(3);
  const auto c = classify(build_G(t), t);
  REQUIRE(c.C.empty());
  const auto p = build_lattice_path(c, 3);
  CHECK(hop_names(p) ==
        std::vector<std::string>{"U1", "U2", "U3", "V1", "V2", "V3", "W1", "W2", "W3"});
}

TEST_CASE("generic K^3 path visits the C-triangle together") {
  const auto t = generic_triple(1);
  const auto c = classify(build_G(t), t);
  const auto p = build_lattice_path(c, 3);
  CHECK(hop_names(p) ==
        std::vector<std::string>{"U1", "V1", "W1", "U2", "V2", "W2", "U3", "V3", "W3"});
  const auto costs = hop_costs(p, DimGrid(t));
  CHECK(costs.at({kU, 3}) == 1);
  CHECK(costs.at({kV, 3}) == 1);
  CHECK(costs.at({kW, 3}) == 1);
  CHECK(costs.at({kU, 2}) + costs.at({kV, 2}) + costs.at({kW, 2}) == 0);
}

TEST_CASE("paths are monotone walks of length 3d") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t d = 1 + seed % 8;
    const auto t = mixed_triple(seed, d);
    const auto p = build_lattice_path(classify(build_G(t), t), d);
    CHECK(p.hops.size() == 3 * d);
    CHECK_NOTHROW(validate_path(p));
    std::set<LayerRef> hopped;
    for (const auto& h : p.hops) hopped.insert(h.vertex);
    CHECK(hopped.size() == 3 * d);
    CHECK(p.hops.back().position == std::array<std::size_t, 3>{d, d, d});
  }
  CHECK_THROWS_AS(path_from_steps(2, {0, 0, 1, 1, 2}), InvalidArgument);
  CHECK_THROWS_AS(path_from_steps(1, {0, 0, 2}), InvalidArgument);
}

TEST_CASE("cost report on the generic K^3 triple") {
  const auto r = canonical_report(generic_triple(1));
  CHECK(r.pass);
  CHECK(r.cost_a + r.cost_b + r.cost_c == 3);
  CHECK(r.cost_c == 0);
  CHECK(r.cost_a == 3);
  CHECK(r.lhs_times_6 == 18);
  CHECK(r.rhs_times_6 == 18);
}

TEST_CASE("identical flags: each compatible triangle costs 1") {
  const auto t = identical_triple(4);
  const auto g = build_G(t);
  const auto c = classify(g, t);
  const auto r = evaluate_costs(build_lattice_path(c, 4), DimGrid(t), c);
  CHECK(r.pass);
  for (const auto& uc : r.cycles) CHECK(uc.cost == 1);
  for (std::size_t i = 1; i <= 4; ++i) {
    // dim(i, j, 0) = 0, so only the final W hops raise the dimension.
    CHECK(r.vertex_cost.at({kU, i}) == 0);
    CHECK(r.vertex_cost.at({kV, i}) == 0);
    CHECK(r.vertex_cost.at({kW, i}) == 1);
  }
}

TEST_CASE("every canonical certificate passes and every bound holds") {
  for (std::uint64_t seed = 0; seed < 160; ++seed) {
    const std::size_t d = 1 + seed % 9;
    const auto t = mixed_triple(seed, d);
    const auto g = build_G(t);
    const auto c = classify(g, t);
    const auto p = build_lattice_path(c, d);
    const auto r = cost_report(p, DimGrid(t), c);
    CHECK(r.pass);
    CHECK(r.violations.empty());
    CHECK(r.cost_a + r.cost_b + r.cost_c == static_cast<int>(d));
    CHECK(r.cost_c == 0);
    for (const auto& [v, cost] : r.vertex_cost) CHECK((cost == 0 || cost == 1));
    for (const auto& uc : r.cycles) {
      switch (uc.kind) {
        case UnitKind::LongOddCycle: CHECK(3 * uc.cost <= static_cast<int>(uc.length)); break;
        case UnitKind::IncompatibleTriangle: CHECK(uc.cost == 0); break;
        default: CHECK(2 * uc.cost <= static_cast<int>(uc.length));
      }
    }
    // U and V vertices of B-cycles cost nothing on the canonical path.
    for (const auto& u : c.B) {
      for (const auto& v : u.cycles[0].vertices) {
        if (v.flag != kW) CHECK(r.vertex_cost.at(v) == 0);
      }
    }
    CHECK(r.lhs_times_6 >= r.rhs_times_6);
  }
}

TEST_CASE("cost_report throws when a bound fails") {
  const auto t = generic_triple(1);
  const auto c = classify(build_G(t), t);
  // All U hops, then V, then W: the C-triangle's W vertex pays.
  const auto p = path_from_steps(3, {0, 0, 0, 1, 1, 1, 2, 2, 2});
  const auto r = evaluate_costs(p, DimGrid(t), c);
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.violations.empty());
  CHECK_THROWS_AS(cost_report(p, DimGrid(t), c), InternalInconsistency);
}

TEST_CASE("cost-1 vertices are independent in G along random paths") {
  Rng rng(77);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t d = 1 + seed % 7;
    const auto t = mixed_triple(seed, d);
    const auto g = build_G(t);
    const DimGrid grid(t);
    for (int k = 0; k < 10; ++k) {
      const auto p = random_lattice_path(d, rng);
      CHECK(cost_one_is_independent(p, grid, g));
      int total = 0;
      for (const auto& [v, cost] : hop_costs(p, grid)) total += cost;
      CHECK(total == static_cast<int>(d));
    }
  }
}

TEST_CASE("the hop-lowering lemma holds in every orientation") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t d = 2 + seed % 4;
    const auto t = mixed_triple(seed, d);
    const auto g = build_G(t);
    const DimGrid grid(t);
    std::size_t applicable = 0;
    std::set<std::size_t> faces;
    for (const auto& e : g.g_edges()) {
      for (const Edge& oriented : {e, Edge{e.b, e.a}}) {
        for (std::size_t i = 0; i <= d; ++i) {
          for (std::size_t j = 0; j <= d; ++j) {
            for (std::size_t k = 0; k <= d; ++k) {
              const auto verdict = check_lemma_sleight(grid, g, {i, j, k}, oriented);
              if (!verdict) continue;
              ++applicable;
              faces.insert(oriented.a.flag * 3 + oriented.b.flag);
              CHECK(*verdict);
            }
          }
        }
      }
    }
    CHECK(applicable > 0);
    if (d >= 3) CHECK(faces.size() == 6);
  }
}

TEST_CASE("the hop-lowering lemma does not apply when j = j'") {
  const auto t = generic_triple(1);
  const auto g = build_G(t);
  const DimGrid grid(t);
  // (U_1, V_3) is a G-edge; V at level 3 is not below 3.
  CHECK_FALSE(check_lemma_sleight(grid, g, {1, 3, 2}, make_edge({kU, 1}, {kV, 3})).has_value());
}

TEST_CASE("triangle lemma on every G-triangle") {
  std::size_t incompatible = 0;
  std::size_t compatible = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t d = 1 + seed % 6;
    const auto t = mixed_triple(seed, d);
    const auto g = build_G(t);
    const DimGrid grid(t);
    for (const auto& c : g.cycles()) {
      if (!c.is_triangle()) continue;
      CHECK(check_lemma_magic(t, grid, c));
      const auto& v = c.vertices;
      (compatible_triple(t, v[0], v[1], v[2]) ? compatible : incompatible) += 1;
    }
  }
  CHECK(compatible > 0);
  CHECK(incompatible > 0);
  const auto same = identical_triple(3);
  const DimGrid grid(same);
  CHECK(grid(2, 2, 2) == grid(1, 1, 1) + 1);
}
