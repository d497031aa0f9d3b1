#include "flagcover/prism.hpp"

#include <algorithm>

#include "flagcover/errors.hpp"

namespace flagcover {

Edge make_edge(const LayerRef& x, const LayerRef& y) {
  if (x.flag > kW || y.flag > kW) throw InvalidArgument("prism edges live on U, V, W");
  if ((x.flag + 1) % 3 == y.flag) return {x, y};
  if ((y.flag + 1) % 3 == x.flag) return {y, x};
  throw InvalidArgument("no prism face joins " + to_string(x) + " and " + to_string(y));
}

std::vector<Edge> Cycle::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    out.push_back(make_edge(vertices[i], vertices[(i + 1) % vertices.size()]));
  }
  return out;
}

std::vector<std::size_t> Cycle::levels(std::size_t flag) const {
  std::vector<std::size_t> out;
  for (const auto& v : vertices) {
    if (v.flag == flag) out.push_back(v.level);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::array<std::size_t, 3> Cycle::counts() const {
  std::array<std::size_t, 3> out{0, 0, 0};
  for (const auto& v : vertices) ++out.at(v.flag);
  return out;
}

bool Cycle::contains(const LayerRef& v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

LayerRef PrismGraph::partner(const LayerRef& v, std::size_t flag) const {
  if (v.flag > kW || flag > kW || v.level < 1 || v.level > d_) {
    throw InvalidArgument("layer " + to_string(v) + " is not a prism vertex");
  }
  if (flag == (v.flag + 1) % 3) return {flag, sigma_[v.flag](v.level)};
  if ((flag + 1) % 3 == v.flag) return {flag, sigma_inv_[flag](v.level)};
  throw InvalidArgument("partner query inside one column");
}

bool PrismGraph::has_g_edge(const LayerRef& x, const LayerRef& y) const {
  const Edge e = make_edge(x, y);
  return partner(e.a, e.b.flag) == e.b;
}

std::vector<Edge> PrismGraph::g_edges() const {
  std::vector<Edge> out;
  for (std::size_t face = 0; face < 3; ++face) {
    for (std::size_t level = 1; level <= d_; ++level) {
      const LayerRef a{face, level};
      out.push_back({a, partner(a, (face + 1) % 3)});
    }
  }
  return out;
}

std::vector<Edge> PrismGraph::gtilde_edges() const {
  std::vector<Edge> out;
  for (std::size_t face = 0; face < 3; ++face) {
    for (std::size_t i = 1; i <= d_; ++i) {
      for (std::size_t j = 1; j <= d_; ++j) {
        const Edge e{{face, i}, {(face + 1) % 3, j}};
        if (gtilde_edge(*this, e.a, e.b)) out.push_back(e);
      }
    }
  }
  return out;
}

std::size_t PrismGraph::cycle_index(const LayerRef& v) const {
  if (v.flag > kW || v.level < 1 || v.level > d_) {
    throw InvalidArgument("layer " + to_string(v) + " is not a prism vertex");
  }
  return cycle_of_[v.flag * d_ + v.level - 1];
}

PrismGraph build_G(const FlagTuple& t) {
  if (t.size() != 3) throw InvalidArgument("the prism graph needs exactly three flags");
  PrismGraph g;
  g.d_ = t.dim();
  g.sigma_ = {bruhat_perm(t, kU, kV), bruhat_perm(t, kV, kW), bruhat_perm(t, kW, kU)};
  for (std::size_t f = 0; f < 3; ++f) g.sigma_inv_[f] = g.sigma_[f].inverse();
  const std::size_t unset = static_cast<std::size_t>(-1);
  g.cycle_of_.assign(3 * g.d_, unset);
  // Every cycle alternates U -> V -> W -> U, so starting from each unvisited
  // U vertex in level order enumerates all cycles canonically.
  for (std::size_t level = 1; level <= g.d_; ++level) {
    if (g.cycle_of_[level - 1] != unset) continue;
    Cycle cycle;
    LayerRef v{kU, level};
    do {
      cycle.vertices.push_back(v);
      g.cycle_of_[v.flag * g.d_ + v.level - 1] = g.cycles_.size();
      v = g.partner(v, (v.flag + 1) % 3);
    } while (v != LayerRef{kU, level});
    g.cycles_.push_back(std::move(cycle));
  }
  return g;
}

bool gtilde_edge(const PrismGraph& g, const LayerRef& a, const LayerRef& b) {
  const Edge e = make_edge(a, b);
  const std::size_t i_prime = g.partner(e.b, e.a.flag).level;
  const std::size_t j_prime = g.partner(e.a, e.b.flag).level;
  return e.a.level >= i_prime && e.b.level >= j_prime;
}

bool compatible_pair(const FlagTuple& t, const LayerRef& a, const LayerRef& b) {
  if (a.flag == b.flag) throw InvalidArgument("compatible_pair on one flag");
  const std::array<LayerRef, 2> layers{a, b};
  return is_compatible(t, layers);
}

bool compatible_triple(const FlagTuple& t, const LayerRef& a, const LayerRef& b,
                       const LayerRef& c) {
  const std::array<LayerRef, 3> layers{a, b, c};
  return is_compatible(t, layers);
}

bool edges_cross(const Edge& e1, const Edge& e2) {
  if (e1.face() != e2.face()) return false;
  return (e1.a.level > e2.a.level && e1.b.level < e2.b.level) ||
         (e1.a.level < e2.a.level && e1.b.level > e2.b.level);
}

bool cycles_cross(const Cycle& c1, const Cycle& c2) {
  if (c1 == c2) return false;
  const auto edges1 = c1.edges();
  const auto edges2 = c2.edges();
  for (const auto& e1 : edges1) {
    for (const auto& e2 : edges2) {
      if (edges_cross(e1, e2)) return true;
    }
  }
  return false;
}

namespace {

// Every level of `low` lies below every level of `high`, in all three columns.
bool strictly_below(const Cycle& low, const Cycle& high) {
  for (std::size_t f = 0; f < 3; ++f) {
    const auto a = low.levels(f);
    const auto b = high.levels(f);
    if (!a.empty() && !b.empty() && a.back() >= b.front()) return false;
  }
  return true;
}

}  // namespace

std::vector<Cycle> height_order(std::vector<Cycle> cycles) {
  std::sort(cycles.begin(), cycles.end(), [](const Cycle& x, const Cycle& y) {
    return x.levels(kU).front() < y.levels(kU).front();
  });
  for (std::size_t i = 1; i < cycles.size(); ++i) {
    if (!strictly_below(cycles[i - 1], cycles[i])) {
      throw NotComparable("cycles through " + to_string(cycles[i - 1].vertices.front()) +
                          " and " + to_string(cycles[i].vertices.front()) +
                          " are not separated by height");
    }
  }
  return cycles;
}

}  // namespace flagcover
