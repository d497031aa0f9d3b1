#include "flagcover/svg.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

namespace flagcover {

namespace {

constexpr int kColumnX[3] = {100, 260, 420};
constexpr int kSpacing = 50;
constexpr int kMargin = 40;

struct Point {
  int x;
  int y;
};

Point locate(const LayerRef& v, std::size_t d) {
  return {kColumnX[v.flag], kMargin + static_cast<int>(d - v.level) * kSpacing};
}

void path(std::ostringstream& out, const LayerRef& a, const LayerRef& b, std::size_t d,
          const char* style) {
  const Point p = locate(a, d);
  const Point q = locate(b, d);
  out << "  <path d=\"M " << p.x << ' ' << p.y;
  if ((a.flag == kW && b.flag == kU) || (a.flag == kU && b.flag == kW)) {
    const int lift = kMargin / 2 + std::abs(p.y - q.y) / 4;
    out << " Q " << kColumnX[kV] << ' ' << std::min(p.y, q.y) - lift << ' ' << q.x << ' ' << q.y;
  } else {
    out << " L " << q.x << ' ' << q.y;
  }
  out << "\" fill=\"none\" " << style << "/>\n";
}

}  // namespace

std::string render_prism_svg(const FlagTuple& t, const PrismGraph& g) {
  const std::size_t d = g.dim();
  const int height = 2 * kMargin + static_cast<int>(d - 1) * kSpacing + kMargin;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"520\" height=\"" << height
      << "\" viewBox=\"0 0 520 " << height << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  std::set<Edge> solid;
  for (const auto& e : g.g_edges()) solid.insert(e);
  for (const auto& e : g.gtilde_edges()) {
    if (!solid.count(e)) path(out, e.a, e.b, d, "stroke=\"#888\" stroke-dasharray=\"5,4\"");
  }
  for (const auto& e : solid) path(out, e.a, e.b, d, "stroke=\"black\" stroke-width=\"1.5\"");

  for (std::size_t i = 1; i <= d; ++i) {
    for (std::size_t j = 1; j <= d; ++j) {
      const LayerRef u{kU, i};
      const LayerRef v{kV, j};
      if (!gtilde_edge(g, u, v)) continue;
      for (std::size_t k = 1; k <= d; ++k) {
        const LayerRef w{kW, k};
        if (!gtilde_edge(g, v, w) || !gtilde_edge(g, w, u)) continue;
        if (!compatible_triple(t, u, v, w)) continue;
        const char* bold = "stroke=\"#c03\" stroke-width=\"4\" stroke-opacity=\"0.6\"";
        path(out, u, v, d, bold);
        path(out, v, w, d, bold);
        path(out, w, u, d, bold);
      }
    }
  }

  for (std::size_t f = 0; f < 3; ++f) {
    for (std::size_t level = 1; level <= d; ++level) {
      const LayerRef v{f, level};
      const Point p = locate(v, d);
      out << "  <circle cx=\"" << p.x << "\" cy=\"" << p.y
          << "\" r=\"6\" fill=\"white\" stroke=\"black\"/>\n";
      out << "  <text x=\"" << p.x + 10 << "\" y=\"" << p.y + 4
          << "\" font-family=\"sans-serif\" font-size=\"12\">" << to_string(v) << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace flagcover
