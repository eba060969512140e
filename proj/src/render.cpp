#include "hourglass/render.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

namespace hourglass {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << x;
  return os.str();
}

}  // namespace

std::vector<std::pair<double, double>> layout(const HourglassGraph& g, const LayoutOptions& opt) {
  const int n = g.boundary_size();
  const double c = opt.size / 2.0;
  const double radius = opt.size * 0.42;
  std::vector<std::pair<double, double>> pos(g.vertex_count(), {c, c});
  std::vector<bool> fixed(g.vertex_count(), false);
  for (int j = 0; j < n; ++j) {
    const double a = -kPi / 2 + 2 * kPi * j / std::max(1, n);
    pos[g.boundary[j]] = {c + radius * std::cos(a), c + radius * std::sin(a)};
    fixed[g.boundary[j]] = true;
  }
  std::mt19937 rng(opt.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!fixed[v]) pos[v] = {c + 0.5 * radius * unit(rng), c + 0.5 * radius * unit(rng)};
  }

  const int internal = g.vertex_count() - n;
  const double k = radius * std::sqrt(kPi / std::max(1, internal + n));
  double temp = radius / 4;
  for (int it = 0; it < opt.iterations; ++it) {
    std::vector<std::pair<double, double>> disp(g.vertex_count(), {0.0, 0.0});
    for (int u = 0; u < g.vertex_count(); ++u) {
      if (fixed[u]) continue;
      for (int v = 0; v < g.vertex_count(); ++v) {
        if (u == v) continue;
        const double dx = pos[u].first - pos[v].first, dy = pos[u].second - pos[v].second;
        const double d = std::max(1e-3, std::hypot(dx, dy));
        const double f = k * k / d;
        disp[u].first += dx / d * f;
        disp[u].second += dy / d * f;
      }
    }
    for (const auto& e : g.edges) {
      const double dx = pos[e.u].first - pos[e.v].first, dy = pos[e.u].second - pos[e.v].second;
      const double d = std::max(1e-3, std::hypot(dx, dy));
      const double f = d * d / k;
      if (!fixed[e.u]) {
        disp[e.u].first -= dx / d * f;
        disp[e.u].second -= dy / d * f;
      }
      if (!fixed[e.v]) {
        disp[e.v].first += dx / d * f;
        disp[e.v].second += dy / d * f;
      }
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (fixed[v]) continue;
      const double d = std::max(1e-9, std::hypot(disp[v].first, disp[v].second));
      const double step = std::min(d, temp);
      double x = pos[v].first + disp[v].first / d * step;
      double y = pos[v].second + disp[v].second / d * step;
      const double rx = x - c, ry = y - c, rr = std::hypot(rx, ry);
      if (rr > 0.9 * radius) {
        x = c + rx / rr * 0.9 * radius;
        y = c + ry / rr * 0.9 * radius;
      }
      pos[v] = {x, y};
    }
    temp = std::max(0.5, temp * 0.985);
  }
  return pos;
}

std::string render_svg(const HourglassGraph& g, const LayoutOptions& opt) {
  const auto pos = layout(g, opt);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(opt.size) << "\" height=\"" << fmt(opt.size)
     << "\" viewBox=\"0 0 " << fmt(opt.size) << " " << fmt(opt.size) << "\">\n";
  os << "<circle cx=\"" << fmt(opt.size / 2) << "\" cy=\"" << fmt(opt.size / 2) << "\" r=\"" << fmt(opt.size * 0.42)
     << "\" fill=\"none\" stroke=\"#bbb\" stroke-dasharray=\"4 4\"/>\n";
  for (const auto& e : g.edges) {
    const auto [x1, y1] = pos[e.u];
    const auto [x2, y2] = pos[e.v];
    const double len = std::max(1e-9, std::hypot(x2 - x1, y2 - y1));
    const double nx = -(y2 - y1) / len, ny = (x2 - x1) / len;
    const double gap = 3.0;
    for (int s = 0; s < e.mult; ++s) {
      // Strand s leaves at offset o and arrives at -o, so the bundle twists once.
      const double o = (s - (e.mult - 1) / 2.0) * gap;
      const double c1x = x1 + (x2 - x1) / 3 + nx * o, c1y = y1 + (y2 - y1) / 3 + ny * o;
      const double c2x = x1 + 2 * (x2 - x1) / 3 - nx * o, c2y = y1 + 2 * (y2 - y1) / 3 - ny * o;
      os << "<path d=\"M " << fmt(x1 + nx * o) << " " << fmt(y1 + ny * o) << " C " << fmt(c1x) << " " << fmt(c1y)
         << " " << fmt(c2x) << " " << fmt(c2y) << " " << fmt(x2 - nx * o) << " " << fmt(y2 - ny * o)
         << "\" fill=\"none\" stroke=\"#333\" stroke-width=\"1.2\"/>\n";
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    const bool white = g.vertices[v].color == Color::White;
    os << "<circle cx=\"" << fmt(pos[v].first) << "\" cy=\"" << fmt(pos[v].second) << "\" r=\"6\" fill=\""
       << (white ? "#fff" : "#000") << "\" stroke=\"#000\" stroke-width=\"1.5\"/>\n";
  }
  const double c = opt.size / 2;
  for (int j = 0; j < g.boundary_size(); ++j) {
    const auto [x, y] = pos[g.boundary[j]];
    const double lx = c + (x - c) * 1.1, ly = c + (y - c) * 1.1;
    os << "<text x=\"" << fmt(lx) << "\" y=\"" << fmt(ly + 4)
       << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" << j + 1 << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_dot(const HourglassGraph& g) {
  std::ostringstream os;
  os << "graph hourglass {\n  node [shape=circle, label=\"\", width=0.2];\n";
  const auto bpos = g.boundary_positions();
  for (int v = 0; v < g.vertex_count(); ++v) {
    os << "  v" << v << " [style=filled, fillcolor=" << (g.vertices[v].color == Color::White ? "white" : "black");
    if (g.is_boundary(v)) os << ", shape=box, label=\"" << bpos[v] + 1 << "\", fontcolor=red";
    os << "];\n";
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    os << "  v" << g.edges[e].u << " -- v" << g.edges[e].v;
    if (g.edges[e].mult > 1) os << " [label=\"" << g.edges[e].mult << "\", penwidth=" << g.edges[e].mult << "]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string flip_graph_dot(const MoveClass& mc) {
  std::ostringstream os;
  os << "graph flips {\n";
  for (std::size_t k = 0; k < mc.size(); ++k) os << "  g" << k << ";\n";
  for (auto [a, b] : mc.edges) os << "  g" << a << " -- g" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace hourglass
