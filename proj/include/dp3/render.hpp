// SVG 1.1 pictures of diamonds, matchings and height functions.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>

#include "shuffle.hpp"

namespace dp3 {

enum class FaceFill { None, Orientation, Height };

struct RenderOptions {
  double scale = 24.0;  // pixels per hexagon spacing unit
  bool show_graph = true;
  bool show_matching = true;
  bool show_kites = false;  // ovals over the active kites of the next shuffle
  FaceFill fill = FaceFill::Orientation;
};

inline const char* orientation_color(Orientation o) {
  static const char* pal[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#b07aa1", "#edc948"};
  return pal[static_cast<int>(o)];
}

// Matched edges take a color per edge class: three long and three short
// directions.
inline const char* edge_class_color(const Edge& e) {
  static const char* pal[] = {"#1f3b73", "#8c2d04", "#00441b", "#67000d", "#3f007d", "#7f6000"};
  LatticePoint v = e.v - e.u;
  int dir;
  if (v.q == 0) dir = 0;
  else if (v.p == 0) dir = 1;
  else if (v.p == -v.q) dir = 2;
  else if (v.q == -2 * v.p) dir = 3;
  else if (v.p == -2 * v.q) dir = 4;
  else dir = 5;
  return pal[dir];
}

inline std::string render_svg(const Diamond& d, const Matching* m = nullptr, const RenderOptions& opt = {}) {
  if (m && (&m->diamond() != &d) && (!(m->diamond().order == d.order) || m->diamond().edges != d.edges))
    throw DomainError("matching belongs to a different diamond");
  if (!(opt.scale > 0)) throw DomainError("scale must be positive");
  double minx = 0, maxx = 1, miny = 0, maxy = 1;
  bool first = true;
  for (auto& v : d.vertices) {
    auto [x, y] = cartesian(v);
    if (first) minx = maxx = x, miny = maxy = y, first = false;
    minx = std::min(minx, x), maxx = std::max(maxx, x), miny = std::min(miny, y), maxy = std::max(maxy, y);
  }
  double pad = 0.6, s = opt.scale;
  double w = (maxx - minx + 2 * pad) * s, h = (maxy - miny + 2 * pad) * s;
  auto X = [&](LatticePoint p) { return (cartesian(p).first - minx + pad) * s; };
  auto Y = [&](LatticePoint p) { return (maxy - cartesian(p).second + pad) * s; };  // y grows downward
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return std::string(buf);
  };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(w) << "\" height=\"" << num(h)
     << "\" viewBox=\"0 0 " << num(w) << ' ' << num(h) << "\">\n"
     << "<title>D_" << d.order.str() << "</title>\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  std::optional<HeightFunction> hf;
  if (opt.fill == FaceFill::Height && m) hf = height_function(*m);
  int hlo = 0, hhi = 1;
  if (hf && d.num_faces()) {
    hlo = hhi = hf->at(0);
    for (std::size_t f = 0; f < d.num_faces(); ++f)
      hlo = std::min(hlo, hf->at(static_cast<FaceId>(f))), hhi = std::max(hhi, hf->at(static_cast<FaceId>(f)));
  }
  if (opt.fill != FaceFill::None) {
    os << "<g stroke=\"none\" fill-opacity=\"0.55\">\n";
    for (std::size_t f = 0; f < d.num_faces(); ++f) {
      auto& sq = d.faces[f].square;
      std::string color;
      if (hf) {
        double t = hhi > hlo ? double(hf->at(static_cast<FaceId>(f)) - hlo) / (hhi - hlo) : 0.5;
        int g = static_cast<int>(40 + 200 * t);
        char buf[16];
        std::snprintf(buf, sizeof buf, "#%02x%02x%02x", g, g, 255 - g / 2);
        color = buf;
      } else {
        color = orientation_color(sq.orientation);
      }
      os << "<polygon fill=\"" << color << "\" points=\"";
      for (auto& p : sq.polygon()) os << num(X(p)) << ',' << num(Y(p)) << ' ';
      os << "\"/>\n";
    }
    os << "</g>\n";
  }
  if (opt.show_graph) {
    os << "<g stroke=\"#888\" stroke-width=\"" << num(std::max(0.3, s * 0.02)) << "\">\n";
    for (auto& e : d.edges)
      os << "<line x1=\"" << num(X(e.u)) << "\" y1=\"" << num(Y(e.u)) << "\" x2=\"" << num(X(e.v)) << "\" y2=\""
         << num(Y(e.v)) << "\"/>\n";
    os << "</g>\n";
  }
  if (opt.show_kites) {
    os << "<g fill=\"none\" stroke=\"#d62728\" stroke-width=\"" << num(std::max(0.5, s * 0.03)) << "\">\n";
    for (auto& k : active_kites(d)) {
      auto c = k.square.polygon();
      double cx = 0, cy = 0;
      for (auto& p : c) cx += X(p) / 4, cy += Y(p) / 4;
      double ang = std::atan2(Y(k.root) - Y(k.square.center), X(k.root) - X(k.square.center)) * 180 / M_PI;
      os << "<ellipse cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" rx=\"" << num(0.55 * s) << "\" ry=\""
         << num(0.3 * s) << "\" transform=\"rotate(" << num(ang) << ' ' << num(cx) << ' ' << num(cy) << ")\"/>\n";
    }
    os << "</g>\n";
  }
  if (m && opt.show_matching) {
    os << "<g stroke-linecap=\"round\" stroke-width=\"" << num(std::max(1.0, s * 0.12)) << "\">\n";
    for (auto& e : m->edge_list())
      os << "<line stroke=\"" << edge_class_color(e) << "\" x1=\"" << num(X(e.u)) << "\" y1=\"" << num(Y(e.u))
         << "\" x2=\"" << num(X(e.v)) << "\" y2=\"" << num(Y(e.v)) << "\"/>\n";
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace dp3
