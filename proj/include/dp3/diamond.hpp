// Aztec diamonds D_m on the dP3 lattice, m a nonnegative half-integer.
#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lattice.hpp"

namespace dp3 {

// Half-integer order stored as 2m.
struct Order {
  int twice = 0;
  static Order from_twice(int t) {
    if (t < 0) throw DomainError("order must be nonnegative");
    return Order{t};
  }
  static Order integer(int n) { return from_twice(2 * n); }
  static Order half_past(int n) { return from_twice(2 * n + 1); }
  // Accepts "3", "2.5", "5/2".
  static Order parse(const std::string& s) {
    auto bad = [&] { return DomainError("order must be a nonnegative multiple of 1/2, got '" + s + "'"); };
    if (s.empty()) throw bad();
    try {
      std::size_t pos = 0;
      if (auto slash = s.find('/'); slash != std::string::npos) {
        long a = std::stol(s.substr(0, slash), &pos);
        if (pos != slash) throw bad();
        std::string den = s.substr(slash + 1);
        long b = std::stol(den, &pos);
        if (pos != den.size()) throw bad();
        if (b == 1) return from_twice(static_cast<int>(2 * a));
        if (b == 2) return from_twice(static_cast<int>(a));
        throw bad();
      }
      double v = std::stod(s, &pos);
      if (pos != s.size()) throw bad();
      double t = v * 2.0;
      if (t < 0 || t != static_cast<double>(static_cast<long>(t))) throw bad();
      return from_twice(static_cast<int>(t));
    } catch (const DomainError&) {
      throw;
    } catch (const std::exception&) {
      throw bad();
    }
  }
  int floor() const { return twice / 2; }
  bool is_integer() const { return twice % 2 == 0; }
  Order next() const { return Order{twice + 1}; }
  std::string str() const {
    return is_integer() ? std::to_string(twice / 2) : std::to_string(twice / 2) + ".5";
  }
  friend constexpr auto operator<=>(const Order&, const Order&) = default;
};

// Number of edges in a perfect matching of D_m: n(3n+1) or 3n^2+4n+2.
inline long matching_size(Order m) {
  long n = m.floor();
  return m.is_integer() ? n * (3 * n + 1) : 3 * n * n + 4 * n + 2;
}

struct Face {
  Square square;
  CellCoord cell;  // strip index is cell.j
};

// Index of a face of X = faces of D plus the exterior ring.
using FaceId = int;

class Diamond {
 public:
  Order order;
  std::vector<LatticePoint> vertices;  // sorted
  std::vector<Edge> edges;             // sorted
  std::vector<EdgeKind> edge_kinds;
  std::vector<Face> faces;    // sorted by (center, orientation)
  std::vector<Square> ring;   // exterior squares sharing an edge with D, sorted
  std::vector<bool> boundary;  // per vertex

  // Per edge: the two faces of X on either side, and the height increment
  // sign seen from the first of them (+1 when the midpoint is on the left
  // of the arrow pointing from face_a to face_b).
  struct Dual {
    FaceId a, b;
    int sign_from_a;
  };
  std::vector<Dual> dual;
  std::vector<std::array<int, 4>> face_edges;  // faces then ring; -1 for edges outside D

  std::size_t num_faces() const { return faces.size(); }
  std::size_t num_x_faces() const { return faces.size() + ring.size(); }
  const Square& x_square(FaceId f) const {
    return static_cast<std::size_t>(f) < faces.size() ? faces[f].square : ring[f - faces.size()];
  }

  // Edge indices at vertex v.
  std::span<const int> incident(int v) const {
    return {inc_.data() + inc_off_[v], inc_.data() + inc_off_[v + 1]};
  }

  std::optional<int> vertex_index(LatticePoint x) const {
    int i = slot(x);
    if (i < 0 || grid_[i] < 0) return std::nullopt;
    return grid_[i];
  }
  bool contains(LatticePoint x) const { return vertex_index(x).has_value(); }
  std::optional<int> edge_index(const Edge& e) const {
    auto u = vertex_index(e.u);
    if (!u) return std::nullopt;
    for (int i : incident(*u))
      if (edges[i].v == e.v && edges[i].u == e.u) return i;
    return std::nullopt;
  }
  std::optional<int> face_index(const Square& s) const {
    auto it = std::lower_bound(faces.begin(), faces.end(), s,
                               [](const Face& f, const Square& x) { return f.square < x; });
    if (it == faces.end() || !(it->square == s)) return std::nullopt;
    return static_cast<int>(it - faces.begin());
  }
  std::size_t strip_count() const {
    if (faces.empty()) return 0;
    int lo = faces.front().cell.j, hi = lo;
    for (auto& f : faces) lo = std::min(lo, f.cell.j), hi = std::max(hi, f.cell.j);
    return static_cast<std::size_t>(hi - lo + 1);
  }

  // Assemble from a list of faces; edges are the union of face boundaries.
  static Diamond from_faces(Order m, std::vector<Face> fs) {
    Diamond d;
    d.order = m;
    std::sort(fs.begin(), fs.end(), [](const Face& x, const Face& y) { return x.square < y.square; });
    fs.erase(std::unique(fs.begin(), fs.end(), [](const Face& x, const Face& y) { return x.square == y.square; }),
             fs.end());
    d.faces = std::move(fs);
    d.edges.reserve(4 * d.faces.size());
    for (auto& f : d.faces)
      for (auto& e : f.square.edges()) d.edges.push_back(e);
    std::sort(d.edges.begin(), d.edges.end());
    d.edges.erase(std::unique(d.edges.begin(), d.edges.end()), d.edges.end());
    d.vertices.reserve(2 * d.edges.size());
    for (auto& e : d.edges) d.vertices.push_back(e.u), d.vertices.push_back(e.v);
    std::sort(d.vertices.begin(), d.vertices.end());
    d.vertices.erase(std::unique(d.vertices.begin(), d.vertices.end()), d.vertices.end());
    d.finish();
    return d;
  }

 private:
  // dense index over the bounding box of the vertices
  int p0_ = 0, q0_ = 0, w_ = 0, h_ = 0;
  std::vector<int> grid_;
  std::vector<int> inc_off_, inc_;

  int slot(LatticePoint x) const {
    int i = x.p - p0_, j = x.q - q0_;
    if (i < 0 || j < 0 || i >= w_ || j >= h_) return -1;
    return i * h_ + j;
  }

  void finish() {
    if (!vertices.empty()) {
      int p1 = vertices.front().p, q1 = vertices.front().q;
      p0_ = p1, q0_ = q1;
      for (auto& v : vertices) p0_ = std::min(p0_, v.p), p1 = std::max(p1, v.p), q0_ = std::min(q0_, v.q), q1 = std::max(q1, v.q);
      w_ = p1 - p0_ + 1, h_ = q1 - q0_ + 1;
    }
    grid_.assign(static_cast<std::size_t>(w_) * h_, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) grid_[slot(vertices[i])] = static_cast<int>(i);
    edge_kinds.resize(edges.size());
    inc_off_.assign(vertices.size() + 1, 0);
    std::vector<std::array<int, 2>> ends(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Edge& e = edges[i];
      bool lng = classify(e.u) == VertexKind::Center || classify(e.v) == VertexKind::Center;
      edge_kinds[i] = lng ? EdgeKind::Long : EdgeKind::Short;
      ends[i] = {grid_[slot(e.u)], grid_[slot(e.v)]};
      ++inc_off_[ends[i][0] + 1], ++inc_off_[ends[i][1] + 1];
    }
    for (std::size_t v = 0; v < vertices.size(); ++v) inc_off_[v + 1] += inc_off_[v];
    inc_.resize(2 * edges.size());
    {
      std::vector<int> fill(inc_off_.begin(), inc_off_.end() - 1);
      for (std::size_t i = 0; i < edges.size(); ++i)
        for (int v : ends[i]) inc_[fill[v]++] = static_cast<int>(i);
    }
    // faces on each edge; edges seen once lie on the boundary
    std::vector<std::array<int, 2>> on_edge(edges.size(), {-1, -1});
    for (std::size_t f = 0; f < faces.size(); ++f)
      for (auto& e : faces[f].square.edges()) {
        auto& slot2 = on_edge[*edge_index(e)];
        (slot2[0] < 0 ? slot2[0] : slot2[1]) = static_cast<int>(f);
      }
    std::vector<Square> r;
    boundary.assign(vertices.size(), false);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (on_edge[i][1] >= 0) continue;
      boundary[ends[i][0]] = boundary[ends[i][1]] = true;
      for (auto& s : squares_of_edge(edges[i]))
        if (!(s == faces[on_edge[i][0]].square)) r.push_back(s);
    }
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    ring = std::move(r);
    face_edges.assign(num_x_faces(), {-1, -1, -1, -1});
    for (std::size_t f = 0; f < num_x_faces(); ++f) {
      auto es = x_square(static_cast<FaceId>(f)).edges();
      for (int k = 0; k < 4; ++k)
        if (auto i = edge_index(es[k])) face_edges[f][k] = *i;
    }
    for (std::size_t f = faces.size(); f < num_x_faces(); ++f)
      for (int e : face_edges[f])
        if (e >= 0) on_edge[e][1] = static_cast<int>(f);
    dual.resize(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      FaceId a = on_edge[i][0], b = on_edge[i][1];
      if (b < 0) throw InvariantError("edge without a second face");
      dual[i] = Dual{a, b, arrow_sign(x_square(a), x_square(b), edges[i].black())};
    }
  }

  // Orientation test in (p, q) coordinates; the map to the plane has
  // positive determinant so the sign agrees with the Cartesian one.
  static int arrow_sign(const Square& f, const Square& g, LatticePoint blk) {
    auto c4 = [](const Square& s) {
      LatticePoint t{0, 0};
      for (auto& x : s.polygon()) t = t + x;
      return t;
    };
    LatticePoint cf = c4(f), cg = c4(g);
    long dx = cg.p - cf.p, dy = cg.q - cf.q;
    long wx = 4L * blk.p - cf.p, wy = 4L * blk.q - cf.q;
    long cr = dx * wy - dy * wx;
    if (cr == 0) throw InvariantError("degenerate dual arrow");
    return cr > 0 ? 1 : -1;
  }
};

// D_0 is empty; D_1/2 is a single SW square. For n >= 1, cells sit at
// A + (3i - 3j, 6j) with |i| + |j| < n; the north/south shape of a cell is
// fixed by its parity and hemisphere. D_{n+1/2} adds a wedge of cells to
// the north-east plus two loose squares at the east end of strip 0.
inline std::vector<Face> diamond_faces(Order m) {
  std::vector<Face> out;
  if (m.twice == 0) return out;
  if (m.twice == 1) {
    out.push_back({square_at({0, 6}, Orientation::SW), {0, 0}});
    return out;
  }
  int n = m.floor();
  bool half = !m.is_integer();
  LatticePoint anchor = ((n % 2 != 0) != half) ? LatticePoint{-3, 3} : LatticePoint{0, 3};
  auto put = [&](CellCoord c, bool upper_family) {
    LatticePoint x = cell_center(anchor, c);
    CellParity par = cell_parity_at(x);
    bool north = (par == CellParity::Standard) == upper_family;
    for (auto& s : cell(x, par, north ? Orientation::N : Orientation::S)) out.push_back({s, c});
  };
  for (int j = -(n - 1); j <= n - 1; ++j)
    for (int i = -(n - 1); i <= n - 1; ++i)
      if (std::abs(i) + std::abs(j) < n) put({i, j}, half ? j <= 0 : j >= 0);
  if (half) {
    for (int j = 1; j <= n; ++j)
      for (int i = 1; i <= n + 1 - j; ++i) put({i, j}, false);
    auto east = [&](int i, Orientation o) {
      LatticePoint x = cell_center(anchor, {i, 0});
      CellParity par = cell_parity_at(x);
      for (auto& s : cell(x, par, par == CellParity::Standard ? Orientation::N : Orientation::S))
        if (s.orientation == o) out.push_back({s, {i, 0}});
    };
    east(n, Orientation::SE);
    east(n + 1, Orientation::SW);
  }
  return out;
}

inline Diamond build_diamond(Order m) { return Diamond::from_faces(m, diamond_faces(m)); }

inline std::shared_ptr<const Diamond> make_diamond(Order m) {
  return std::make_shared<const Diamond>(build_diamond(m));
}

}  // namespace dp3
