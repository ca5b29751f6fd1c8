// dP3 lattice: integer coordinates (p, q) with Cartesian image
// (p/3 + q/6, q*sqrt(3)/6). Hexagon centers sit on 6Z x 6Z.
#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace dp3 {

struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

struct LatticePoint {
  int p = 0;
  int q = 0;
  friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  friend constexpr LatticePoint operator+(LatticePoint a, LatticePoint b) { return {a.p + b.p, a.q + b.q}; }
  friend constexpr LatticePoint operator-(LatticePoint a, LatticePoint b) { return {a.p - b.p, a.q - b.q}; }
  friend constexpr LatticePoint operator-(LatticePoint a) { return {-a.p, -a.q}; }
};

struct PointHash {
  std::size_t operator()(const LatticePoint& x) const noexcept {
    auto k = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x.p)) << 32) |
             static_cast<std::uint32_t>(x.q);
    k ^= k >> 33;
    k *= 0xff51afd7ed558ccdULL;
    k ^= k >> 33;
    return static_cast<std::size_t>(k);
  }
};

inline constexpr int mod6(int x) { return ((x % 6) + 6) % 6; }

inline std::pair<double, double> cartesian(LatticePoint x) {
  constexpr double s3 = 1.7320508075688772;
  return {x.p / 3.0 + x.q / 6.0, x.q * s3 / 6.0};
}

enum class VertexKind { Center, Midpoint, Corner };

inline const char* to_string(VertexKind k) {
  switch (k) {
    case VertexKind::Center: return "center";
    case VertexKind::Midpoint: return "midpoint";
    case VertexKind::Corner: return "corner";
  }
  return "?";
}

// Midpoints and corners form the black / white classes of the bipartition.
inline bool is_black(VertexKind k) { return k == VertexKind::Midpoint; }

inline bool on_lattice(LatticePoint x) {
  int a = mod6(x.p), b = mod6(x.q);
  if (a == 0 && b == 0) return true;
  if ((a == 3 && b == 0) || (a == 0 && b == 3) || (a == 3 && b == 3)) return true;
  return (a == 2 && b == 2) || (a == 4 && b == 4);
}

inline VertexKind classify(LatticePoint x) {
  int a = mod6(x.p), b = mod6(x.q);
  if (a == 0 && b == 0) return VertexKind::Center;
  if ((a == 3 && b == 0) || (a == 0 && b == 3) || (a == 3 && b == 3)) return VertexKind::Midpoint;
  if ((a == 2 && b == 2) || (a == 4 && b == 4)) return VertexKind::Corner;
  throw DomainError("point (" + std::to_string(x.p) + "," + std::to_string(x.q) + ") is not a lattice vertex");
}

template <std::size_t Cap>
struct PointList {
  std::array<LatticePoint, Cap> items{};
  std::size_t n = 0;
  void push(LatticePoint x) { items[n++] = x; }
  const LatticePoint* begin() const { return items.data(); }
  const LatticePoint* end() const { return items.data() + n; }
  std::size_t size() const { return n; }
  const LatticePoint& operator[](std::size_t i) const { return items[i]; }
  bool contains(LatticePoint x) const {
    for (std::size_t i = 0; i < n; ++i)
      if (items[i] == x) return true;
    return false;
  }
};

inline PointList<6> neighbors(LatticePoint x) {
  PointList<6> out;
  int a = mod6(x.p), b = mod6(x.q);
  auto both = [&](LatticePoint o) {
    out.push(x + o);
    out.push(x - o);
  };
  switch (classify(x)) {
    case VertexKind::Center:
      both({3, 0});
      both({0, 3});
      both({-3, 3});
      break;
    case VertexKind::Midpoint:
      if (a == 3 && b == 0) {
        both({3, 0});
        both({-1, 2});
      } else if (a == 0 && b == 3) {
        both({0, 3});
        both({2, -1});
      } else {
        both({-3, 3});
        both({1, 1});
      }
      break;
    case VertexKind::Corner:
      if (a == 4) {
        out.push(x + LatticePoint{2, -1});
        out.push(x + LatticePoint{-1, 2});
        out.push(x + LatticePoint{-1, -1});
      } else {
        out.push(x + LatticePoint{-2, 1});
        out.push(x + LatticePoint{1, -2});
        out.push(x + LatticePoint{1, 1});
      }
      break;
  }
  return out;
}

enum class EdgeKind { Long, Short };

inline const char* to_string(EdgeKind k) { return k == EdgeKind::Long ? "long" : "short"; }

// Undirected lattice edge, endpoints stored in increasing order.
struct Edge {
  LatticePoint u, v;
  Edge() = default;
  Edge(LatticePoint a, LatticePoint b) : u(a < b ? a : b), v(a < b ? b : a) {}
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
  LatticePoint black() const { return classify(u) == VertexKind::Midpoint ? u : v; }
  LatticePoint white() const { return classify(u) == VertexKind::Midpoint ? v : u; }
};

struct EdgeHash {
  std::size_t operator()(const Edge& e) const noexcept {
    PointHash h;
    return h(e.u) * 0x9e3779b97f4a7c15ULL ^ h(e.v);
  }
};

inline EdgeKind edge_kind(const Edge& e) {
  if (!neighbors(e.u).contains(e.v)) throw DomainError("not a lattice edge");
  return (classify(e.u) == VertexKind::Center || classify(e.v) == VertexKind::Center) ? EdgeKind::Long
                                                                                       : EdgeKind::Short;
}

// Increment of the height function across an unmatched edge.
inline int edge_weight(const Edge& e) { return edge_kind(e) == EdgeKind::Long ? 1 : 2; }

enum class Orientation { N = 0, NE = 1, SE = 2, S = 3, SW = 4, NW = 5 };

inline constexpr std::array<Orientation, 6> kOrientations{Orientation::N,  Orientation::NE, Orientation::SE,
                                                          Orientation::S,  Orientation::SW, Orientation::NW};

inline const char* to_string(Orientation o) {
  static constexpr const char* names[] = {"N", "NE", "SE", "S", "SW", "NW"};
  return names[static_cast<int>(o)];
}

inline Orientation orientation_from_string(std::string_view s) {
  for (auto o : kOrientations)
    if (s == to_string(o)) return o;
  throw DomainError("unknown orientation '" + std::string(s) + "'");
}

inline constexpr Orientation opposite(Orientation o) {
  return static_cast<Orientation>((static_cast<int>(o) + 3) % 6);
}

inline constexpr LatticePoint corner_offset(Orientation o) {
  constexpr std::array<LatticePoint, 6> t{{{-2, 4}, {2, 2}, {4, -2}, {2, -4}, {-2, -2}, {-4, 2}}};
  return t[static_cast<int>(o)];
}

// Midpoint offsets at o-30 and o+30 degrees.
inline constexpr std::array<LatticePoint, 2> midpoint_offsets(Orientation o) {
  constexpr std::array<std::array<LatticePoint, 2>, 6> t{{{{{0, 3}, {-3, 3}}},
                                                          {{{3, 0}, {0, 3}}},
                                                          {{{3, -3}, {3, 0}}},
                                                          {{{0, -3}, {3, -3}}},
                                                          {{{-3, 0}, {0, -3}}},
                                                          {{{-3, 3}, {-3, 0}}}}};
  return t[static_cast<int>(o)];
}

// Pairs of opposite orientations used by the shuffle.
enum class KitePair { NE_SW, NW_SE };

inline bool in_pair(Orientation o, KitePair k) {
  if (k == KitePair::NE_SW) return o == Orientation::NE || o == Orientation::SW;
  return o == Orientation::NW || o == Orientation::SE;
}

// Square face: center b, corner d, midpoints a < c. The polygon
// b, m0, d, m1 runs counterclockwise.
struct Square {
  LatticePoint center;
  LatticePoint corner;
  std::array<LatticePoint, 2> mids;  // counterclockwise order after center
  Orientation orientation = Orientation::N;

  LatticePoint a() const { return std::min(mids[0], mids[1]); }
  LatticePoint c() const { return std::max(mids[0], mids[1]); }
  std::array<LatticePoint, 4> polygon() const { return {center, mids[0], corner, mids[1]}; }
  std::array<Edge, 4> edges() const {
    return {Edge(center, mids[0]), Edge(mids[0], corner), Edge(corner, mids[1]), Edge(mids[1], center)};
  }
  auto key() const { return std::pair{center, static_cast<int>(orientation)}; }
  friend bool operator==(const Square& x, const Square& y) { return x.key() == y.key(); }
  friend bool operator<(const Square& x, const Square& y) { return x.key() < y.key(); }
};

inline Square square_at(LatticePoint center, Orientation o) {
  if (classify(center) != VertexKind::Center) throw DomainError("square_at expects a hexagon center");
  auto m = midpoint_offsets(o);
  return Square{center, center + corner_offset(o), {center + m[0], center + m[1]}, o};
}

struct SquareHash {
  std::size_t operator()(const Square& s) const noexcept {
    return PointHash{}(s.center) * 31 + static_cast<std::size_t>(s.orientation);
  }
};

// All lattice squares containing a given vertex.
struct SquareList {
  std::array<Square, 6> items{};
  std::size_t n = 0;
  void push(const Square& s) { items[n++] = s; }
  const Square* begin() const { return items.data(); }
  const Square* end() const { return items.data() + n; }
  std::size_t size() const { return n; }
};

inline SquareList squares_containing(LatticePoint x) {
  SquareList out;
  switch (classify(x)) {
    case VertexKind::Center:
      for (auto o : kOrientations) out.push(square_at(x, o));
      break;
    case VertexKind::Corner:
      for (auto o : kOrientations) {
        LatticePoint c = x - corner_offset(o);
        if (on_lattice(c) && classify(c) == VertexKind::Center) out.push(square_at(c, o));
      }
      break;
    case VertexKind::Midpoint:
      for (auto c : neighbors(x)) {
        if (classify(c) != VertexKind::Center) continue;
        for (auto o : kOrientations) {
          auto m = midpoint_offsets(o);
          if (c + m[0] == x || c + m[1] == x) out.push(square_at(c, o));
        }
      }
      break;
  }
  return out;
}

// The two squares sharing a lattice edge.
inline std::array<Square, 2> squares_of_edge(const Edge& e) {
  std::array<Square, 2> out;
  std::size_t k = 0;
  for (const auto& s : squares_containing(e.u)) {
    for (const auto& f : s.edges())
      if (f == e) {
        if (k == 2) throw InvariantError("edge lies on more than two squares");
        out[k++] = s;
      }
  }
  if (k != 2) throw DomainError("not a lattice edge");
  return out;
}

// A kite is a square plus the tail continuing the center->corner direction
// by half its length.
struct Kite {
  Square square;
  LatticePoint root;  // the corner d
  LatticePoint tip;   // e = d + (d - b)/2
  Edge tail() const { return Edge(root, tip); }
  friend bool operator<(const Kite& x, const Kite& y) { return x.square < y.square; }
  friend bool operator==(const Kite& x, const Kite& y) { return x.square == y.square; }
};

inline Kite kite_of(const Square& s) {
  LatticePoint d = s.corner, b = s.center;
  LatticePoint half{(d.p - b.p) / 2, (d.q - b.q) / 2};
  return Kite{s, d, d + half};
}

// Flip of a kite: b' = b + (d-b)/2, d' = e, midpoints fixed. The result
// lives on the lattice translated by the shuffle vector of its pair.
inline Kite flip_kite(const Kite& k) {
  LatticePoint b = k.square.center, d = k.root;
  LatticePoint half{(d.p - b.p) / 2, (d.q - b.q) / 2};
  Square s{k.tip, b + half, {k.square.mids[1], k.square.mids[0]}, opposite(k.square.orientation)};
  LatticePoint d2 = s.corner, b2 = s.center;
  return Kite{s, d2, d2 + LatticePoint{(d2.p - b2.p) / 2, (d2.q - b2.q) / 2}};
}

// Translation that brings the flipped lattice back onto the standard one
// (subtract it). Depends on the pair and, for NE/SW, on the parity of n.
inline LatticePoint shuffle_shift(KitePair pair, int n) {
  if (pair == KitePair::NW_SE) return {0, 3};
  return (n % 2 != 0) ? LatticePoint{-3, -3} : LatticePoint{3, -3};
}

struct CellCoord {
  int i = 0;
  int j = 0;
  friend constexpr auto operator<=>(const CellCoord&, const CellCoord&) = default;
};

enum class CellParity { Standard, Reflected };

// Order-1 cell: three squares around a shared midpoint x.
//   standard  N: {N, NW} of x+(3,-3), SE of x+(-3,3)   (x of residue (3,3))
//   standard  S: NW of x+(3,-3), {S, SE} of x+(-3,3)   (180 degree turn)
//   reflected N: {N, NE} of x-(0,3), SW of x+(0,3)      (x of residue (0,3))
//   reflected S: NE of x-(0,3), {S, SW} of x+(0,3)
inline std::array<Square, 3> cell(LatticePoint x, CellParity parity, Orientation base) {
  if (base != Orientation::N && base != Orientation::S) throw DomainError("cell base must be N or S");
  int a = mod6(x.p), b = mod6(x.q);
  bool n = base == Orientation::N;
  using O = Orientation;
  if (parity == CellParity::Standard) {
    if (!(a == 3 && b == 3)) throw DomainError("standard cell needs a (3,3)-residue midpoint");
    LatticePoint lo = x + LatticePoint{3, -3}, hi = x + LatticePoint{-3, 3};
    if (n) return {square_at(lo, O::N), square_at(lo, O::NW), square_at(hi, O::SE)};
    return {square_at(lo, O::NW), square_at(hi, O::S), square_at(hi, O::SE)};
  }
  if (!(a == 0 && b == 3)) throw DomainError("reflected cell needs a (0,3)-residue midpoint");
  LatticePoint lo = x - LatticePoint{0, 3}, hi = x + LatticePoint{0, 3};
  if (n) return {square_at(lo, O::N), square_at(lo, O::NE), square_at(hi, O::SW)};
  return {square_at(lo, O::NE), square_at(hi, O::S), square_at(hi, O::SW)};
}

// Parity is forced by the residue of the shared midpoint.
inline CellParity cell_parity_at(LatticePoint x) {
  int a = mod6(x.p), b = mod6(x.q);
  if (a == 3 && b == 3) return CellParity::Standard;
  if (a == 0 && b == 3) return CellParity::Reflected;
  throw DomainError("no cell is centered at this point");
}

inline LatticePoint cell_center(LatticePoint anchor, CellCoord c) {
  return anchor + LatticePoint{3 * c.i - 3 * c.j, 6 * c.j};
}

}  // namespace dp3

template <>
struct std::hash<dp3::LatticePoint> : dp3::PointHash {};
template <>
struct std::hash<dp3::Edge> : dp3::EdgeHash {};
