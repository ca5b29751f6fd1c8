// Perfect matchings as edge bitsets over a diamond, with height functions,
// face flips and the lattice meet.
#pragma once

#include <boost/dynamic_bitset.hpp>
#include <deque>
#include <limits>
#include <memory>
#include <optional>
#include <vector>

#include "diamond.hpp"

namespace dp3 {

class Matching {
 public:
  Matching() = default;
  explicit Matching(std::shared_ptr<const Diamond> d) : d_(std::move(d)), bits_(d_->edges.size()) {}
  Matching(std::shared_ptr<const Diamond> d, boost::dynamic_bitset<> bits) : d_(std::move(d)), bits_(std::move(bits)) {
    if (bits_.size() != d_->edges.size()) throw PreconditionError("bitset size does not match the diamond");
  }

  // Throws DomainError if an edge is not in the diamond.
  static Matching from_edges(std::shared_ptr<const Diamond> d, const std::vector<Edge>& es) {
    Matching m(d);
    for (auto& e : es) {
      auto i = d->edge_index(e);
      if (!i) throw DomainError("edge is not in D_" + d->order.str());
      m.bits_.set(*i);
    }
    return m;
  }

  const Diamond& diamond() const { return *d_; }
  const std::shared_ptr<const Diamond>& diamond_ptr() const { return d_; }
  const boost::dynamic_bitset<>& bits() const { return bits_; }
  bool has(int edge) const { return bits_.test(edge); }
  void set(int edge, bool v = true) { bits_.set(edge, v); }
  std::size_t size() const { return bits_.count(); }

  std::vector<Edge> edge_list() const {
    std::vector<Edge> out;
    for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos; i = bits_.find_next(i))
      out.push_back(d_->edges[i]);
    return out;
  }

  // Vertex v of D not covered exactly once, if any.
  std::optional<int> defect() const {
    for (std::size_t v = 0; v < d_->vertices.size(); ++v) {
      int k = 0;
      for (int e : d_->incident(static_cast<int>(v))) k += bits_.test(e);
      if (k != 1) return static_cast<int>(v);
    }
    return std::nullopt;
  }
  bool is_perfect() const { return !defect(); }

  friend bool operator==(const Matching& x, const Matching& y) {
    return x.d_->order == y.d_->order && x.bits_ == y.bits_;
  }
  friend bool operator<(const Matching& x, const Matching& y) { return x.bits_ < y.bits_; }

 private:
  std::shared_ptr<const Diamond> d_;
  boost::dynamic_bitset<> bits_;
};

// Heights on faces of D (index < num_faces) and on the exterior ring.
// The ring face with the smallest (center, orientation) key is pinned to 0;
// ring values do not depend on the matching.
struct HeightFunction {
  std::vector<int> h;  // indexed by FaceId
  int at(FaceId f) const { return h[f]; }
  friend bool operator==(const HeightFunction&, const HeightFunction&) = default;
};

inline int increment(const Diamond& d, const boost::dynamic_bitset<>& bits, int e) {
  int w = d.edge_kinds[e] == EdgeKind::Long ? 1 : 2;
  return bits.test(e) ? w - 6 : w;
}

// Throws InvariantError if the increments are inconsistent (M not perfect).
inline HeightFunction height_function(const Matching& m) {
  const Diamond& d = m.diamond();
  if (!m.is_perfect()) throw InvariantError("height function needs a perfect matching");
  HeightFunction out;
  std::size_t nx = d.num_x_faces();
  if (nx == 0) return out;
  constexpr int unset = std::numeric_limits<int>::min();
  out.h.assign(nx, unset);
  FaceId base = static_cast<FaceId>(d.num_faces());  // ring is sorted; first is the smallest key
  out.h[base] = 0;
  std::deque<FaceId> q{base};
  while (!q.empty()) {
    FaceId f = q.front();
    q.pop_front();
    for (int e : d.face_edges[f]) {
      if (e < 0) continue;
      auto& du = d.dual[e];
      FaceId g = du.a == f ? du.b : du.a;
      int s = du.a == f ? du.sign_from_a : -du.sign_from_a;
      int val = out.h[f] + s * increment(d, m.bits(), e);
      if (out.h[g] == unset) {
        out.h[g] = val;
        q.push_back(g);
      } else if (out.h[g] != val) {
        throw InvariantError("height increments do not close up; matching is not perfect");
      }
    }
  }
  return out;
}

// Sum of signed increments on the dual loop around vertex v (0 when v is
// matched exactly once).
inline int dual_loop_sum(const Matching& m, int v) {
  const Diamond& d = m.diamond();
  int total = 0;
  for (int e : d.incident(v)) total += increment(d, m.bits(), e);
  // edges of the full lattice at v that lie outside D are unmatched
  LatticePoint x = d.vertices[v];
  for (auto y : neighbors(x))
    if (!d.edge_index(Edge(x, y))) total += edge_weight(Edge(x, y));
  return total;
}

// A face is flippable when exactly two opposite sides are matched.
inline bool flippable(const Matching& m, int f) {
  const Diamond& d = m.diamond();
  if (static_cast<std::size_t>(f) >= d.num_faces()) return false;
  auto& fe = d.face_edges[f];
  bool s0 = m.has(fe[0]), s1 = m.has(fe[1]), s2 = m.has(fe[2]), s3 = m.has(fe[3]);
  return (s0 && s2 && !s1 && !s3) || (s1 && s3 && !s0 && !s2);
}

// Change of h at f caused by flipping it.
inline int flip_delta(const Matching& m, int f) {
  const Diamond& d = m.diamond();
  for (int e : d.face_edges[f])
    if (m.has(e)) {
      auto& du = d.dual[e];
      int s = du.a == f ? du.sign_from_a : -du.sign_from_a;
      return -6 * s;
    }
  throw PreconditionError("face has no matched edge");
}

inline Matching apply_flip(const Matching& m, int f) {
  if (!flippable(m, f)) throw PreconditionError("face is not flippable");
  Matching out = m;
  for (int e : m.diamond().face_edges[f]) out.set(e, !m.has(e));
  return out;
}

inline std::vector<int> flippable_faces(const Matching& m) {
  std::vector<int> out;
  for (std::size_t f = 0; f < m.diamond().num_faces(); ++f)
    if (flippable(m, static_cast<int>(f))) out.push_back(static_cast<int>(f));
  return out;
}

// Flip downward until no face can go down.
inline Matching minimal_matching(Matching m) {
  if (!m.is_perfect()) throw PreconditionError("matching is not perfect");
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t f = 0; f < m.diamond().num_faces(); ++f)
      if (flippable(m, static_cast<int>(f)) && flip_delta(m, static_cast<int>(f)) < 0) {
        m = apply_flip(m, static_cast<int>(f));
        moved = true;
      }
  }
  return m;
}

// Matching whose height function is min(h1, h2). Each alternating cycle of
// M1 xor M2 is taken from whichever matching is lower beside it.
inline Matching meet(const Matching& m1, const Matching& m2) {
  const Diamond& d = m1.diamond();
  if (&d != &m2.diamond() && !(d.order == m2.diamond().order))
    throw PreconditionError("matchings live on different diamonds");
  auto h1 = height_function(m1), h2 = height_function(m2);
  auto diff = m1.bits() ^ m2.bits();
  Matching out(m1.diamond_ptr(), m1.bits() & m2.bits());
  std::vector<bool> seen(d.edges.size(), false);
  for (auto i = diff.find_first(); i != boost::dynamic_bitset<>::npos; i = diff.find_next(i)) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    std::vector<int> stack{static_cast<int>(i)};
    seen[i] = true;
    while (!stack.empty()) {
      int e = stack.back();
      stack.pop_back();
      cyc.push_back(e);
      for (LatticePoint x : {d.edges[e].u, d.edges[e].v})
        for (int g : d.incident(*d.vertex_index(x)))
          if (diff.test(g) && !seen[g]) {
            seen[g] = true;
            stack.push_back(g);
          }
    }
    auto& du = d.dual[i];
    int s = (h1.at(du.a) - h2.at(du.a)) + (h1.at(du.b) - h2.at(du.b));
    const Matching& pick = s < 0 ? m1 : m2;
    for (int e : cyc)
      if (pick.has(e)) out.set(e);
  }
  return out;
}

}  // namespace dp3
