// Counting perfect matchings: closed form, backtracking, Kasteleyn.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <vector>

#include "matching.hpp"

namespace dp3 {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(unsigned long e) {
  BigInt r = 1;
  r <<= e;
  return r;
}

// 2^{n(n+1)} for m = n, 2^{(n+1)^2} for m = n + 1/2.
inline BigInt count_formula(Order m) {
  unsigned long n = static_cast<unsigned long>(m.floor());
  return m.is_integer() ? pow2(n * (n + 1)) : pow2((n + 1) * (n + 1));
}

struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Backtracking on the lowest uncovered vertex. Each vertex that still has
// an uncovered neighbour must keep one, otherwise the branch is cut.
class MatchingSearch {
 public:
  explicit MatchingSearch(std::shared_ptr<const Diamond> d, std::uint64_t node_limit = 50'000'000)
      : d_(std::move(d)), limit_(node_limit) {
    const Diamond& D = *d_;
    adj_.resize(D.vertices.size());
    for (std::size_t v = 0; v < D.vertices.size(); ++v)
      for (int e : D.incident(static_cast<int>(v))) {
        auto& ed = D.edges[e];
        int w = *D.vertex_index(ed.u == D.vertices[v] ? ed.v : ed.u);
        adj_[v].push_back({w, e});
      }
  }

  // Calls visit for every perfect matching (as a matching on the diamond).
  void for_each(const std::function<void(const Matching&)>& visit) {
    covered_.assign(d_->vertices.size(), false);
    cur_ = Matching(d_);
    nodes_ = 0;
    if (d_->vertices.size() % 2 != 0) return;
    rec(0, visit);
  }

  BigInt count() {
    BigInt n = 0;
    for_each([&](const Matching&) { ++n; });
    return n;
  }

  std::vector<Matching> list(std::size_t max_results = 1u << 20) {
    std::vector<Matching> out;
    for_each([&](const Matching& m) {
      if (out.size() >= max_results) throw ResourceLimit("too many matchings to list");
      out.push_back(m);
    });
    return out;
  }

 private:
  struct Arc {
    int to, edge;
  };
  std::shared_ptr<const Diamond> d_;
  std::vector<std::vector<Arc>> adj_;
  std::vector<bool> covered_;
  Matching cur_;
  std::uint64_t limit_, nodes_ = 0;

  bool stranded(int v) const {
    if (covered_[v]) return false;
    for (auto& a : adj_[v])
      if (!covered_[a.to]) return false;
    return true;
  }

  void rec(std::size_t start, const std::function<void(const Matching&)>& visit) {
    if (++nodes_ > limit_) throw ResourceLimit("backtracking node limit exceeded");
    std::size_t v = start;
    while (v < covered_.size() && covered_[v]) ++v;
    if (v == covered_.size()) {
      visit(cur_);
      return;
    }
    covered_[v] = true;
    for (auto& a : adj_[v]) {
      if (covered_[a.to]) continue;
      covered_[a.to] = true;
      bool dead = false;
      for (int x : {static_cast<int>(v), a.to})
        for (auto& b : adj_[x])
          if (stranded(b.to)) dead = true;
      if (!dead) {
        cur_.set(a.edge);
        rec(v + 1, visit);
        cur_.set(a.edge, false);
      }
      covered_[a.to] = false;
    }
    covered_[v] = false;
  }
};

inline BigInt brute_force_count(const std::shared_ptr<const Diamond>& d, std::uint64_t node_limit = 50'000'000) {
  return MatchingSearch(d, node_limit).count();
}

inline std::vector<Matching> enumerate_matchings(const std::shared_ptr<const Diamond>& d,
                                                 std::size_t max_results = 1u << 20) {
  return MatchingSearch(d).list(max_results);
}

// Edge signs with an odd number of -1 on every face boundary.
inline std::vector<int> kasteleyn_signs(const Diamond& d) {
  std::size_t ne = d.edges.size();
  std::vector<int> sign(ne, 0);
  if (ne == 0) return sign;
  // spanning tree edges get +1
  std::vector<int> parent(d.vertices.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (std::size_t e = 0; e < ne; ++e) {
    int a = find(*d.vertex_index(d.edges[e].u)), b = find(*d.vertex_index(d.edges[e].v));
    if (a != b) {
      parent[a] = b;
      sign[e] = 1;
    }
  }
  // remaining edges: repeatedly settle a face with one unsigned edge
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t f = 0; f < d.num_faces(); ++f) {
      int unset = -1, count = 0, neg = 0;
      for (int e : d.face_edges[f]) {
        if (sign[e] == 0) unset = e, ++count;
        else if (sign[e] < 0) ++neg;
      }
      if (count == 1) {
        sign[unset] = (neg % 2 == 0) ? -1 : 1;
        progress = true;
      }
    }
  }
  for (int s : sign)
    if (s == 0) throw InvariantError("Kasteleyn sweep left an edge unsigned");
  return sign;
}

// Fraction-free Gaussian elimination with row pivoting.
inline BigInt bareiss_determinant(std::vector<std::vector<BigInt>> a) {
  std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sgn = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sgn * a[n - 1][n - 1];
}

struct KasteleynResult {
  BigInt count;
  bool balanced = true;
};

inline KasteleynResult kasteleyn_count(const Diamond& d) {
  std::vector<int> black, white;
  std::vector<int> pos(d.vertices.size(), -1);
  for (std::size_t v = 0; v < d.vertices.size(); ++v) {
    auto& side = is_black(classify(d.vertices[v])) ? black : white;
    pos[v] = static_cast<int>(side.size());
    side.push_back(static_cast<int>(v));
  }
  if (black.size() != white.size()) return {0, false};
  auto sign = kasteleyn_signs(d);
  std::vector<std::vector<BigInt>> k(black.size(), std::vector<BigInt>(white.size(), 0));
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    int u = *d.vertex_index(d.edges[e].black()), w = *d.vertex_index(d.edges[e].white());
    k[pos[u]][pos[w]] = sign[e];
  }
  BigInt det = bareiss_determinant(std::move(k));
  return {det < 0 ? BigInt(-det) : det, true};
}

}  // namespace dp3
