// Domino shuffling D_m -> D_{m+1/2} and the uniform sampler built on it.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "matching.hpp"

namespace dp3 {

enum class KiteCase { Creation, Short, Long, Annihilation };

inline const char* to_string(KiteCase c) {
  switch (c) {
    case KiteCase::Creation: return "creation";
    case KiteCase::Short: return "short";
    case KiteCase::Long: return "long";
    case KiteCase::Annihilation: return "annihilation";
  }
  return "?";
}

inline KitePair active_pair(Order m) { return m.is_integer() ? KitePair::NE_SW : KitePair::NW_SE; }

// Kites of the active pair whose square shares an edge with D_m, sorted
// by (center, orientation); these are the faces and ring squares of that
// pair. D_0 has the single kite NE at the origin.
inline std::vector<Kite> active_kites(const Diamond& d) {
  if (d.order.twice == 0) return {kite_of(square_at({0, 0}, Orientation::NE))};
  KitePair pair = active_pair(d.order);
  std::vector<Kite> out;
  for (auto& f : d.faces)
    if (in_pair(f.square.orientation, pair)) out.push_back(kite_of(f.square));
  for (auto& s : d.ring)
    if (in_pair(s.orientation, pair)) out.push_back(kite_of(s));
  std::sort(out.begin(), out.end());
  return out;
}

// splitmix64 finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-mode bits: the k-th creation of the step leaving order m reads a
// bit determined by (seed, 2m, k) alone.
struct BitSource {
  std::uint64_t seed = 0;
  bool operator()(int step_twice, std::size_t k) const {
    std::uint64_t h = mix64(seed ^ mix64(static_cast<std::uint64_t>(step_twice) * 0x100000001b3ULL + k));
    return (h >> 63) != 0;
  }
};

// Explicit bits, used for exhaustive runs; missing bits read as 0.
struct FixedBits {
  std::vector<bool> bits;
  bool operator()(int, std::size_t k) const { return k < bits.size() && bits[k]; }
};

struct KiteRecord {
  Kite kite;
  KiteCase kind;
  std::optional<bool> bit;  // creations only
};

struct ShuffleTrace {
  Order order_before;
  Order order_after;
  std::vector<KiteRecord> kites;
  int tails_added = 0;
  int creations = 0;
  int annihilations = 0;
};

// Rewrites each active kite, shifts the result back onto the standard
// lattice and checks it is a perfect matching of D_{m+1/2}.
template <class Bits>
Matching shuffle(const Matching& in, const std::shared_ptr<const Diamond>& next, const Bits& bits,
                 ShuffleTrace* trace = nullptr) {
  const Diamond& d = in.diamond();
  if (!(next->order == d.order.next())) throw PreconditionError("target diamond has the wrong order");
  if (!in.is_perfect()) throw PreconditionError("input is not a perfect matching of D_" + d.order.str());

  auto kites = active_kites(d);
  ShuffleTrace tr{d.order, next->order, {}, 0, 0, 0};
  // edges of D covered by some kite; matched edges outside all kites survive
  std::vector<bool> in_kite(d.edges.size(), false);
  std::vector<bool> tail_added(kites.size(), false);
  for (std::size_t i = 0; i < kites.size(); ++i) {
    auto& k = kites[i];
    if (!d.contains(k.root)) {
      if (d.contains(k.tip)) throw InvariantError("tail tip lies inside the diamond");
      tail_added[i] = true;
      ++tr.tails_added;
    }
    for (auto& e : k.square.edges())
      if (auto j = d.edge_index(e)) in_kite[*j] = true;
    if (auto j = d.edge_index(k.tail())) in_kite[*j] = true;
  }
  auto matched = [&](const Edge& e) {
    auto j = d.edge_index(e);
    return j && in.has(*j);
  };

  LatticePoint t = shuffle_shift(active_pair(d.order), d.order.floor());
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(matching_size(next->order)));
  auto emit = [&](LatticePoint x, LatticePoint y) { out.emplace_back(x - t, y - t); };
  std::size_t ncre = 0;
  for (std::size_t i = 0; i < kites.size(); ++i) {
    auto& k = kites[i];
    LatticePoint a = k.square.a(), b = k.square.center, c = k.square.c(), dd = k.root;
    LatticePoint b2 = b + LatticePoint{(dd.p - b.p) / 2, (dd.q - b.q) / 2}, d2 = k.tip;
    bool T = tail_added[i] || matched(k.tail()), ad = matched(Edge(a, dd)), cd = matched(Edge(c, dd)),
         ab = matched(Edge(a, b)), bc = matched(Edge(b, c));
    int cnt = T + ad + cd + ab + bc;
    KiteRecord rec{k, KiteCase::Short, std::nullopt};
    if (T && cnt == 1) {
      bool bit = bits(d.order.twice, ncre++);
      if (bit) {
        emit(a, b2);
        emit(c, d2);
      } else {
        emit(a, d2);
        emit(c, b2);
      }
      rec.kind = KiteCase::Creation;
      rec.bit = bit;
      ++tr.creations;
    } else if (cnt == 1 && ad) {
      emit(b2, c);
    } else if (cnt == 1 && cd) {
      emit(a, b2);
    } else if (T && cnt == 2 && bc) {
      emit(a, d2);
      emit(b, b2);
      rec.kind = KiteCase::Long;
    } else if (T && cnt == 2 && ab) {
      emit(c, d2);
      emit(b, b2);
      rec.kind = KiteCase::Long;
    } else if (!T && cnt == 2 && ((ad && bc) || (cd && ab))) {
      emit(b, b2);
      rec.kind = KiteCase::Annihilation;
      ++tr.annihilations;
    } else {
      throw InvariantError("kite in an impossible state");
    }
    tr.kites.push_back(rec);
  }
  for (std::size_t j = 0; j < d.edges.size(); ++j)
    if (in.has(static_cast<int>(j)) && !in_kite[j]) emit(d.edges[j].u, d.edges[j].v);

  std::sort(out.begin(), out.end());
  Matching res(next);
  for (auto& e : out) {
    auto i = next->edge_index(e);
    if (!i) throw InvariantError("shuffled edge falls outside D_" + next->order.str());
    if (res.has(*i)) throw InvariantError("shuffled edge produced twice");
    res.set(*i);
  }
  if (!res.is_perfect()) throw InvariantError("shuffle output is not a perfect matching");
  if (trace) *trace = std::move(tr);
  return res;
}

template <class Bits>
Matching shuffle(const Matching& in, const Bits& bits, ShuffleTrace* trace = nullptr) {
  return shuffle(in, make_diamond(in.diamond().order.next()), bits, trace);
}

using TraceSink = std::function<void(const ShuffleTrace&)>;

// Diamonds D_0 .. D_m, built once and shared between trajectories.
inline std::vector<std::shared_ptr<const Diamond>> diamond_chain(Order m) {
  std::vector<std::shared_ptr<const Diamond>> out;
  for (int t = 0; t <= m.twice; ++t) out.push_back(make_diamond(Order{t}));
  return out;
}

template <class Bits>
Matching run_shuffles(const std::vector<std::shared_ptr<const Diamond>>& chain, Order m, const Bits& bits,
                      const TraceSink& sink = {}) {
  if (static_cast<int>(chain.size()) <= m.twice) throw PreconditionError("diamond chain too short");
  Matching cur(chain[0]);
  for (int t = 0; t < m.twice; ++t) {
    ShuffleTrace tr;
    cur = shuffle(cur, chain[t + 1], bits, sink ? &tr : nullptr);
    if (sink) sink(tr);
  }
  return cur;
}

// Uniform random perfect matching of D_m, reproducible from the seed.
inline Matching sample(Order m, std::uint64_t seed, const TraceSink& sink = {}) {
  BitSource bits{seed};
  Matching cur(make_diamond(Order{0}));
  for (int t = 0; t < m.twice; ++t) {
    ShuffleTrace tr;
    cur = shuffle(cur, make_diamond(Order{t + 1}), bits, sink ? &tr : nullptr);
    if (sink) sink(tr);
  }
  return cur;
}

}  // namespace dp3
