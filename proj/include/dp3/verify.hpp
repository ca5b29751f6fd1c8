// Invariant suite run by `dp3 verify`.
#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "genfun.hpp"
#include "io.hpp"

namespace dp3 {

struct CheckResult {
  std::string name;
  std::string order;
  bool pass = false;
  std::string detail;
};

// Pushes every perfect matching of D_m through one shuffle with every
// creation bit pattern. Each output collects weight 2^-creations from
// each way of reaching it, i.e. its probability times |PM(D_m)|.
inline std::map<boost::dynamic_bitset<>, BigRational> exhaust_shuffle(const std::shared_ptr<const Diamond>& d,
                                                                      const std::shared_ptr<const Diamond>& next) {
  std::map<boost::dynamic_bitset<>, BigRational> hits;
  for (auto& m : enumerate_matchings(d)) {
    ShuffleTrace tr;
    shuffle(m, next, FixedBits{}, &tr);
    int c = tr.creations;
    BigRational w(1, BigInt(1) << c);
    for (long mask = 0; mask < (1L << c); ++mask) {
      FixedBits fb;
      for (int k = 0; k < c; ++k) fb.bits.push_back((mask >> k) & 1);
      hits[shuffle(m, next, fb).bits()] += w;
    }
  }
  return hits;
}

inline std::vector<CheckResult> run_verify(Order max_order) {
  std::vector<CheckResult> out;
  auto check = [&](const std::string& name, Order m, const std::function<std::string()>& body) {
    CheckResult r{name, m.str(), false, {}};
    try {
      r.detail = body();
      r.pass = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(r));
  };
  for (int t = 0; t <= max_order.twice; ++t) {
    Order m{t};
    auto d = make_diamond(m);
    check("vertex_count", m, [&]() -> std::string {
      long want = 2 * matching_size(m);
      return static_cast<long>(d->vertices.size()) == want ? "" : "got " + std::to_string(d->vertices.size());
    });
    check("induced_subgraph", m, [&]() -> std::string {
      std::size_t n = 0;
      for (auto& v : d->vertices)
        for (auto w : neighbors(v))
          if (d->contains(w)) ++n;
      return n == 2 * d->edges.size() ? "" : "an edge between diamond vertices is missing";
    });
    check("json_round_trip", m, [&]() -> std::string {
      auto back = diamond_from_json(json::parse(diamond_to_json(*d).dump()));
      return diamond_to_json(back) == diamond_to_json(*d) ? "" : "round trip changed the diamond";
    });
    check("counts_agree", m, [&]() -> std::string {
      BigInt f = count_formula(m);
      if (t <= 7 && brute_force_count(d) != f) return "backtracking disagrees with the closed form";
      if (t <= 10 && kasteleyn_count(*d).count != f) return "Kasteleyn determinant disagrees with the closed form";
      return "";
    });
    check("z_specialization", m, [&]() -> std::string {
      auto z = closed_form_Z(m);
      if (z.constant_term() != 1) return "constant term is not 1";
      return verify_specialization(m) ? "" : "Z(1,1,1) differs from the count";
    });
    if (t <= 5)
      check("heights_and_flips", m, [&]() -> std::string {
        for (auto& mm : enumerate_matchings(d)) {
          auto h = height_function(mm);
          for (std::size_t v = 0; v < d->vertices.size(); ++v)
            if (dual_loop_sum(mm, static_cast<int>(v)) != 0) return "nonzero dual loop sum";
          for (int f : flippable_faces(mm)) {
            auto h2 = height_function(apply_flip(mm, f));
            for (std::size_t g = 0; g < h.h.size(); ++g)
              if ((static_cast<int>(g) == f) != (h.h[g] != h2.h[g])) return "flip changed a height away from its face";
            if (std::abs(h2.h[f] - h.h[f]) != 6) return "flip changed height by other than 6";
          }
        }
        return "";
      });
    if (t <= 4)
      check("meet_is_min", m, [&]() -> std::string {
        auto all = enumerate_matchings(d);
        for (auto& a : all)
          for (auto& b : all) {
            auto ha = height_function(a), hb = height_function(b), hm = height_function(meet(a, b));
            for (std::size_t f = 0; f < ha.h.size(); ++f)
              if (hm.h[f] != std::min(ha.h[f], hb.h[f])) return "meet height differs from the pointwise min";
          }
        return "";
      });
    if (t <= 3)
      check("shuffle_counting_identity", m, [&]() -> std::string {
        auto next = make_diamond(m.next());
        auto hits = exhaust_shuffle(d, next);
        BigInt before = brute_force_count(d), after = brute_force_count(next);
        if (after != (BigInt(1) << (m.floor() + 1)) * before) return "|PM| ratio is not 2^{n+1}";
        if (BigInt(hits.size()) != after) return "shuffle does not reach every matching of the next diamond";
        for (auto& [k, w] : hits)
          if (w != hits.begin()->second) return "outputs are not equally likely";
        return "";
      });
    if (t >= 1 && t <= 5)
      check("weighted_enumeration", m, [&]() -> std::string {
        return weighted_generating_function(d, orientation_pair_scheme()) == closed_form_Z(m)
                   ? ""
                   : "weighted sum differs from Z";
      });
    if (t <= 20)
      check("sample_trajectory", m, [&]() -> std::string {
        std::string err;
        Matching s = sample(m, 12345, [&](const ShuffleTrace& tr) {
          int n = tr.order_before.floor();
          if (tr.tails_added != 2 * n + 1) err = "tails added != 2n+1";
          if (tr.creations - tr.annihilations != n + 1) err = "creations - annihilations != n+1";
        });
        if (!err.empty()) return err;
        return static_cast<long>(s.size()) == matching_size(m) && s.is_perfect() ? "" : "sample is not perfect";
      });
  }
  for (int n = 0; n <= max_order.floor(); ++n) {
    check("half_step_recurrence", Order::integer(n), [&]() -> std::string {
      return verify_half_step(n).holds ? "" : "does not hold";
    });
    check("integer_step_recurrence", Order::integer(n), [&]() -> std::string {
      return verify_integer_step(n).holds ? "" : "does not hold";
    });
    check("combined_recurrence", Order::integer(n), [&]() -> std::string {
      auto r = verify_combined_step(n);
      return r.holds && r.normalizer == Monomial{} ? "" : "does not hold without a normalizing monomial";
    });
  }
  return out;
}

}  // namespace dp3
