// Laurent polynomials in a, b, c and the generating functions Z_m.
#pragma once

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "enumerate.hpp"

namespace dp3 {

using BigRational = boost::multiprecision::cpp_rational;

struct Monomial {
  std::array<int, 3> e{0, 0, 0};  // exponents of a, b, c
  int degree() const { return e[0] + e[1] + e[2]; }
  friend Monomial operator*(Monomial x, const Monomial& y) {
    for (int i = 0; i < 3; ++i) x.e[i] += y.e[i];
    return x;
  }
  Monomial inverse() const { return Monomial{{-e[0], -e[1], -e[2]}}; }
  Monomial pow(int k) const { return Monomial{{k * e[0], k * e[1], k * e[2]}}; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
  std::string str() const {
    static const char* names = "abc";
    std::string s;
    for (int i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += names[i];
      if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
  }
};

inline Monomial mono(int i, int j, int k) { return Monomial{{i, j, k}}; }

// Graded order: total degree first, then lexicographic with a > b > c.
struct GradedLex {
  bool operator()(const Monomial& x, const Monomial& y) const {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    return x.e > y.e;
  }
};

class LaurentPoly {
 public:
  using Terms = std::map<Monomial, BigInt, GradedLex>;

  LaurentPoly() = default;
  LaurentPoly(long c) {  // NOLINT: integers promote
    if (c != 0) t_[Monomial{}] = c;
  }
  static LaurentPoly term(const Monomial& m, const BigInt& c = 1) {
    LaurentPoly p;
    if (c != 0) p.t_[m] = c;
    return p;
  }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  BigInt coeff(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? BigInt(0) : it->second;
  }
  BigInt constant_term() const { return coeff(Monomial{}); }

  void add(const Monomial& m, const BigInt& c) {
    if (c == 0) return;
    auto& v = t_[m];
    v += c;
    if (v == 0) t_.erase(m);
  }

  friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) {
    for (auto& [m, c] : y.t_) x.add(m, c);
    return x;
  }
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
    LaurentPoly r;
    for (auto& [m1, c1] : x.t_)
      for (auto& [m2, c2] : y.t_) r.add(m1 * m2, c1 * c2);
    return r;
  }
  LaurentPoly pow(int k) const {
    if (k < 0) throw DomainError("negative power of a Laurent polynomial");
    LaurentPoly r = 1, base = *this;
    for (; k; k >>= 1) {
      if (k & 1) r = r * base;
      if (k > 1) base = base * base;
    }
    return r;
  }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // Replace a, b, c by the given Laurent monomials.
  LaurentPoly substitute(const std::array<Monomial, 3>& img) const {
    LaurentPoly r;
    for (auto& [m, c] : t_) r.add(img[0].pow(m.e[0]) * img[1].pow(m.e[1]) * img[2].pow(m.e[2]), c);
    return r;
  }

  BigInt at_ones() const {
    BigInt s = 0;
    for (auto& [m, c] : t_) s += c;
    return s;
  }

  BigRational evaluate(const std::array<BigInt, 3>& v) const {
    BigRational s = 0;
    for (auto& [m, c] : t_) {
      BigRational term = c;
      for (int i = 0; i < 3; ++i) {
        if (m.e[i] < 0 && v[i] == 0) throw DomainError("negative power of zero");
        BigRational p = 1;
        for (int k = 0; k < std::abs(m.e[i]); ++k) p *= BigRational(v[i]);
        if (m.e[i] >= 0) term *= p;
        else term /= p;
      }
      s += term;
    }
    return s;
  }

  // Componentwise minimum exponent, if it is itself a term.
  std::optional<Monomial> lowest_term() const {
    if (t_.empty()) return std::nullopt;
    Monomial lo = t_.begin()->first;
    for (auto& [m, c] : t_)
      for (int i = 0; i < 3; ++i) lo.e[i] = std::min(lo.e[i], m.e[i]);
    if (!t_.count(lo)) return std::nullopt;
    return lo;
  }

  std::string str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : t_) {
      BigInt a = c < 0 ? BigInt(-c) : c;
      os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
      first = false;
      bool unit = m == Monomial{};
      if (a != 1 || unit) os << a << (unit ? "" : "*");
      if (!unit) os << m.str();
    }
    return os.str();
  }

 private:
  Terms t_;
};

inline LaurentPoly one_plus(const Monomial& m) { return LaurentPoly(1) + LaurentPoly::term(m); }

// Product formula for Z_m.
inline LaurentPoly closed_form_Z(Order m) {
  int n = m.floor();
  LaurentPoly z = 1;
  if (m.is_integer()) {
    for (int i = 0; i < n; ++i)
      z = z * one_plus(mono(i, i, i + 1)).pow(n - i) * one_plus(mono(i, i + 1, i + 1)).pow(n - i);
  } else {
    for (int i = 0; i <= n; ++i) z = z * one_plus(mono(i + 1, i, i)).pow(n - i + 1);
    for (int i = 0; i < n; ++i) z = z * one_plus(mono(i + 1, i + 1, i)).pow(n - i);
  }
  return z;
}

inline bool verify_specialization(Order m) { return closed_form_Z(m).at_ones() == count_formula(m); }

struct RecurrenceCheck {
  bool holds = false;
  Monomial normalizer;  // K with lhs == K * rhs
  LaurentPoly lhs, rhs;
};

// lhs == K * rhs for the monomial K that makes rhs's lowest term 1.
inline RecurrenceCheck normalized_compare(LaurentPoly lhs, LaurentPoly rhs) {
  RecurrenceCheck r;
  auto lo = rhs.lowest_term();
  if (!lo || rhs.coeff(*lo) != 1) return r;
  r.normalizer = lo->inverse();
  r.holds = lhs == rhs * LaurentPoly::term(r.normalizer);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

// Z_{n+1/2}(x,y,z) = K' (1+x)^{n+1} Z_n(x, (zx)^-1, (yx)^-1)
inline RecurrenceCheck verify_half_step(int n) {
  auto rhs = one_plus(mono(1, 0, 0)).pow(n + 1) *
             closed_form_Z(Order::integer(n)).substitute({mono(1, 0, 0), mono(-1, 0, -1), mono(-1, -1, 0)});
  return normalized_compare(closed_form_Z(Order::half_past(n)), rhs);
}

// Z_{n+1}(x,y,z) = K'' (1+z)^{n+1} Z_{n+1/2}((yz)^-1, (xz)^-1, z)
inline RecurrenceCheck verify_integer_step(int n) {
  auto rhs = one_plus(mono(0, 0, 1)).pow(n + 1) *
             closed_form_Z(Order::half_past(n)).substitute({mono(0, -1, -1), mono(-1, 0, -1), mono(0, 0, 1)});
  return normalized_compare(closed_form_Z(Order::integer(n + 1)), rhs);
}

// Z_{n+1}(a,b,c) = (1+c)^{n+1} (1+q/a)^{n+1} Z_n(a/q, b, qc), q = abc.
inline RecurrenceCheck verify_combined_step(int n) {
  auto rhs = one_plus(mono(0, 0, 1)).pow(n + 1) * one_plus(mono(0, 1, 1)).pow(n + 1) *
             closed_form_Z(Order::integer(n)).substitute({mono(0, -1, -1), mono(0, 1, 0), mono(1, 1, 2)});
  return normalized_compare(closed_form_Z(Order::integer(n + 1)), rhs);
}

// Face weights: one Laurent monomial per orientation. A matching weighs
// prod_f mu(f)^{k_f}, k_f = (h(f) - h_min(f)) / 6.
struct WeightScheme {
  std::array<Monomial, 6> mu;
  const Monomial& operator[](Orientation o) const { return mu[static_cast<int>(o)]; }
  friend bool operator==(const WeightScheme&, const WeightScheme&) = default;
  std::string str() const {
    std::string s;
    for (auto o : kOrientations) s += std::string(s.empty() ? "" : ", ") + to_string(o) + "=" + (*this)[o].str();
    return s;
  }
};

inline WeightScheme orientation_pair_scheme() {
  WeightScheme w;
  w.mu[static_cast<int>(Orientation::NE)] = w.mu[static_cast<int>(Orientation::SW)] = mono(1, 0, 0);
  w.mu[static_cast<int>(Orientation::N)] = w.mu[static_cast<int>(Orientation::S)] = mono(0, 1, 0);
  w.mu[static_cast<int>(Orientation::NW)] = w.mu[static_cast<int>(Orientation::SE)] = mono(0, 0, 1);
  return w;
}

// Number of face flips above the minimal matching, summed per orientation.
inline std::array<int, 6> stacking_by_orientation(const Matching& m, const HeightFunction& hmin) {
  auto h = height_function(m);
  std::array<int, 6> k{};
  const Diamond& d = m.diamond();
  for (std::size_t f = 0; f < d.num_faces(); ++f) {
    int diff = h.at(static_cast<FaceId>(f)) - hmin.at(static_cast<FaceId>(f));
    if (diff < 0 || diff % 6 != 0) throw InvariantError("height below the minimum or off the 6Z grid");
    k[static_cast<int>(d.faces[f].square.orientation)] += diff / 6;
  }
  return k;
}

// Histogram of per-orientation stacking vectors over all perfect matchings.
inline std::map<std::array<int, 6>, BigInt> stacking_histogram(const std::shared_ptr<const Diamond>& d) {
  std::map<std::array<int, 6>, BigInt> out;
  auto all = enumerate_matchings(d);
  if (all.empty()) return out;
  auto hmin = height_function(minimal_matching(all.front()));
  for (auto& m : all) ++out[stacking_by_orientation(m, hmin)];
  return out;
}

inline LaurentPoly weighted_sum(const std::map<std::array<int, 6>, BigInt>& hist, const WeightScheme& w) {
  LaurentPoly z;
  for (auto& [k, c] : hist) {
    Monomial m;
    for (int o = 0; o < 6; ++o) m = m * w.mu[o].pow(k[o]);
    z.add(m, c);
  }
  return z;
}

inline LaurentPoly weighted_generating_function(const std::shared_ptr<const Diamond>& d, const WeightScheme& w) {
  if (d->order.twice == 0) return 1;
  return weighted_sum(stacking_histogram(d), w);
}

// All schemes with weights in {a, b, c, ab, ac, bc, abc} per orientation
// that reproduce closed_form_Z at every order 1/2 .. max_order.
inline std::vector<WeightScheme> derive_weight_schemes(Order max_order) {
  if (max_order.twice > 5) throw PreconditionError("weight scheme search is limited to order 5/2");
  std::vector<std::pair<std::map<std::array<int, 6>, BigInt>, LaurentPoly>> data;
  for (int t = 1; t <= max_order.twice; ++t)
    data.emplace_back(stacking_histogram(make_diamond(Order{t})), closed_form_Z(Order{t}));
  std::vector<Monomial> cands;
  for (int bits = 1; bits < 8; ++bits) cands.push_back(mono(bits & 1, (bits >> 1) & 1, (bits >> 2) & 1));
  std::vector<WeightScheme> out;
  std::array<int, 6> idx{};
  for (;;) {
    WeightScheme w;
    for (int o = 0; o < 6; ++o) w.mu[o] = cands[idx[o]];
    bool ok = true;
    for (auto& [hist, z] : data)
      if (!(weighted_sum(hist, w) == z)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(w);
    int o = 0;
    while (o < 6 && ++idx[o] == static_cast<int>(cands.size())) idx[o++] = 0;
    if (o == 6) break;
  }
  return out;
}

}  // namespace dp3
