#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include <dp3/lattice.hpp>

using namespace dp3;
using O = Orientation;

namespace {

double dist(LatticePoint x, LatticePoint y) {
  auto [x0, y0] = cartesian(x);
  auto [x1, y1] = cartesian(y);
  return std::hypot(x0 - x1, y0 - y1);
}

bool adjacent(LatticePoint x, LatticePoint y) {
  for (auto w : neighbors(x))
    if (w == y) return true;
  return false;
}

}  // namespace

TEST(Lattice, ClassifiesByResidue) {
  EXPECT_EQ(classify({0, 0}), VertexKind::Center);
  EXPECT_EQ(classify({3, 0}), VertexKind::Midpoint);
  EXPECT_EQ(classify({-2, 4}), VertexKind::Corner);
  EXPECT_THROW(classify({1, 0}), DomainError);
  EXPECT_NEAR(dist({0, 0}, {-2, 4}), 2.0 / std::sqrt(3.0), 1e-12);
}

TEST(Lattice, Degrees) {
  EXPECT_EQ(neighbors({0, 0}).size(), 6u);
  EXPECT_EQ(neighbors({3, 0}).size(), 4u);
  EXPECT_EQ(neighbors({-2, 4}).size(), 3u);
  EXPECT_EQ(neighbors({4, 4}).size(), 3u);
}

TEST(Lattice, EdgeLengthsAndBipartition) {
  for (int p = -12; p <= 12; ++p)
    for (int q = -12; q <= 12; ++q) {
      LatticePoint x{p, q};
      if (!on_lattice(x)) continue;
      for (auto y : neighbors(x)) {
        EXPECT_TRUE(adjacent(y, x));
        EXPECT_NE(is_black(classify(x)), is_black(classify(y)));
        double want = edge_kind(Edge(x, y)) == EdgeKind::Long ? 1.0 : 1.0 / std::sqrt(3.0);
        EXPECT_NEAR(dist(x, y), want, 1e-12);
      }
    }
}

TEST(Lattice, HeightChangeAroundCenterSumsToSix) {
  int sum = 0;
  for (auto y : neighbors({6, 0})) sum += edge_weight(Edge({6, 0}, y));
  EXPECT_EQ(sum, 6);
  EXPECT_EQ(edge_weight(Edge({0, 0}, {3, 0})), 1);
  EXPECT_EQ(edge_weight(Edge({3, 3}, {2, 2})), 2);
}

TEST(Lattice, SquareAtMatchesNeighbourStructure) {
  Square n = square_at({0, 0}, O::N);
  EXPECT_EQ(n.corner, (LatticePoint{-2, 4}));
  EXPECT_EQ((std::set<LatticePoint>{n.mids[0], n.mids[1]}), (std::set<LatticePoint>{{0, 3}, {-3, 3}}));
  Square nw = square_at({0, 0}, O::NW);
  EXPECT_EQ(nw.corner, (LatticePoint{-4, 2}));
  EXPECT_EQ((std::set<LatticePoint>{nw.mids[0], nw.mids[1]}), (std::set<LatticePoint>{{-3, 3}, {-3, 0}}));
  EXPECT_EQ(square_at({0, 0}, O::S).corner, (LatticePoint{2, -4}));
  for (int p = -6; p <= 6; p += 6)
    for (auto o : kOrientations) {
      Square s = square_at({p, 6}, o);
      for (auto& e : s.edges()) EXPECT_TRUE(adjacent(e.u, e.v));
      // counterclockwise polygon: positive shoelace area
      auto poly = s.polygon();
      double area = 0;
      for (int k = 0; k < 4; ++k) {
        auto [x0, y0] = cartesian(poly[k]);
        auto [x1, y1] = cartesian(poly[(k + 1) % 4]);
        area += x0 * y1 - x1 * y0;
      }
      EXPECT_GT(area, 0);
    }
}

TEST(Lattice, EveryEdgeBordersTwoSquares) {
  for (auto y : neighbors({0, 0})) {
    auto sq = squares_of_edge(Edge({0, 0}, y));
    EXPECT_FALSE(sq[0] == sq[1]);
  }
  for (auto y : neighbors({2, 2})) squares_of_edge(Edge({2, 2}, y));
}

TEST(Lattice, KiteTail) {
  Kite k = kite_of(square_at({0, 0}, O::N));
  EXPECT_EQ(k.tail(), Edge({-2, 4}, {-3, 6}));
  EXPECT_EQ(classify(k.tip), VertexKind::Midpoint);
  EXPECT_TRUE(adjacent(k.root, k.tip));
  for (auto& m : k.square.mids) EXPECT_NE(m, k.tip);
  auto [x, y] = cartesian(k.tip - k.root);
  EXPECT_GT(y, 0);
  EXPECT_NEAR(x, 0, 1e-12);
  auto [xs, ys] = cartesian(kite_of(square_at({0, 0}, O::S)).tip - LatticePoint{2, -4});
  EXPECT_LT(ys, 0);
  EXPECT_NEAR(xs, 0, 1e-12);
}

TEST(Lattice, FlippedKiteIsTranslatedLattice) {
  for (auto o : {O::NE, O::SE, O::SW, O::NW}) {
    Kite k = kite_of(square_at({6, 0}, o));
    Kite f = flip_kite(k);
    EXPECT_EQ(f.square.orientation, opposite(o));
    KitePair pair = in_pair(o, KitePair::NE_SW) ? KitePair::NE_SW : KitePair::NW_SE;
    // same midpoints, and after undoing the shift the flipped kite is a lattice kite
    EXPECT_EQ(f.square.a(), k.square.a());
    EXPECT_EQ(f.square.c(), k.square.c());
    for (int n : {0, 1}) {
      LatticePoint t = shuffle_shift(pair, n);
      LatticePoint c = f.square.center - t;
      ASSERT_TRUE(on_lattice(c));
      ASSERT_EQ(classify(c), VertexKind::Center);
      Square back = square_at(c, f.square.orientation);
      EXPECT_EQ(back.corner, f.square.corner - t);
      EXPECT_EQ((std::set<LatticePoint>{back.mids[0], back.mids[1]}),
                (std::set<LatticePoint>{f.square.mids[0] - t, f.square.mids[1] - t}));
    }
  }
  EXPECT_EQ(flip_kite(kite_of(square_at({0, 0}, O::N))).square.orientation, O::S);
}

TEST(Lattice, StandardNorthCell) {
  auto c = cell({-3, 3}, CellParity::Standard, O::N);
  std::set<Square> want{square_at({0, 0}, O::N), square_at({0, 0}, O::NW), square_at({-6, 6}, O::SE)};
  EXPECT_EQ(std::set<Square>(c.begin(), c.end()), want);
  std::set<LatticePoint> verts;
  for (auto& s : c) {
    for (auto v : s.polygon()) verts.insert(v);
    EXPECT_TRUE(s.mids[0] == LatticePoint(-3, 3) || s.mids[1] == LatticePoint(-3, 3));
  }
  EXPECT_EQ(verts.size(), 8u);
}

TEST(Lattice, CellsTranslateAndRotate) {
  LatticePoint x{-3, 3};
  auto base = cell(x, CellParity::Standard, O::N);
  // parity alternates along a strip row; T(1,1) is a pure vertical shift
  EXPECT_EQ(cell_parity_at(cell_center(x, {0, 1})), CellParity::Reflected);
  LatticePoint y = cell_center(x, {1, 1});
  EXPECT_EQ(y - x, (LatticePoint{0, 6}));
  EXPECT_EQ(cell_parity_at(y), CellParity::Standard);
  auto moved = cell(y, CellParity::Standard, O::N);
  for (int k = 0; k < 3; ++k) EXPECT_EQ(moved[k].center, base[k].center + (y - x));
  // South cell is the 180 degree turn about the shared midpoint
  std::set<LatticePoint> n_pts, s_pts;
  for (auto& s : base)
    for (auto v : s.polygon()) n_pts.insert(LatticePoint{2 * x.p, 2 * x.q} - v);
  for (auto& s : cell(x, CellParity::Standard, O::S))
    for (auto v : s.polygon()) s_pts.insert(v);
  EXPECT_EQ(n_pts, s_pts);
  EXPECT_THROW(cell({0, 3}, CellParity::Standard, O::N), DomainError);
  EXPECT_EQ(cell({0, 3}, CellParity::Reflected, O::N).size(), 3u);
}
