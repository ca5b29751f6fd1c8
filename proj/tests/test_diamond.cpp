#include <gtest/gtest.h>

#include <queue>

#include <dp3/diamond.hpp>

using namespace dp3;

TEST(Order, Parse) {
  EXPECT_EQ(Order::parse("3").twice, 6);
  EXPECT_EQ(Order::parse("2.5").twice, 5);
  EXPECT_EQ(Order::parse("5/2").twice, 5);
  EXPECT_EQ(Order::parse("0").twice, 0);
  EXPECT_EQ(Order::parse("2.5").str(), "2.5");
  for (const char* bad : {"1.25", "-1", "x", "3/4", ""}) EXPECT_THROW(Order::parse(bad), DomainError) << bad;
}

TEST(Diamond, SmallShapes) {
  auto d0 = build_diamond(Order{0});
  EXPECT_TRUE(d0.vertices.empty());
  EXPECT_TRUE(d0.edges.empty());
  EXPECT_EQ(d0.strip_count(), 0u);

  auto dh = build_diamond(Order{1});
  EXPECT_EQ(dh.faces.size(), 1u);
  EXPECT_EQ(dh.vertices.size(), 4u);

  auto d1 = build_diamond(Order{2});
  EXPECT_EQ(d1.faces.size(), 3u);
  EXPECT_EQ(d1.vertices.size(), 8u);

  EXPECT_EQ(build_diamond(Order{4}).vertices.size(), 28u);
  EXPECT_EQ(build_diamond(Order{3}).vertices.size(), 18u);
}

TEST(Diamond, MatchingSize) {
  EXPECT_EQ(matching_size(Order{0}), 0);
  EXPECT_EQ(matching_size(Order{2}), 4);
  EXPECT_EQ(matching_size(Order{5}), 22);
  EXPECT_EQ(matching_size(Order{3}), 9);
}

TEST(Diamond, VertexCountIsTwiceMatchingSize) {
  for (int t = 0; t <= 14; ++t) {
    auto d = build_diamond(Order{t});
    EXPECT_EQ(static_cast<long>(d.vertices.size()), 2 * matching_size(Order{t})) << "order " << Order{t}.str();
  }
}

TEST(Diamond, StripCount) {
  for (int n = 1; n <= 6; ++n) {
    auto d = build_diamond(Order::integer(n));
    std::set<int> js;
    for (auto& f : d.faces) js.insert(f.cell.j);
    EXPECT_EQ(d.strip_count(), static_cast<std::size_t>(2 * n - 1));
    EXPECT_EQ(js.size(), d.strip_count());
  }
  auto d = build_diamond(Order{4});
  for (auto& f : d.faces)
    if (f.cell == CellCoord{0, 0}) EXPECT_EQ(f.cell.j, 0);
}

TEST(Diamond, InducedConnectedBalanced) {
  for (int t = 1; t <= 10; ++t) {
    auto d = build_diamond(Order{t});
    std::size_t deg = 0, black = 0;
    for (auto& v : d.vertices) {
      black += is_black(classify(v));
      for (auto w : neighbors(v)) deg += d.contains(w);
    }
    EXPECT_EQ(deg, 2 * d.edges.size());
    EXPECT_EQ(2 * black, d.vertices.size());
    std::vector<bool> seen(d.vertices.size());
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int e : d.incident(v)) {
        int w = *d.vertex_index(d.edges[e].u == d.vertices[v] ? d.edges[e].v : d.edges[e].u);
        if (!seen[w]) seen[w] = true, ++reached, q.push(w);
      }
    }
    EXPECT_EQ(reached, d.vertices.size());
  }
}

TEST(Diamond, SortedAndIndexed) {
  auto d = build_diamond(Order{5});
  EXPECT_TRUE(std::is_sorted(d.vertices.begin(), d.vertices.end()));
  EXPECT_TRUE(std::is_sorted(d.edges.begin(), d.edges.end()));
  for (std::size_t i = 0; i < d.edges.size(); ++i) EXPECT_EQ(d.edge_index(d.edges[i]), static_cast<int>(i));
  for (std::size_t i = 0; i < d.faces.size(); ++i) EXPECT_EQ(d.face_index(d.faces[i].square), static_cast<int>(i));
  EXPECT_FALSE(d.contains({600, 0}));
}

TEST(Diamond, RingSurroundsBoundary) {
  for (int t = 1; t <= 6; ++t) {
    auto d = build_diamond(Order{t});
    // every edge sees exactly two faces of D plus ring
    for (std::size_t e = 0; e < d.edges.size(); ++e) {
      auto sq = squares_of_edge(d.edges[e]);
      int in = 0;
      for (auto& s : sq) in += d.face_index(s).has_value();
      EXPECT_GE(in, 1);
      EXPECT_NE(d.dual[e].a, d.dual[e].b);
    }
  }
}
