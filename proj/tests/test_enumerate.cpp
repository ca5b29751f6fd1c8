#include <gtest/gtest.h>

#include <dp3/enumerate.hpp>

using namespace dp3;

TEST(Count, ClosedForm) {
  EXPECT_EQ(count_formula(Order{0}), 1);
  EXPECT_EQ(count_formula(Order{2}), 4);
  EXPECT_EQ(count_formula(Order{6}), 4096);
  EXPECT_EQ(count_formula(Order{1}), 2);
  EXPECT_EQ(count_formula(Order{5}), 512);
  EXPECT_EQ(count_formula(Order{200}), BigInt(1) << 10100);
}

TEST(Count, Backtracking) {
  EXPECT_EQ(brute_force_count(make_diamond(Order{0})), 1);
  EXPECT_EQ(brute_force_count(make_diamond(Order{2})), 4);
  EXPECT_EQ(brute_force_count(make_diamond(Order{3})), 16);
  EXPECT_EQ(brute_force_count(make_diamond(Order{6})), 4096);
}

TEST(Count, ListedMatchingsAreDistinctAndPerfect) {
  auto all = enumerate_matchings(make_diamond(Order{4}));
  ASSERT_EQ(all.size(), 64u);
  std::set<boost::dynamic_bitset<>> s;
  for (auto& m : all) {
    EXPECT_TRUE(m.is_perfect());
    s.insert(m.bits());
  }
  EXPECT_EQ(s.size(), all.size());
}

TEST(Count, ResourceLimitIsExplicit) {
  EXPECT_THROW(brute_force_count(make_diamond(Order{6}), 100), ResourceLimit);
  EXPECT_THROW(enumerate_matchings(make_diamond(Order{5}), 10), ResourceLimit);
}

TEST(Count, Kasteleyn) {
  EXPECT_EQ(kasteleyn_count(build_diamond(Order{1})).count, 2);
  EXPECT_EQ(kasteleyn_count(build_diamond(Order{4})).count, 64);
  EXPECT_EQ(kasteleyn_count(build_diamond(Order{8})).count, BigInt(1) << 20);
}

TEST(Count, KasteleynSignsAreOddOnFaces) {
  for (int t = 1; t <= 8; ++t) {
    auto d = build_diamond(Order{t});
    auto s = kasteleyn_signs(d);
    for (std::size_t f = 0; f < d.num_faces(); ++f) {
      int neg = 0;
      for (int e : d.face_edges[f]) neg += s[e] < 0;
      EXPECT_EQ(neg % 2, 1);
    }
  }
}

TEST(Count, KasteleynUnbalanced) {
  auto d = build_diamond(Order{2});
  auto fs = d.faces;
  fs.pop_back();
  auto r = kasteleyn_count(Diamond::from_faces(Order{2}, fs));
  if (!r.balanced) EXPECT_EQ(r.count, 0);
}

TEST(Count, ThreeWayAgreement) {
  for (int t = 1; t <= 6; ++t) {
    auto d = make_diamond(Order{t});
    BigInt f = count_formula(Order{t});
    EXPECT_EQ(brute_force_count(d), f);
    EXPECT_EQ(kasteleyn_count(*d).count, f);
  }
}

TEST(Count, Bareiss) {
  std::vector<std::vector<BigInt>> a{{0, 2, 1}, {3, 0, 4}, {1, 5, 6}};
  // cofactor expansion: 0*(0-20) - 2*(18-4) + 1*(15-0)
  EXPECT_EQ(bareiss_determinant(a), -13);
}
