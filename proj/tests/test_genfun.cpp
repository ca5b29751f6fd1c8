#include <gtest/gtest.h>

#include <dp3/genfun.hpp>

using namespace dp3;

namespace {

LaurentPoly m(int i, int j, int k) { return LaurentPoly::term(mono(i, j, k)); }

}  // namespace

TEST(Laurent, ProductAndPrinting) {
  auto p = one_plus(mono(0, 0, 1)) * one_plus(mono(0, 1, 1));
  EXPECT_EQ(p, LaurentPoly(1) + m(0, 0, 1) + m(0, 1, 1) + m(0, 1, 2));
  EXPECT_EQ(p.str(), "1 + c + b*c + b*c^2");
  EXPECT_EQ(LaurentPoly().str(), "0");
}

TEST(Laurent, GradedLexOrder) {
  auto p = m(0, 0, 2) + m(1, 0, 0) + m(0, 1, 0) + LaurentPoly(3) + m(2, 0, 0);
  EXPECT_EQ(p.str(), "3 + a + b + a^2 + c^2");
}

TEST(Laurent, Substitute) {
  std::array<Monomial, 3> img{mono(1, 0, 0), mono(-1, 0, -1), mono(-1, -1, 0)};
  EXPECT_EQ(m(1, 1, 1).substitute(img), m(-1, -1, -1));
}

TEST(Laurent, EvaluateAtOnes) {
  auto z = one_plus(mono(1, 0, 0)).pow(2) * one_plus(mono(1, 1, 0)) * one_plus(mono(2, 1, 1));
  EXPECT_EQ(z.at_ones(), 16);
  EXPECT_EQ(m(-1, 0, 0).evaluate({2, 1, 1}), BigRational(1, 2));
  EXPECT_THROW(m(-1, 0, 0).evaluate({0, 1, 1}), DomainError);
}

TEST(ClosedForm, SmallOrders) {
  EXPECT_EQ(closed_form_Z(Order{0}), LaurentPoly(1));
  EXPECT_EQ(closed_form_Z(Order{1}), one_plus(mono(1, 0, 0)));
  EXPECT_EQ(closed_form_Z(Order{2}), one_plus(mono(0, 0, 1)) * one_plus(mono(0, 1, 1)));
  EXPECT_EQ(closed_form_Z(Order{3}),
            one_plus(mono(1, 0, 0)).pow(2) * one_plus(mono(2, 1, 1)) * one_plus(mono(1, 1, 0)));
}

TEST(ClosedForm, Specialization) {
  EXPECT_EQ(closed_form_Z(Order{4}).at_ones(), 64);
  EXPECT_EQ(closed_form_Z(Order{5}).at_ones(), 512);
  EXPECT_EQ(closed_form_Z(Order{0}).at_ones(), 1);
  for (int t = 0; t <= 12; ++t) {
    EXPECT_TRUE(verify_specialization(Order{t}));
    EXPECT_EQ(closed_form_Z(Order{t}).constant_term(), 1);
  }
}

TEST(Recurrence, AllHoldForSmallN) {
  for (int n = 0; n <= 4; ++n) {
    EXPECT_TRUE(verify_half_step(n).holds) << n;
    EXPECT_TRUE(verify_integer_step(n).holds) << n;
    auto c = verify_combined_step(n);
    EXPECT_TRUE(c.holds) << n;
    EXPECT_EQ(c.normalizer, Monomial{}) << n;
  }
}

TEST(Recurrence, BaseCases) {
  auto r = verify_half_step(0);
  EXPECT_EQ(r.normalizer, Monomial{});
  auto c = verify_combined_step(0);
  EXPECT_EQ(c.rhs, closed_form_Z(Order{2}));
}

TEST(Weights, HalfOrderSingleFace) {
  auto w = orientation_pair_scheme();
  auto d = make_diamond(Order{1});
  ASSERT_EQ(d->faces.size(), 1u);
  EXPECT_EQ(weighted_generating_function(d, w), one_plus(mono(1, 0, 0)));
}

TEST(Weights, OrderOneProduct) {
  auto d = make_diamond(Order{2});
  EXPECT_EQ(weighted_generating_function(d, orientation_pair_scheme()), closed_form_Z(Order{2}));
}

TEST(Weights, EnumerationMatchesClosedForm) {
  for (int t = 1; t <= 5; ++t) {
    auto d = make_diamond(Order{t});
    EXPECT_EQ(weighted_generating_function(d, orientation_pair_scheme()), closed_form_Z(Order{t})) << t;
  }
}

TEST(Weights, SchemeIsUnique) {
  auto found = derive_weight_schemes(Order{5});
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].str(), orientation_pair_scheme().str());
}
