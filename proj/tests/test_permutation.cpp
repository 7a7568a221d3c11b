#include <gtest/gtest.h>

#include "mixmoore/matrix.hpp"
#include "mixmoore/permutation.hpp"

using namespace mixmoore;

TEST(Permutation, RejectsNonBijection) {
  EXPECT_THROW(Permutation({0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 3, 1}), std::invalid_argument);
  EXPECT_NO_THROW(Permutation({2, 0, 1}));
}

TEST(Permutation, ParsesCompactAndSeparatedCycles) {
  const auto p = Permutation::parse_cycles(10, "(01)(23)(4675)(89)");
  EXPECT_EQ(p(4), 6);
  EXPECT_EQ(p(6), 7);
  EXPECT_EQ(p(7), 5);
  EXPECT_EQ(p(5), 4);
  EXPECT_EQ(p(8), 9);
  const auto q = Permutation::parse_cycles(12, "(0 11)(10 1)");
  EXPECT_EQ(q(0), 11);
  EXPECT_EQ(q(10), 1);
  EXPECT_EQ(q(5), 5);
  EXPECT_THROW(Permutation::parse_cycles(4, "(01)(12)"), std::invalid_argument);
  EXPECT_THROW(Permutation::parse_cycles(4, "(05)"), std::invalid_argument);
}

TEST(Permutation, CycleStructureCountsCyclesByLength) {
  const auto p = Permutation::parse_cycles(10, "(23)(4675)(8019)");
  const auto m = p.cycle_structure();
  ASSERT_EQ(m.size(), 11u);
  EXPECT_EQ(m[2], 1);
  EXPECT_EQ(m[4], 2);
  int total = 0;
  for (std::size_t i = 0; i < m.size(); ++i) total += static_cast<int>(i) * m[i];
  EXPECT_EQ(total, 10);
  EXPECT_EQ(format_cycle_structure(m), "m2=1 m4=2");
  EXPECT_EQ(p.to_cycle_string(), "(0198)(23)(4675)");
}

TEST(Permutation, FixedPointsAndIdentity) {
  const auto id = Permutation::identity(4);
  EXPECT_TRUE(id.is_identity());
  EXPECT_EQ(id.to_cycle_string(), "()");
  EXPECT_EQ(id.fixed_points().size(), 4u);
  const auto p = Permutation::parse_cycles(5, "(13)");
  EXPECT_EQ(p.fixed_points(), (std::vector<int>{0, 2, 4}));
  EXPECT_TRUE(p.is_involution());
}

TEST(Permutation, CompositionAndInverse) {
  const auto p = Permutation::parse_cycles(5, "(01234)");
  const auto q = Permutation::parse_cycles(5, "(01)");
  EXPECT_EQ((p * q)(0), p(q(0)));
  EXPECT_TRUE((p * p.inverse()).is_identity());
  EXPECT_TRUE((p.inverse() * p).is_identity());
}

TEST(Permutation, MatrixRoundTrip) {
  const auto p = Permutation::parse_cycles(6, "(024)(15)");
  const auto m = permutation_matrix<int>(p);
  EXPECT_EQ(m(0, 2), 1);
  EXPECT_EQ(m(2, 0), 0);
  const auto back = as_permutation(m);
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(*back, p);
  CountMatrix bad = m;
  bad(0, 0) = 1;
  EXPECT_FALSE(as_permutation(bad).has_value());
}

TEST(Permutation, LargeOrderStringsUseSeparators) {
  const auto p = Permutation::parse_cycles(12, "(0 11 10)");
  EXPECT_EQ(p.to_cycle_string(), "(0 11 10)");
  EXPECT_EQ(Permutation::parse_cycles(12, p.to_cycle_string()), p);
}
