#include <gtest/gtest.h>

#include <random>

#include "mixmoore/constructions.hpp"
#include "mixmoore/distances.hpp"
#include "mixmoore/verify.hpp"
#include "oracles.hpp"

using namespace mixmoore;

namespace {

bool equation(const AlmostMooreReport& rep, const std::string& id) {
  for (const auto& e : rep.equations)
    if (e.id == id) return e.held;
  ADD_FAILURE() << "missing equation " << id;
  return false;
}

std::vector<MixedGraph> zoo_up_to_12() {
  std::vector<MixedGraph> zoo;
  for (int n = 3; n <= 12; ++n) zoo.push_back(cycle_graph(n));
  for (int n = 2; n <= 6; ++n) zoo.push_back(complete_graph(n));
  zoo.push_back(complete_bipartite_graph(3, 3));
  zoo.push_back(petersen_graph());
  zoo.push_back(pentagonal_prism());
  zoo.push_back(kautz_graph(2));
  zoo.push_back(kautz_graph(3));
  zoo.push_back(cayley_d5());
  zoo.push_back(almost_moore_212());
  for (int i = 1; i <= 3; ++i) zoo.push_back(h_graph(i));
  for (int n = 3; n <= 6; ++n) zoo.push_back(line_digraph(cycle_graph(n)).graph);
  zoo.push_back(line_digraph(complete_graph(3)).graph);
  zoo.push_back(line_digraph(complete_graph(4)).graph);
  std::mt19937 rng(17);
  const std::vector<MixedGraph> base = zoo;
  for (const MixedGraph& g : base) {
    std::vector<int> images(static_cast<std::size_t>(g.order()));
    std::iota(images.begin(), images.end(), 0);
    std::shuffle(images.begin(), images.end(), rng);
    zoo.push_back(relabel(g, Permutation(images)));
  }
  return zoo;
}

}  // namespace

TEST(Verify, H1) {
  const auto rep = verify_almost_moore(h_graph(1), 3);
  ASSERT_TRUE(rep.almost_moore()) << rep.failure;
  EXPECT_EQ(rep.repeat->to_cycle_string(), "(01)(23)(45)(67)(89)");
  EXPECT_EQ(format_cycle_structure(rep.cycle_structure), "m2=5");
  EXPECT_FALSE(rep.sigma_is_automorphism);
  EXPECT_TRUE(equation(rep, "A^2+A^3=J+Z+P"));
  EXPECT_TRUE(equation(rep, "-A+A^2+A^3=J"));
  EXPECT_TRUE(selfrepeats(rep).empty());
  EXPECT_FALSE(contradicts_selfrepeat_corollary(rep));
}

TEST(Verify, H2AndH3) {
  const auto r2 = verify_almost_moore(h_graph(2), 3);
  ASSERT_TRUE(r2.almost_moore()) << r2.failure;
  EXPECT_EQ(format_cycle_structure(r2.cycle_structure), "m2=3 m4=1");
  EXPECT_FALSE(r2.sigma_is_automorphism);
  EXPECT_TRUE(equation(r2, "A^2+A^3=J+Z+P"));
  EXPECT_FALSE(equation(r2, "-A+A^2+A^3=J"));

  const auto r3 = verify_almost_moore(h_graph(3), 3);
  ASSERT_TRUE(r3.almost_moore()) << r3.failure;
  EXPECT_EQ(*r3.repeat, Permutation::parse_cycles(10, "(23)(4675)(8019)"));
  EXPECT_EQ(format_cycle_structure(r3.cycle_structure), "m2=1 m4=2");
  EXPECT_FALSE(r3.sigma_is_automorphism);
  EXPECT_TRUE(equation(r3, "A^2+A^3=J+Z+P"));
  EXPECT_FALSE(equation(r3, "-A+A^2+A^3=J"));
  EXPECT_TRUE(selfrepeats(r3).empty());
}

TEST(Verify, DiameterThreeInvariants) {
  for (int i = 1; i <= 3; ++i) {
    const MixedGraph g = h_graph(i);
    const Diameter3Check c = check_eq_diameter3(g);
    EXPECT_TRUE(c.held);
    EXPECT_TRUE(c.tree_walk_identities_held);
    EXPECT_TRUE(c.distance_split_held);
    ASSERT_TRUE(c.repeat.has_value());
    EXPECT_FALSE(c.repeat->is_identity());
    EXPECT_FALSE(is_automorphism(g, *c.repeat));
    const IntMatrix a = adjacency_matrix<BigInt>(g);
    const IntMatrix p = permutation_matrix<BigInt>(*c.repeat);
    EXPECT_NE(IntMatrix(a * p), IntMatrix(p * a));
  }
}

TEST(Verify, Graph212) {
  const MixedGraph g = almost_moore_212();
  const auto rep = verify_almost_moore(g, 2);
  ASSERT_TRUE(rep.almost_moore()) << rep.failure;
  EXPECT_EQ(rep.repeat->to_cycle_string(), "(03142)(58697)");
  EXPECT_EQ(format_cycle_structure(rep.cycle_structure), "m5=2");
  EXPECT_TRUE(rep.sigma_is_automorphism);

  const Diameter2Check c = check_eq_diameter2(g);
  EXPECT_TRUE(c.held);
  EXPECT_EQ(c.repeat, rep.repeat);
  // Both sides of the diameter-2 equation have row sums n + r + 1.
  const IntMatrix w = power_sum(adjacency_matrix<BigInt>(g), 2);
  for (Eigen::Index i = 0; i < w.rows(); ++i) EXPECT_EQ(w.row(i).sum(), BigInt(10 + 2 + 1));
}

TEST(Verify, PreconditionsAndFailureStages) {
  EXPECT_THROW(check_eq_diameter2(complete_graph(3)), PreconditionError);
  EXPECT_THROW(check_eq_diameter3(almost_moore_212()), PreconditionError);

  const MixedGraph lc7 = line_digraph(cycle_graph(7)).graph;
  EXPECT_EQ(lc7.order(), 14);
  EXPECT_EQ(*distances(lc7).diameter, 4);
  EXPECT_THROW(check_eq_diameter3(lc7), PreconditionError);

  EXPECT_EQ(verify_almost_moore(MixedGraph(3, {{0, 1}}, {}), 2).stage, VerifyStage::kRegularity);
  EXPECT_EQ(verify_almost_moore(petersen_graph(), 2).stage, VerifyStage::kOrder);
  EXPECT_EQ(verify_almost_moore(h_graph(4), 3).stage, VerifyStage::kSimple);
  EXPECT_THROW(is_automorphism(h_graph(1), Permutation::identity(3)), std::invalid_argument);
  EXPECT_TRUE(is_automorphism(h_graph(1), Permutation::identity(10)));
}

TEST(Verify, SelfrepeatCorollaryFlag) {
  AlmostMooreReport fake = verify_almost_moore(h_graph(1), 3);
  fake.repeat = Permutation::identity(10);
  fake.cycle_structure = fake.repeat->cycle_structure();
  EXPECT_EQ(selfrepeats(fake).size(), 10u);
  EXPECT_TRUE(contradicts_selfrepeat_corollary(fake));
}

TEST(Verify, RepeatsAgreeWithWalkOracle) {
  int compared = 0;
  for (const MixedGraph& g : zoo_up_to_12()) {
    ASSERT_LE(g.order(), 12);
    for (int k = 2; k <= 4; ++k) {
      const RepeatExtraction ex = extract_repeats(g, k);
      const bool reached_equation =
          ex.repeat.has_value() || ex.failed_stage == VerifyStage::kEquation ||
          ex.failed_stage == VerifyStage::kDiameter;
      if (!reached_equation) continue;
      ++compared;
      const auto walked = oracle::repeats_from_walks(g, k);
      ASSERT_EQ(ex.repeat.has_value(), walked.has_value()) << to_mgf(g) << "k=" << k;
      if (walked) EXPECT_EQ(ex.repeat->images(), *walked);
    }
  }
  EXPECT_GE(compared, 8);
}

TEST(Verify, ExhaustiveSmallCasesAgreeWithWalkOracle) {
  for (const auto& g : oracle::brute_census(1, 1, 2, 5, false)) {
    const auto rep = verify_almost_moore(g, 2);
    ASSERT_TRUE(rep.almost_moore());
    EXPECT_EQ(rep.repeat->images(), *oracle::repeats_from_walks(g, 2));
  }
}

TEST(Verify, MooreGraphs) {
  EXPECT_TRUE(is_moore_mixed_graph(kautz_graph(3), 2));
  EXPECT_TRUE(is_moore_mixed_graph(petersen_graph(), 2));
  EXPECT_TRUE(is_moore_mixed_graph(hoffman_singleton_graph(), 2));
  EXPECT_FALSE(is_moore_mixed_graph(h_graph(1), 3));
  EXPECT_FALSE(is_moore_mixed_graph(h_graph(4), 3));
}

TEST(Verify, ReportFormats) {
  const auto rep = verify_almost_moore(h_graph(1), 3);
  const std::string text = format_report(rep);
  EXPECT_NE(text.find("(01)(23)(45)(67)(89)"), std::string::npos);
  const std::string kv = format_report_kv(rep);
  EXPECT_NE(kv.find("equation[A^2+A^3=J+Z+P]=held"), std::string::npos);
}
