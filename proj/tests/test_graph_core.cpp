#include <gtest/gtest.h>

#include <random>

#include "mixmoore/bigint.hpp"
#include "mixmoore/constructions.hpp"
#include "mixmoore/distances.hpp"
#include "mixmoore/isomorphism.hpp"
#include "mixmoore/mixed_graph.hpp"
#include "mixmoore/spectra.hpp"
#include "oracles.hpp"

using namespace mixmoore;

namespace {

MixedGraph directed_cycle(int n) {
  std::vector<VertexPair> arcs;
  for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
  return MixedGraph(n, {}, arcs);
}

}  // namespace

TEST(BigInt, ArithmeticAndConversion) {
  const BigInt a("123456789012345678901234567890");
  const BigInt b = a * a;
  EXPECT_EQ(b / a, a);
  EXPECT_EQ((b + 1) % a, BigInt(1));
  EXPECT_EQ(BigInt(-7).sign(), -1);
  EXPECT_EQ(abs(BigInt(-7)), BigInt(7));
  EXPECT_EQ(BigInt(42).to_int64(), 42);
  EXPECT_THROW(static_cast<void>(b.to_int64()), std::overflow_error);
  EXPECT_LT(BigInt(-1), BigInt(0));
}

TEST(BigInt, LargeMatrixPowersStayExact) {
  const IntMatrix a = adjacency_matrix<BigInt>(complete_graph(6));
  // K6 adjacency is J - I; (J - I)^20 has entries ((5^20) +- 1) / 6 style values.
  const IntMatrix p = matrix_power(a, 20);
  const BigInt five20 = matrix_power(IntMatrix::Constant(1, 1, BigInt(5)), 20)(0, 0);
  EXPECT_EQ(p(0, 0), (five20 + 5) / 6);
  EXPECT_EQ(p(0, 1), (five20 - 1) / 6);
}

TEST(MixedGraph, EnforcesInvariants) {
  EXPECT_THROW(MixedGraph(2, {{0, 0}}, {}), GraphError);
  EXPECT_THROW(MixedGraph(2, {}, {{0, 2}}), GraphError);
  EXPECT_THROW(MixedGraph(2, {}, {{0, 1}, {1, 0}}), GraphError);
  EXPECT_THROW(MixedGraph(2, {{0, 1}, {1, 0}}, {}), GraphError);
  EXPECT_THROW(MixedGraph(2, {{0, 1}}, {{0, 1}}), GraphError);
  EXPECT_THROW(MixedGraph(2, {}, {{0, 1}, {0, 1}}), GraphError);
  EXPECT_NO_THROW(MixedGraph(2, {{0, 1}}, {{0, 1}}, true));
  EXPECT_NO_THROW(MixedGraph(2, {}, {{0, 1}, {0, 1}}, true));
  EXPECT_THROW(MixedGraph(2, {}, {{0, 1}, {1, 0}}, true), GraphError);
}

TEST(MixedGraph, ParsesSpecExamples) {
  const MixedGraph g = parse_mgf_string("n 2\nE 0 1\n");
  EXPECT_EQ(g.order(), 2);
  EXPECT_EQ(g.edges().size(), 1u);
  EXPECT_TRUE(g.arcs().empty());

  EXPECT_THROW(parse_mgf_string("n 2\nA 0 1\nA 1 0\n"), ParseError);

  ParseOptions promote;
  promote.promote_digons = true;
  const MixedGraph p = parse_mgf_string("n 2\nA 0 1\nA 1 0\n", promote);
  EXPECT_EQ(p.edges().size(), 1u);
  EXPECT_TRUE(p.arcs().empty());
}

TEST(MixedGraph, ParseErrorsCarryLineNumbers) {
  try {
    parse_mgf_string("# comment\nn 3\nE 0 1\nX 1 2\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
  }
  EXPECT_THROW(parse_mgf_string("E 0 1\n"), ParseError);
  EXPECT_THROW(parse_mgf_string("n 2\nE 0 2\n"), ParseError);
  EXPECT_THROW(parse_mgf_string("n 2\nE 1 1\n"), ParseError);
  EXPECT_THROW(parse_mgf_string("n 3\nE 0 1\nE 1 0\n"), ParseError);
  EXPECT_THROW(parse_mgf_string("n 3\nE 0 one\n"), ParseError);
  EXPECT_NO_THROW(parse_mgf_string("n 3 # header\n\nA 0 1   # arc\nA 1 2\n"));
}

TEST(MixedGraph, RoundTripOnRandomGraphs) {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> order(0, 12);
  for (int trial = 0; trial < 100; ++trial) {
    const bool parallel = trial % 4 == 3;
    const MixedGraph g = oracle::random_graph(rng, order(rng), parallel);
    ParseOptions options;
    options.allow_parallel_arcs = parallel;
    const MixedGraph back = parse_mgf_string(to_mgf(g), options);
    EXPECT_EQ(back, g) << to_mgf(g);
  }
}

TEST(MixedGraph, AdjacencySplit) {
  const auto s = adjacency_split<int>(MixedGraph(2, {{0, 1}}, {}));
  EXPECT_EQ(s.edges, (CountMatrix(2, 2) << 0, 1, 1, 0).finished());
  EXPECT_TRUE(s.arcs.isZero());

  const auto h1 = adjacency_split<int>(h_graph(1));
  EXPECT_EQ(h1.edges, permutation_matrix<int>(Permutation::parse_cycles(10, "(01)(23)(45)(67)(89)")));

  // H4 keeps an edge and a parallel arc on the pair (4, 5) apart.
  const auto h4 = adjacency_split<int>(h_graph(4));
  EXPECT_EQ(h4.edges(4, 5), 1);
  EXPECT_EQ(h4.arcs(4, 5), 1);
  EXPECT_EQ(h4.total(4, 5), 2);
  EXPECT_EQ(h4.total, CountMatrix(h4.edges + h4.arcs));
}

TEST(MixedGraph, AdjacencyInvariantsOnRandomGraphs) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const MixedGraph g = oracle::random_graph(rng, 9, trial % 2 == 1);
    const auto s = adjacency_split<int>(g);
    EXPECT_EQ(s.edges, CountMatrix(s.edges.transpose()));
    EXPECT_TRUE(s.total.diagonal().isZero());
    EXPECT_EQ(from_adjacency(s.total, g.allows_parallel_arcs()), g);
  }
}

TEST(MixedGraph, DegreeReportRequiresInDegreeToo) {
  // Out-degree 1 everywhere but in-degrees 0, 2, 1, 1.
  const MixedGraph g(4, {}, {{0, 1}, {1, 2}, {2, 3}, {3, 1}});
  EXPECT_FALSE(degree_report(g).totally_regular);
  const DegreeReport h = degree_report(h_graph(1));
  ASSERT_TRUE(h.totally_regular);
  EXPECT_EQ(*h.r, 1);
  EXPECT_EQ(*h.z, 1);
}

TEST(MixedGraph, ConverseAndUnderlying) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const MixedGraph g = oracle::random_graph(rng, 8);
    EXPECT_EQ(converse(converse(g)), g);
    EXPECT_EQ(distances(converse(g)).diameter, distances(g).diameter);
    EXPECT_EQ(char_poly(converse(g)), char_poly(g));
  }
  for (int i = 1; i <= 3; ++i) {
    EXPECT_TRUE(are_isomorphic(h_graph(i), converse(h_graph(i)))) << "H" << i;
    EXPECT_EQ(underlying_matrix<int>(h_graph(i)), underlying_matrix<int>(h_graph(1)));
  }
}

TEST(Distances, SpecExamples) {
  const DistanceData c3 = distances(directed_cycle(3));
  ASSERT_TRUE(c3.diameter.has_value());
  EXPECT_EQ(*c3.diameter, 2);
  EXPECT_DOUBLE_EQ(c3.average_distance, 1.0);
  EXPECT_EQ(*distances(h_graph(1)).diameter, 3);
  const MixedGraph lp = line_digraph(petersen_graph()).graph;
  EXPECT_EQ(lp.order(), 30);
  EXPECT_EQ(*distances(lp).diameter, 3);
}

TEST(Distances, DisconnectedGraphs) {
  const DistanceData d = distances(MixedGraph(3, {{0, 1}}, {}));
  EXPECT_FALSE(d.connected);
  EXPECT_FALSE(d.diameter.has_value());
  EXPECT_EQ(d.dist(0, 2), kUnreachable);
  EXPECT_TRUE(std::isnan(d.average_distance));
  const DistanceData one_way = distances(MixedGraph(2, {}, {{0, 1}}));
  EXPECT_FALSE(one_way.connected);
  EXPECT_EQ(one_way.dist(0, 1), 1);
  EXPECT_EQ(one_way.dist(1, 0), kUnreachable);
}

TEST(Distances, AgreeWithFloydWarshallAndLayersPartition) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const MixedGraph g = oracle::random_graph(rng, 10);
    const DistanceData d = distances(g);
    const auto f = oracle::floyd_distances(g);
    for (int u = 0; u < g.order(); ++u)
      for (int v = 0; v < g.order(); ++v) EXPECT_EQ(d.dist(u, v), f[u][v]);
    ASSERT_FALSE(d.layers.empty());
    EXPECT_EQ(d.layers[0], CountMatrix(CountMatrix::Identity(g.order(), g.order())));
    CountMatrix sum = CountMatrix::Zero(g.order(), g.order());
    for (const auto& layer : d.layers) sum += layer;
    for (int u = 0; u < g.order(); ++u)
      for (int v = 0; v < g.order(); ++v) EXPECT_EQ(sum(u, v), f[u][v] >= 0 ? 1 : 0);
  }
}

TEST(Isomorphism, SpecExamples) {
  const MixedGraph h1 = h_graph(1);
  const auto self = find_isomorphism(h1, h1);
  ASSERT_TRUE(self.has_value());
  EXPECT_TRUE(is_isomorphism(h1, h1, *self));
  EXPECT_FALSE(find_isomorphism(h1, h_graph(2)).has_value());
  const auto p = find_isomorphism(h_graph(4), h_graph(6));
  ASSERT_TRUE(p.has_value());
  EXPECT_TRUE(is_isomorphism(h_graph(4), h_graph(6), *p));
}

TEST(Isomorphism, OrderCap) {
  const MixedGraph big = cycle_graph(kMaxIsomorphismOrder + 1);
  EXPECT_THROW(find_isomorphism(big, big), OrderTooLarge);
  EXPECT_TRUE(are_isomorphic(big, big, 32));
}

TEST(Isomorphism, AgreesWithBruteForceAndIsSymmetric) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 5;
    const MixedGraph g = oracle::random_graph(rng, n);
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 0);
    std::shuffle(images.begin(), images.end(), rng);
    const MixedGraph relabelled = relabel(g, Permutation(images));
    const MixedGraph other = trial % 2 == 0 ? relabelled : oracle::random_graph(rng, n);
    const bool brute = oracle::brute_isomorphic(g, other);
    const auto forward = find_isomorphism(g, other);
    const auto backward = find_isomorphism(other, g);
    EXPECT_EQ(forward.has_value(), brute);
    EXPECT_EQ(backward.has_value(), brute);
    if (forward) {
      EXPECT_TRUE(is_isomorphism(g, other, *forward));
      EXPECT_TRUE(is_isomorphism(other, g, forward->inverse()));
    }
    EXPECT_EQ(canonical_form(g).code == canonical_form(other).code, brute);
  }
}

TEST(Isomorphism, CanonicalGraphIsLabelInvariant) {
  std::mt19937 rng(9);
  const MixedGraph g = h_graph(3);
  const MixedGraph c = canonical_graph(g);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<int> images(10);
    std::iota(images.begin(), images.end(), 0);
    std::shuffle(images.begin(), images.end(), rng);
    EXPECT_EQ(canonical_graph(relabel(g, Permutation(images))), c);
  }
}

TEST(Output, DotMarksEdgesUndirected) {
  const std::string dot = to_dot(MixedGraph(3, {{0, 1}}, {{1, 2}}), "T");
  EXPECT_NE(dot.find("0 -> 1 [dir=none]"), std::string::npos);
  EXPECT_NE(dot.find("1 -> 2"), std::string::npos);
  EXPECT_NE(dot.find("digraph T"), std::string::npos);
}
