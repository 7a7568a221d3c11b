#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mixmoore/matrix.hpp"
#include "mixmoore/mixed_graph.hpp"
#include "mixmoore/permutation.hpp"

namespace mixmoore {

class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Vertex i of a line digraph stands for the arc arcs[i] of the source
/// digraph, where each source edge counts as two opposite arcs.
struct LineDigraphMap {
  std::vector<VertexPair> arcs;
  /// Some source vertex has out-degree 0 (its in-arcs become sinks).
  bool source_has_sinks = false;

  [[nodiscard]] std::string label(int vertex) const;
};

struct LineDigraph {
  MixedGraph graph;
  LineDigraphMap map;
};

/// L(G) of G read as a digraph. Opposite arc pairs of the result are stored
/// as edges. Requires a graph without parallel arcs.
LineDigraph line_digraph(const MixedGraph& g);

MixedGraph cycle_graph(int n);
MixedGraph complete_graph(int n);
MixedGraph complete_bipartite_graph(int m, int n);
MixedGraph petersen_graph();
MixedGraph hoffman_singleton_graph();
/// Pentagonal prism on 0..9: even and odd vertices form the two pentagons,
/// 2i joined to 2i + 1.
MixedGraph pentagonal_prism();
/// Kautz digraph K(d, k) as the (k-1)-fold line digraph of K_{d+1}.
MixedGraph kautz_graph(int d, int k = 2);
/// Cayley graph of the dihedral group of order 10 with edge generator s
/// and arc generator r. Element r^a s^b is vertex a + 5b.
MixedGraph cayley_d5();
/// The (2,1,2)-almost Moore mixed graph on 10 vertices: pentagon 0..4 and
/// pentagram 5..9 with arcs i -> 5 + (i - 1) and 5 + i -> i - 1 (mod 5).
MixedGraph almost_moore_212();

/// Permutation data of the graphs H1, H2, H3 on vertices 0..9.
struct HPermutations {
  Permutation sigma;
  Permutation rho;
  Permutation omega;
};

/// Index 0 holds H1.
const std::array<HPermutations, 3>& h_permutations();

/// R (edges from rho), Z (arcs u -> omega(u)) and P (sigma) of H_i, i = 1..3.
CountMatrix h_edge_matrix(int i);
CountMatrix h_arc_matrix(int i);
CountMatrix h_sigma_matrix(int i);
/// Adjacency matrix of H_i, i = 1..7.
CountMatrix h_adjacency(int i);
/// H_i as a mixed graph; H4..H7 carry arcs parallel to edges or arcs.
MixedGraph h_graph(int i);

/// Named constructor used by the command line:
///   cycle N | complete N | complete_bipartite M N | petersen | hoffman_singleton |
///   prism | kautz D [K] | cayley_d5 | H I | almost_moore_212
MixedGraph family(std::string_view name, const std::vector<int>& params = {});
std::vector<std::string> family_names();

struct CheckItem {
  std::string name;
  bool held = false;
};

struct CheckReport {
  std::vector<CheckItem> items;

  void add(std::string name, bool held) { items.push_back({std::move(name), held}); }
  [[nodiscard]] bool all_held() const;
  [[nodiscard]] std::string to_string() const;
};

/// Matrix identities among the H-graph permutation matrices, their spectra,
/// and the isomorphisms H4 ~ H6 ~ H7, H4 !~ H5.
CheckReport lemma_rzp_suite();

/// Integer expressions placing every H_i in the adjacency algebra:
/// P_i = R_1 + Z_1 - Z_i and R_i = P_i^T + Z_1 - Z_i.
CheckReport algebra_membership();

struct LineDigraphMetrics {
  int delta = 0;
  int n = 0;
  int k = 0;
  std::int64_t distance_sum = 0;
  int n_line = 0;
  int k_line = 0;
  std::int64_t distance_sum_line = 0;
  double average = 0.0;
  double average_line = 0.0;
  bool order_ok = false;
  bool diameter_ok = false;
  /// Decided exactly from the integer distance sums.
  bool average_ok = false;

  [[nodiscard]] bool all_ok() const { return order_ok && diameter_ok && average_ok; }
};

/// Order, diameter and mean distance of G and L(G). G must be a strongly
/// connected delta-regular digraph (after expanding edges) with delta > 1.
LineDigraphMetrics line_digraph_metrics(const MixedGraph& g);

}  // namespace mixmoore
