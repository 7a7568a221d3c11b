#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mixmoore/matrix.hpp"
#include "mixmoore/permutation.hpp"

namespace mixmoore {

using VertexPair = std::pair<int, int>;

/// Raised for structurally invalid graphs (self-loops, digons given as arcs,
/// duplicates, out-of-range vertices).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the MGF reader; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  [[nodiscard]] int line() const { return line_; }

 private:
  int line_;
};

/// A graph with undirected edges and directed arcs on vertices 0..n-1.
///
/// Invariants, checked on construction:
///  * no self-loops;
///  * a pair of opposite arcs (a digon) is never stored as arcs, only as one edge;
///  * without `allow_parallel_arcs`, arcs form a set and no arc lies on an edge.
/// Edges are stored as (u, v) with u < v; both lists are kept sorted.
class MixedGraph {
 public:
  MixedGraph() = default;
  MixedGraph(int n, std::vector<VertexPair> edges, std::vector<VertexPair> arcs,
             bool allow_parallel_arcs = false);

  [[nodiscard]] int order() const { return n_; }
  [[nodiscard]] const std::vector<VertexPair>& edges() const { return edges_; }
  [[nodiscard]] const std::vector<VertexPair>& arcs() const { return arcs_; }
  [[nodiscard]] bool allows_parallel_arcs() const { return allow_parallel_arcs_; }
  /// True when no arc is repeated and no arc coincides with an edge.
  [[nodiscard]] bool is_simple() const;

  /// Out-neighbourhood lists: edge partners plus arc heads, with multiplicity.
  [[nodiscard]] std::vector<std::vector<int>> out_neighbours() const;

  friend bool operator==(const MixedGraph& a, const MixedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.arcs_ == b.arcs_;
  }

 private:
  int n_ = 0;
  std::vector<VertexPair> edges_;
  std::vector<VertexPair> arcs_;
  bool allow_parallel_arcs_ = false;
};

struct ParseOptions {
  /// Replace each pair of opposite arcs by one edge instead of rejecting it.
  bool promote_digons = false;
  bool allow_parallel_arcs = false;
};

MixedGraph parse_mgf(std::istream& in, const ParseOptions& options = {});
MixedGraph parse_mgf_string(std::string_view text, const ParseOptions& options = {});
std::string to_mgf(const MixedGraph& g);
std::string to_dot(const MixedGraph& g, std::string_view name = "G");

/// Split of the adjacency matrix into its edge part R and arc part Z.
template <typename Scalar>
struct AdjacencySplit {
  Matrix<Scalar> edges;  // R, symmetric
  Matrix<Scalar> arcs;   // Z
  Matrix<Scalar> total;  // A = R + Z
};

template <typename Scalar = BigInt>
AdjacencySplit<Scalar> adjacency_split(const MixedGraph& g) {
  const int n = g.order();
  AdjacencySplit<Scalar> s{Matrix<Scalar>::Zero(n, n), Matrix<Scalar>::Zero(n, n), {}};
  for (const auto& [u, v] : g.edges()) {
    s.edges(u, v) = Scalar(1);
    s.edges(v, u) = Scalar(1);
  }
  for (const auto& [u, v] : g.arcs()) s.arcs(u, v) += Scalar(1);
  s.total = s.edges + s.arcs;
  return s;
}

template <typename Scalar = BigInt>
Matrix<Scalar> adjacency_matrix(const MixedGraph& g) {
  return adjacency_split<Scalar>(g).total;
}

/// R + Z + Z^T: the adjacency matrix of the underlying undirected multigraph.
template <typename Scalar = BigInt>
Matrix<Scalar> underlying_matrix(const MixedGraph& g) {
  auto s = adjacency_split<Scalar>(g);
  return s.edges + s.arcs + s.arcs.transpose();
}

/// Rebuilds a graph from a non-negative adjacency matrix with zero diagonal.
/// Each unordered pair gets min(M(u,v), M(v,u)) edges (at most one) and the
/// excess becomes arcs, which is the unique decomposition honouring the
/// digon rule.
MixedGraph from_adjacency(const CountMatrix& m, bool allow_parallel_arcs = false);

struct DegreeReport {
  std::vector<int> undirected;
  std::vector<int> out;
  std::vector<int> in;
  bool totally_regular = false;
  /// Set iff totally regular.
  std::optional<int> r;
  std::optional<int> z;
};

DegreeReport degree_report(const MixedGraph& g);

/// Reverses every arc; edges are unchanged.
MixedGraph converse(const MixedGraph& g);

/// The graph with vertex v renamed p(v).
MixedGraph relabel(const MixedGraph& g, const Permutation& p);

/// Builds the simple graph whose edges are the 2-cycles of `involution` and
/// whose arcs are u -> arc_map(u) (fixed points of arc_map contribute nothing).
MixedGraph from_permutations(const Permutation& involution, const Permutation& arc_map,
                             bool allow_parallel_arcs = false);

}  // namespace mixmoore
