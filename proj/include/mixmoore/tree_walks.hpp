#pragma once

#include <vector>

#include "mixmoore/matrix.hpp"
#include "mixmoore/mixed_graph.hpp"

namespace mixmoore {

/// Walk counts by length, restricted to walks that never traverse an edge
/// and immediately come back along it. These are the walks the Moore tree
/// enumerates, so in an almost Moore mixed graph of diameter k their total
/// over lengths 0..k is J + P.
///
/// With E_i / F_i the counts of such walks whose last step is an edge / an
/// arc, and D the diagonal matrix of undirected degrees:
///   E_0 = 0, F_0 = I, E_1 = R, F_1 = Z,
///   E_{i+1} = (E_i + F_i) R - E_{i-1} (D - I) - F_{i-1} D,
///   F_{i+1} = (E_i + F_i) Z.
/// The subtracted terms are exactly the immediate edge reversals.
template <typename Scalar>
std::vector<Matrix<Scalar>> tree_walk_counts(const AdjacencySplit<Scalar>& s, int k) {
  const Eigen::Index n = s.total.rows();
  Matrix<Scalar> degree = Matrix<Scalar>::Zero(n, n);
  for (Eigen::Index v = 0; v < n; ++v) degree(v, v) = s.edges.row(v).sum();
  const Matrix<Scalar> degree_less_one = degree - identity_matrix<Scalar>(n);

  std::vector<Matrix<Scalar>> counts;
  Matrix<Scalar> prev_e = Matrix<Scalar>::Zero(n, n);
  Matrix<Scalar> prev_f = identity_matrix<Scalar>(n);
  counts.push_back(prev_f);
  if (k == 0) return counts;
  Matrix<Scalar> e = s.edges;
  Matrix<Scalar> f = s.arcs;
  counts.push_back(e + f);
  for (int i = 1; i < k; ++i) {
    const Matrix<Scalar> all = e + f;
    Matrix<Scalar> next_e = all * s.edges - prev_e * degree_less_one - prev_f * degree;
    Matrix<Scalar> next_f = all * s.arcs;
    prev_e = std::move(e);
    prev_f = std::move(f);
    e = std::move(next_e);
    f = std::move(next_f);
    counts.push_back(e + f);
  }
  return counts;
}

/// Sum of tree_walk_counts over lengths 0..k.
template <typename Scalar>
Matrix<Scalar> tree_walk_total(const AdjacencySplit<Scalar>& s, int k) {
  const auto counts = tree_walk_counts(s, k);
  Matrix<Scalar> total = Matrix<Scalar>::Zero(s.total.rows(), s.total.cols());
  for (const auto& c : counts) total += c;
  return total;
}

}  // namespace mixmoore
