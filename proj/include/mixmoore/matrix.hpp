#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "mixmoore/bigint.hpp"
#include "mixmoore/permutation.hpp"

namespace mixmoore {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Exact integer matrix; the carrier for adjacency matrices and their powers.
using IntMatrix = Matrix<BigInt>;
/// Machine-integer counterpart used on hot paths (search) where entries stay small.
using CountMatrix = Matrix<int>;

template <typename Scalar>
Matrix<Scalar> identity_matrix(Eigen::Index n) {
  return Matrix<Scalar>::Identity(n, n);
}

/// The all-ones matrix J.
template <typename Scalar>
Matrix<Scalar> ones_matrix(Eigen::Index n) {
  return Matrix<Scalar>::Constant(n, n, Scalar(1));
}

/// P with P(i, j) = 1 iff p(i) = j, so (P A)(i, j) = A(p(i), j).
template <typename Scalar>
Matrix<Scalar> permutation_matrix(const Permutation& p) {
  Matrix<Scalar> m = Matrix<Scalar>::Zero(p.size(), p.size());
  for (int i = 0; i < p.size(); ++i) m(i, p(i)) = Scalar(1);
  return m;
}

/// The permutation a 0/1 matrix represents, or nullopt when some row or
/// column does not contain exactly one 1.
template <typename Derived>
std::optional<Permutation> as_permutation(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) return std::nullopt;
  const Eigen::Index n = m.rows();
  std::vector<int> images(static_cast<std::size_t>(n), -1);
  std::vector<bool> column_hit(static_cast<std::size_t>(n), false);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const Scalar& x = m(i, j);
      if (x == Scalar(0)) continue;
      if (x != Scalar(1) || images[static_cast<std::size_t>(i)] != -1 ||
          column_hit[static_cast<std::size_t>(j)]) {
        return std::nullopt;
      }
      images[static_cast<std::size_t>(i)] = static_cast<int>(j);
      column_hit[static_cast<std::size_t>(j)] = true;
    }
    if (images[static_cast<std::size_t>(i)] == -1) return std::nullopt;
  }
  return Permutation(std::move(images));
}

template <typename Derived>
bool is_permutation_matrix(const Eigen::MatrixBase<Derived>& m) {
  return as_permutation(m).has_value();
}

template <typename Derived>
Matrix<typename Derived::Scalar> matrix_power(const Eigen::MatrixBase<Derived>& m, int exponent) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix_power: matrix is not square");
  if (exponent < 0) throw std::invalid_argument("matrix_power: negative exponent");
  Matrix<Scalar> result = identity_matrix<Scalar>(m.rows());
  Matrix<Scalar> base = m;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

/// I + M + M^2 + ... + M^k.
template <typename Derived>
Matrix<typename Derived::Scalar> power_sum(const Eigen::MatrixBase<Derived>& m, int k) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> term = identity_matrix<Scalar>(m.rows());
  Matrix<Scalar> sum = term;
  for (int i = 1; i <= k; ++i) {
    term = term * m;
    sum += term;
  }
  return sum;
}

template <typename DerivedA, typename DerivedB>
bool commutes(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  return (a * b).eval() == (b * a).eval();
}

/// Rows separated by newlines, entries by single spaces.
template <typename Derived>
std::string format_matrix(const Eigen::MatrixBase<Derived>& m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ' ';
      std::ostringstream cell;
      cell << m(i, j);
      out += cell.str();
    }
    out += '\n';
  }
  return out;
}

}  // namespace mixmoore
