#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mixmoore/matrix.hpp"
#include "mixmoore/mixed_graph.hpp"
#include "mixmoore/polynomial.hpp"

namespace mixmoore {

inline constexpr int kMaxSpectrumOrder = 64;

class SizeCapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Coefficients of det(xI - M), leading coefficient first, by Berkowitz's
/// division-free algorithm. Any commutative ring works as Scalar.
template <typename Derived>
std::vector<typename Derived::Scalar> berkowitz(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("berkowitz: matrix is not square");
  const Eigen::Index n = m.rows();
  if (n == 0) return {Scalar(1)};
  std::vector<Scalar> poly{Scalar(1), Scalar(-m(0, 0))};
  for (Eigen::Index r = 1; r < n; ++r) {
    const Matrix<Scalar> lead = m.topLeftCorner(r, r);
    const Matrix<Scalar> row = m.block(r, 0, 1, r);
    Matrix<Scalar> col = m.block(0, r, r, 1);
    // First column of the Toeplitz factor: 1, -a, -R C, -R M C, ..., -R M^(r-1) C.
    std::vector<Scalar> toeplitz{Scalar(1), Scalar(-m(r, r))};
    for (Eigen::Index i = 0; i < r; ++i) {
      toeplitz.push_back(-Scalar((row * col)(0, 0)));
      col = lead * col;
    }
    std::vector<Scalar> next(poly.size() + 1, Scalar(0));
    for (std::size_t i = 0; i < next.size(); ++i) {
      for (std::size_t j = 0; j <= i && j < poly.size(); ++j) next[i] += toeplitz[i - j] * poly[j];
    }
    poly = std::move(next);
  }
  return poly;
}

/// Exact characteristic polynomial det(xI - M). Throws SizeCapExceeded
/// beyond kMaxSpectrumOrder.
Polynomial char_poly(const IntMatrix& m);

/// Characteristic polynomial of the adjacency matrix.
Polynomial char_poly(const MixedGraph& g);

/// Equal characteristic polynomials; graphs of different order are not cospectral.
bool cospectral(const MixedGraph& g, const MixedGraph& h);

/// A spectrum written through integer factors: each irrational conjugate
/// pair appears as one quadratic factor.
struct SpectrumPattern {
  std::vector<std::pair<Polynomial, int>> factors;

  [[nodiscard]] Polynomial expand() const;
  [[nodiscard]] int degree() const;
  [[nodiscard]] std::string to_string() const;
};

/// (x - (1 + z)) x^a (x^2 + x - 1)^b with b = z + 1 and a = n - 1 - 2b,
/// n = (1 + z)^3 + (1 + z)^2 - (1 + z). The quadratic carries the pair
/// (-1 +- sqrt 5) / 2.
SpectrumPattern diameter3_pattern(int z);

/// char_poly(A) equals diameter3_pattern(z). False when the order does not fit.
bool matches_pattern(const MixedGraph& g, int z);

struct TraceReport {
  int n = 0;
  BigInt trace0;
  BigInt trace1;
  BigInt trace2;
  /// tr A = 0
  bool loopless = false;
  /// tr A^2 = n: exactly one closed 2-walk per vertex.
  bool one_closed_two_walk_per_vertex = false;
};

TraceReport trace_identities(const MixedGraph& g);

}  // namespace mixmoore
