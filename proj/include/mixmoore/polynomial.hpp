#pragma once

#include <string>
#include <vector>

#include "mixmoore/bigint.hpp"

namespace mixmoore {

/// Dense univariate polynomial with integer coefficients, lowest degree first.
/// Trailing zero coefficients are trimmed, so the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> coefficients);

  static Polynomial constant(const BigInt& c);
  /// x - root
  static Polynomial linear(const BigInt& root);
  static Polynomial monomial(int degree);

  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] const std::vector<BigInt>& coefficients() const { return coeffs_; }
  [[nodiscard]] BigInt coefficient(int i) const;
  [[nodiscard]] bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == BigInt(1); }

  [[nodiscard]] BigInt evaluate(const BigInt& x) const;
  [[nodiscard]] Polynomial pow(int e) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// "x^3 - 2x + 1" style.
  [[nodiscard]] std::string to_string() const;
  /// Coefficients from the leading one down, space separated.
  [[nodiscard]] std::string coefficient_list() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

}  // namespace mixmoore
