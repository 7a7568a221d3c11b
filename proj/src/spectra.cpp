#include "mixmoore/spectra.hpp"

#include <algorithm>

namespace mixmoore {

Polynomial char_poly(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: matrix is not square");
  if (m.rows() > kMaxSpectrumOrder) {
    throw SizeCapExceeded("char_poly supports order <= " + std::to_string(kMaxSpectrumOrder) +
                          ", got " + std::to_string(m.rows()));
  }
  auto high_first = berkowitz(m);
  std::reverse(high_first.begin(), high_first.end());
  return Polynomial(std::move(high_first));
}

Polynomial char_poly(const MixedGraph& g) { return char_poly(adjacency_matrix<BigInt>(g)); }

bool cospectral(const MixedGraph& g, const MixedGraph& h) {
  if (g.order() != h.order()) return false;
  return char_poly(g) == char_poly(h);
}

Polynomial SpectrumPattern::expand() const {
  Polynomial out = Polynomial::constant(1);
  for (const auto& [factor, mult] : factors) out = out * factor.pow(mult);
  return out;
}

int SpectrumPattern::degree() const {
  int d = 0;
  for (const auto& [factor, mult] : factors) d += factor.degree() * mult;
  return d;
}

std::string SpectrumPattern::to_string() const {
  std::string out;
  for (const auto& [factor, mult] : factors) {
    if (mult == 0) continue;
    out += factor == Polynomial::monomial(1) ? "x" : "(" + factor.to_string() + ")";
    if (mult > 1) out += "^" + std::to_string(mult);
  }
  return out.empty() ? "1" : out;
}

SpectrumPattern diameter3_pattern(int z) {
  if (z < 1) throw std::domain_error("diameter3_pattern needs z >= 1");
  const int w = z + 1;
  const int n = w * w * w + w * w - w;
  const int b = w;
  const int a = n - 1 - 2 * b;
  SpectrumPattern p;
  p.factors.emplace_back(Polynomial::linear(w), 1);
  p.factors.emplace_back(Polynomial::monomial(1), a);
  p.factors.emplace_back(Polynomial({-1, 1, 1}), b);
  return p;
}

bool matches_pattern(const MixedGraph& g, int z) {
  const SpectrumPattern p = diameter3_pattern(z);
  if (g.order() != p.degree()) return false;
  return char_poly(g) == p.expand();
}

TraceReport trace_identities(const MixedGraph& g) {
  const IntMatrix a = adjacency_matrix<BigInt>(g);
  TraceReport t;
  t.n = g.order();
  t.trace0 = t.n;
  t.trace1 = a.trace();
  t.trace2 = (a * a).trace();
  t.loopless = t.trace1.is_zero();
  t.one_closed_two_walk_per_vertex = t.trace2 == BigInt(t.n);
  return t;
}

}  // namespace mixmoore
