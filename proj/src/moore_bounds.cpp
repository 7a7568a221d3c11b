#include "mixmoore/moore_bounds.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace mixmoore {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("Moore bound overflows int64");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("Moore bound overflows int64");
  return out;
}

}  // namespace

MoorePlan moore_plan(int r, int z, int k) {
  if (r < 0 || z < 0 || r + z < 1 || k < 1) {
    throw std::domain_error("moore_plan needs r, z >= 0, r + z >= 1, k >= 1 (got r=" +
                            std::to_string(r) + " z=" + std::to_string(z) +
                            " k=" + std::to_string(k) + ")");
  }
  MoorePlan plan{r, z, k, {}, 1};
  MooreLayer layer{r, z};
  for (int depth = 1; depth <= k; ++depth) {
    plan.layers.push_back(layer);
    plan.moore_bound = checked_add(plan.moore_bound, layer.total());
    MooreLayer next;
    next.by_edge = checked_add(checked_mul(r - 1, layer.by_edge), checked_mul(r, layer.by_arc));
    next.by_arc = checked_mul(z, layer.total());
    layer = next;
  }
  return plan;
}

std::int64_t moore_bound(int r, int z, int k) { return moore_plan(r, z, k).moore_bound; }

ClosedFormParams closed_form_params(int r, int z) {
  ClosedFormParams p;
  const double s = z + r;
  p.v = s * s + 2.0 * (z - r) + 1.0;
  if (p.v <= 0) throw DegenerateClosedForm("closed form undefined: v = " + std::to_string(p.v));
  const double root = std::sqrt(p.v);
  p.a = (root - (s + 1)) / (2 * root);
  p.b = (root + (s + 1)) / (2 * root);
  p.u1 = (s - 1 - root) / 2;
  p.u2 = (s - 1 + root) / 2;
  return p;
}

double moore_bound_closed(int r, int z, int k) {
  const ClosedFormParams p = closed_form_params(r, z);
  constexpr double kEps = 1e-12;
  if (std::abs(p.u1 - 1) < kEps || std::abs(p.u2 - 1) < kEps) {
    throw DegenerateClosedForm("closed form has u_i = 1 for r=" + std::to_string(r) +
                               " z=" + std::to_string(z));
  }
  auto geometric = [k](double u) { return (std::pow(u, k + 1) - 1) / (u - 1); };
  return p.a * geometric(p.u1) + p.b * geometric(p.u2);
}

std::int64_t improved_bound(int r, int z, int k) {
  if (k < 3) throw std::domain_error("improved bound requires diameter k >= 3");
  if (r < 1 || z < 1) throw std::domain_error("improved bound requires r, z >= 1");
  return moore_bound(r, z, k) - r;
}

std::int64_t bipartite_bound_1z3(int z) {
  if (z < 1) throw std::domain_error("bipartite bound requires z >= 1");
  const std::int64_t w = z + 1;
  return 2 * w * w;
}

}  // namespace mixmoore
