#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mixmoore {

/// Vertices at one depth of the Moore tree, split by whether they were
/// reached last through an edge or through an arc.
struct MooreLayer {
  std::int64_t by_edge = 0;
  std::int64_t by_arc = 0;
  [[nodiscard]] std::int64_t total() const { return by_edge + by_arc; }
};

/// Degree/diameter parameters with the Moore-tree layer counts.
struct MoorePlan {
  int r = 0;
  int z = 0;
  int k = 0;
  /// layers[i - 1] is depth i, for i = 1..k.
  std::vector<MooreLayer> layers;
  std::int64_t moore_bound = 0;
};

/// Counts the Moore tree: a vertex reached by an edge continues along r - 1
/// edges and z arcs, one reached by an arc along r edges and z arcs.
/// Requires r, z >= 0, r + z >= 1, k >= 1; throws std::domain_error otherwise
/// and std::overflow_error if the count leaves int64.
MoorePlan moore_plan(int r, int z, int k);

/// M(r, z, k), exact.
std::int64_t moore_bound(int r, int z, int k);

/// Quantities of the closed form of M(r, z, k).
struct ClosedFormParams {
  double v = 0;
  double a = 0;
  double b = 0;
  double u1 = 0;
  double u2 = 0;
};

/// Thrown when the closed form has a vanishing denominator (v = 0 or u_i = 1).
class DegenerateClosedForm : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

ClosedFormParams closed_form_params(int r, int z);

/// Floating-point evaluation of
///   M = A (u1^(k+1) - 1) / (u1 - 1) + B (u2^(k+1) - 1) / (u2 - 1).
/// The layer recurrence stays authoritative.
double moore_bound_closed(int r, int z, int k);

/// M(r, z, k) - r, the order bound for (r, z)-regular mixed graphs of
/// diameter k >= 3. Throws std::domain_error for k < 3 or r, z < 1.
std::int64_t improved_bound(int r, int z, int k);

/// 2 (z + 1)^2, the Moore bound for bipartite (1, z, 3)-mixed graphs.
std::int64_t bipartite_bound_1z3(int z);

}  // namespace mixmoore
