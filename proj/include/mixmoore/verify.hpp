#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mixmoore/matrix.hpp"
#include "mixmoore/mixed_graph.hpp"
#include "mixmoore/permutation.hpp"

namespace mixmoore {

/// Input does not meet an operation's stated precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Verification stages in the order they run. kPassed means all held.
enum class VerifyStage { kSimple, kRegularity, kOrder, kDiameter, kEquation, kPassed };

const char* stage_name(VerifyStage stage);

struct EquationCheck {
  std::string id;
  bool held = false;
};

/// Outcome of pulling the repeat permutation out of walk counts.
struct RepeatExtraction {
  std::optional<Permutation> repeat;
  VerifyStage failed_stage = VerifyStage::kPassed;
  std::string failure;
  /// First row that has no unique repeated target, when that was the failure.
  std::optional<int> failing_row;
  /// Counted via the general tree-walk recurrence rather than a closed
  /// matrix identity (any k other than 2, and k = 3 with r != 1).
  bool generalized = false;
};

/// Repeat permutation sigma of an (r, z, k)-almost Moore candidate.
///
/// W = I + A + ... + A^k minus the walks that reverse along an edge must be
/// J + P for a permutation matrix P, and P represents sigma. The reversals
/// are r I for k = 2 and I + A + Z for k = 3 with r = 1; other parameters
/// use the tree-walk recurrence directly.
RepeatExtraction extract_repeats(const MixedGraph& g, int k);

struct Diameter2Check {
  bool held = false;
  /// I + A + A^2 - J - rI.
  IntMatrix remainder;
  std::optional<Permutation> repeat;
};

/// I + A + A^2 = J + rI + P. Requires a simple totally regular graph of
/// diameter 2; throws PreconditionError otherwise.
Diameter2Check check_eq_diameter2(const MixedGraph& g);

struct Diameter3Check {
  /// A^2 + A^3 = J + Z + P for a permutation matrix P.
  bool held = false;
  /// A^2 + A^3 - J - Z.
  IntMatrix remainder;
  std::optional<Permutation> repeat;
  /// -A + A^2 + A^3 = J (the P = R case).
  bool simplified_held = false;
  /// Tree walks of length 2 and 3 number A^2 - I and A^3 - A - Z.
  bool tree_walk_identities_held = false;
  /// BFS distance layers A_2, A_3 sit below A^2 - I and A^3 - A - Z, and the
  /// two surpluses add up to P.
  bool distance_split_held = false;
};

/// Requires a simple totally regular graph with r = 1 and diameter 3;
/// throws PreconditionError otherwise.
Diameter3Check check_eq_diameter3(const MixedGraph& g);

/// True iff P A = A P, i.e. p maps edges to edges and arcs to arcs.
bool is_automorphism(const MixedGraph& g, const Permutation& p);

struct AlmostMooreReport {
  int k = 0;
  DegreeReport degrees;
  std::optional<int> diameter;
  std::int64_t expected_order = 0;
  bool order_ok = false;
  VerifyStage stage = VerifyStage::kSimple;
  std::string failure;
  std::optional<Permutation> repeat;
  std::vector<int> cycle_structure;
  std::vector<int> selfrepeats;
  bool sigma_is_automorphism = false;
  bool generalized = false;
  std::vector<EquationCheck> equations;

  [[nodiscard]] bool almost_moore() const { return stage == VerifyStage::kPassed; }
};

/// Staged check: simple -> totally regular -> order M(r,z,k) - 1 ->
/// diameter k -> walk-count equation and repeat extraction. `stage` is the
/// first stage that failed, or kPassed.
AlmostMooreReport verify_almost_moore(const MixedGraph& g, int k);

/// Fixed points of the repeat permutation (empty when extraction failed).
std::vector<int> selfrepeats(const AlmostMooreReport& report);

/// A (1, z, 3) report whose repeat fixes every vertex; no almost Moore
/// mixed graph of diameter 3 can have this.
bool contradicts_selfrepeat_corollary(const AlmostMooreReport& report);

/// Totally regular, order M(r, z, k), diameter k, and the tree-walk total
/// over lengths 0..k is exactly J.
bool is_moore_mixed_graph(const MixedGraph& g, int k);

std::string format_report(const AlmostMooreReport& report);
/// One "key = value" per line.
std::string format_report_kv(const AlmostMooreReport& report);

}  // namespace mixmoore
