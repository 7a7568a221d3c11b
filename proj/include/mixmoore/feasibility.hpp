#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mixmoore {

/// Which number-theoretic condition admits an (r, z, 2)-almost Moore mixed graph.
///  * kA: c odd, c^2 = 4r + 1 and c | (4z + 1)(4z - 7);
///  * kB: c odd, c^2 = 4r - 7 and c | 16z^2 + 40z - 23;
///  * kNone: neither holds, so no such graph exists.
enum class Diameter2Branch { kA, kB, kNone };

struct FeasibilityWitness {
  int r = 0;
  int z = 0;
  Diameter2Branch branch = Diameter2Branch::kNone;
  /// The odd witness c1 or c2 of the branch that held.
  std::optional<int> c;
  /// M(r, z, 2) - 1 when admissible.
  std::optional<std::int64_t> n;
};

/// Inputs outside the hypotheses (r even, r > 2, z >= 1).
class OutOfTheoremScope : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// sqrt(4r + 1) when it is an integer.
std::optional<int> c1_candidate(int r);
/// sqrt(4r - 7) when it is an integer.
std::optional<int> c2_candidate(int r);

FeasibilityWitness diameter2_feasible(int r, int z);

/// One row of the diameter-2 feasibility table. The table only says whether
/// the divisibility screen admits or excludes r; it never asserts existence.
struct FeasibilityRow {
  int r = 0;
  std::optional<int> c1;
  std::optional<int> c2;
  /// Admissible z <= z_limit, increasing.
  std::vector<int> z_values;
  std::vector<std::int64_t> n_values;
  /// No z at all passes (checked over a full residue period).
  bool excluded = false;
};

std::vector<FeasibilityRow> feasibility_table(const std::vector<int>& r_values, int z_limit);

/// Fixed-width text in the layout "r c1 c2 z n Existence", with "-" for
/// missing witnesses, "Unknown" for admissible rows and "Non-existent" otherwise.
std::string format_feasibility_table(const std::vector<FeasibilityRow>& rows);
std::string feasibility_table_csv(const std::vector<FeasibilityRow>& rows);

/// Eigenvalue-multiplicity screen for (1, z, 3)-almost Moore mixed graphs
/// with P = R: the non-trivial eigenvalue multiplicities are forced to
/// b = c = z + 1, and there is one closed 2-walk per vertex only if
/// z (z + 1)(z + 2) / 3 = z + 1 as well.
struct MultiplicityCheck {
  int z = 0;
  std::int64_t n = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  /// z (z + 1)(z + 2) / 3
  std::int64_t trace_multiplicity = 0;
  bool feasible = false;
};

MultiplicityCheck multiplicity_feasible(int z);

}  // namespace mixmoore
