#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mixmoore/mixed_graph.hpp"
#include "mixmoore/verify.hpp"

namespace mixmoore {

/// Parameters outside the supported envelope, or an unsupported order.
class SearchEnvelopeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SearchSpec {
  int r = 1;
  int z = 1;
  int k = 2;
  /// Defaults to M(r, z, k) - 1. The order M(r, z, k) itself selects a
  /// census of mixed Moore graphs instead.
  std::optional<int> n;
  /// Fix the undirected part up to isomorphism; otherwise try every labelled one.
  bool symmetry_reduction = true;
  /// Walk-count pruning; off only for cross-checking.
  bool pruning = true;
  /// Allow r != 1 for k >= 3.
  bool allow_any_r = false;
  std::int64_t node_budget = 1'000'000'000;
  double time_budget_seconds = 600.0;
  int threads = 1;
};

struct SearchStats {
  std::int64_t undirected_parts = 0;
  std::int64_t nodes = 0;
  std::int64_t leaves = 0;
  std::int64_t pruned_row_surplus = 0;
  std::int64_t pruned_column_surplus = 0;
  /// Complete graphs whose walk counts are not J + P (or J).
  std::int64_t rejected_at_leaf = 0;
  /// Distinct candidates the independent verifier turned down.
  std::int64_t rejected_by_verify = 0;
  std::int64_t duplicates = 0;
  double seconds = 0.0;
};

struct CensusResult {
  SearchSpec spec;
  int n = 0;
  /// True for a census at order M(r, z, k).
  bool moore = false;
  /// Pairwise non-isomorphic, in canonical order, each in canonical labelling.
  std::vector<MixedGraph> representatives;
  /// verify_almost_moore of each representative (almost Moore census only).
  std::vector<AlmostMooreReport> reports;
  SearchStats stats;
  /// False when a budget ran out; the list may then be incomplete.
  bool exhaustive = true;
};

/// Every totally regular (r, z)-mixed graph of order n and diameter at most
/// k whose non-backtracking walk counts up to length k are J + P for a
/// permutation P (n = M - 1) or J (n = M), up to isomorphism.
///
/// Envelope: n <= 12, r <= 2, z <= 2. Each candidate passes through the
/// independent verifier before it is kept.
CensusResult census(const SearchSpec& spec);

/// The two lists agree as sets of isomorphism classes.
bool verify_census_against_known(const CensusResult& result, const std::vector<MixedGraph>& knowns);

std::string format_census(const CensusResult& result);

}  // namespace mixmoore
