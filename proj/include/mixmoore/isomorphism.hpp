#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "mixmoore/mixed_graph.hpp"
#include "mixmoore/permutation.hpp"

namespace mixmoore {

inline constexpr int kMaxIsomorphismOrder = 16;

class OrderTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A bijection phi with phi(edges(g)) = edges(h) and phi(arcs(g)) = arcs(h)
/// as multisets, or nullopt. Backtracking over vertices refined by degree and
/// distance-profile invariants; throws OrderTooLarge beyond `max_order`.
std::optional<Permutation> find_isomorphism(const MixedGraph& g, const MixedGraph& h,
                                            int max_order = kMaxIsomorphismOrder);

inline bool are_isomorphic(const MixedGraph& g, const MixedGraph& h,
                           int max_order = kMaxIsomorphismOrder) {
  return find_isomorphism(g, h, max_order).has_value();
}

/// p with edges and arcs of `g` mapped by p equal to those of `h`.
bool is_isomorphism(const MixedGraph& g, const MixedGraph& h, const Permutation& p);

/// Lexicographically least adjacency encoding over all labelings that list
/// vertices in increasing invariant order. Equal codes <=> isomorphic graphs.
struct CanonicalForm {
  /// labeling(v) is the canonical position of vertex v.
  Permutation labeling;
  std::vector<int> code;
};

CanonicalForm canonical_form(const MixedGraph& g, int max_order = kMaxIsomorphismOrder);

/// `g` relabelled into canonical position order.
MixedGraph canonical_graph(const MixedGraph& g, int max_order = kMaxIsomorphismOrder);

}  // namespace mixmoore
