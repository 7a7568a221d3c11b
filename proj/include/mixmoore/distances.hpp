#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mixmoore/matrix.hpp"
#include "mixmoore/mixed_graph.hpp"

namespace mixmoore {

inline constexpr int kUnreachable = -1;

/// All-pairs shortest-path data. Edges are traversed in both directions,
/// arcs only forward.
struct DistanceData {
  /// dist(u, v), or kUnreachable.
  CountMatrix dist;
  /// Every ordered pair is joined by a path.
  bool connected = false;
  /// Largest distance; unset for disconnected graphs.
  std::optional<int> diameter;
  /// Sum of dist(u, v) over all ordered pairs (connected graphs only).
  std::int64_t distance_sum = 0;
  /// distance_sum / n^2; NaN when disconnected.
  double average_distance = 0.0;
  /// A_i(u, v) = 1 iff dist(u, v) = i, for i = 0 .. largest finite distance.
  std::vector<CountMatrix> layers;
};

DistanceData distances(const MixedGraph& g);

/// Distances from one source; kUnreachable marks vertices out of reach.
std::vector<int> bfs_distances(const std::vector<std::vector<int>>& out_neighbours, int source);

}  // namespace mixmoore
