#include "mixmoore/distances.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace mixmoore {

std::vector<int> bfs_distances(const std::vector<std::vector<int>>& out_neighbours, int source) {
  std::vector<int> dist(out_neighbours.size(), kUnreachable);
  std::deque<int> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : out_neighbours[static_cast<std::size_t>(u)]) {
      if (dist[static_cast<std::size_t>(v)] != kUnreachable) continue;
      dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
      queue.push_back(v);
    }
  }
  return dist;
}

DistanceData distances(const MixedGraph& g) {
  const int n = g.order();
  const auto adjacency = g.out_neighbours();
  DistanceData data;
  data.dist = CountMatrix::Constant(n, n, kUnreachable);
  data.connected = true;
  int largest = 0;
  for (int u = 0; u < n; ++u) {
    const auto row = bfs_distances(adjacency, u);
    for (int v = 0; v < n; ++v) {
      const int d = row[static_cast<std::size_t>(v)];
      data.dist(u, v) = d;
      if (d == kUnreachable) {
        data.connected = false;
      } else {
        largest = std::max(largest, d);
        data.distance_sum += d;
      }
    }
  }
  for (int i = 0; i <= largest && n > 0; ++i) {
    data.layers.push_back((data.dist.array() == i).cast<int>().matrix());
  }
  if (data.connected) {
    data.diameter = largest;
    data.average_distance =
        n == 0 ? 0.0 : static_cast<double>(data.distance_sum) / (static_cast<double>(n) * n);
  } else {
    data.average_distance = std::numeric_limits<double>::quiet_NaN();
  }
  return data;
}

}  // namespace mixmoore
