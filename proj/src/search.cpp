#include "mixmoore/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "mixmoore/isomorphism.hpp"
#include "mixmoore/moore_bounds.hpp"
#include "mixmoore/tree_walks.hpp"

namespace mixmoore {

namespace {

using Clock = std::chrono::steady_clock;
using EdgeList = std::vector<VertexPair>;

constexpr int kMaxCensusOrder = 12;
constexpr int kMaxCensusDegree = 2;

void labelled_matchings(int n, std::vector<bool>& used, EdgeList& current, std::vector<EdgeList>& out) {
  int v = 0;
  while (v < n && used[static_cast<std::size_t>(v)]) ++v;
  if (v == n) {
    out.push_back(current);
    return;
  }
  used[static_cast<std::size_t>(v)] = true;
  for (int w = v + 1; w < n; ++w) {
    if (used[static_cast<std::size_t>(w)]) continue;
    used[static_cast<std::size_t>(w)] = true;
    current.emplace_back(v, w);
    labelled_matchings(n, used, current, out);
    current.pop_back();
    used[static_cast<std::size_t>(w)] = false;
  }
  used[static_cast<std::size_t>(v)] = false;
}

// Cycles are grown from the smallest free vertex; the orientation is fixed
// by requiring the second vertex to be smaller than the last.
void labelled_two_factors(int n, std::vector<bool>& used, std::vector<int>& path, EdgeList& current,
                          std::vector<EdgeList>& out) {
  if (path.empty()) {
    int v = 0;
    while (v < n && used[static_cast<std::size_t>(v)]) ++v;
    if (v == n) {
      out.push_back(current);
      return;
    }
    used[static_cast<std::size_t>(v)] = true;
    path.push_back(v);
    labelled_two_factors(n, used, path, current, out);
    path.pop_back();
    used[static_cast<std::size_t>(v)] = false;
    return;
  }
  if (path.size() >= 3 && path[1] < path.back()) {
    const std::size_t mark = current.size();
    for (std::size_t i = 0; i + 1 < path.size(); ++i) current.emplace_back(path[i], path[i + 1]);
    current.emplace_back(path.back(), path.front());
    std::vector<int> closed;
    closed.swap(path);
    labelled_two_factors(n, used, path, current, out);
    path.swap(closed);
    current.resize(mark);
  }
  for (int w = path.front() + 1; w < n; ++w) {
    if (used[static_cast<std::size_t>(w)]) continue;
    used[static_cast<std::size_t>(w)] = true;
    path.push_back(w);
    labelled_two_factors(n, used, path, current, out);
    path.pop_back();
    used[static_cast<std::size_t>(w)] = false;
  }
}

void cycle_partitions(int remaining, int largest, std::vector<int>& parts, std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(parts);
    return;
  }
  for (int p = std::min(remaining, largest); p >= 3; --p) {
    parts.push_back(p);
    cycle_partitions(remaining - p, p, parts, out);
    parts.pop_back();
  }
}

std::vector<EdgeList> undirected_parts(int n, int r, bool symmetry_reduction) {
  std::vector<EdgeList> out;
  if (r == 0) {
    out.emplace_back();
    return out;
  }
  if (r == 1) {
    if (n % 2 != 0) return out;
    if (symmetry_reduction) {
      EdgeList m;
      for (int v = 0; v < n; v += 2) m.emplace_back(v, v + 1);
      out.push_back(std::move(m));
    } else {
      std::vector<bool> used(static_cast<std::size_t>(n), false);
      EdgeList current;
      labelled_matchings(n, used, current, out);
    }
    return out;
  }
  if (symmetry_reduction) {
    std::vector<std::vector<int>> partitions;
    std::vector<int> parts;
    cycle_partitions(n, n, parts, partitions);
    for (const auto& partition : partitions) {
      EdgeList f;
      int start = 0;
      for (int len : partition) {
        for (int i = 0; i < len; ++i) f.emplace_back(start + i, start + (i + 1) % len);
        start += len;
      }
      out.push_back(std::move(f));
    }
  } else {
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::vector<int> path;
    EdgeList current;
    labelled_two_factors(n, used, path, current, out);
  }
  return out;
}

bool is_new_class(const std::vector<MixedGraph>& known, const MixedGraph& g) {
  return std::none_of(known.begin(), known.end(), [&](const MixedGraph& h) { return are_isomorphic(g, h); });
}

struct Task {
  std::size_t part = 0;
  std::vector<int> first_choice;
};

struct Shared {
  int n = 0;
  int r = 0;
  int z = 0;
  int k = 0;
  bool moore = false;
  bool pruning = true;
  std::int64_t node_budget = 0;
  Clock::time_point deadline;
  std::vector<EdgeList> parts;

  std::atomic<std::int64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::mutex mutex;
  std::vector<MixedGraph> classes;
  SearchStats stats;
};

void combinations(const std::vector<int>& pool, int size, std::size_t from, std::vector<int>& current,
                  std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == size) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = from; i < pool.size(); ++i) {
    current.push_back(pool[i]);
    combinations(pool, size, i + 1, current, out);
    current.pop_back();
  }
}

class Explorer {
 public:
  Explorer(Shared& shared, std::size_t part)
      : s_(shared),
        edges_(shared.parts[part]),
        split_{CountMatrix::Zero(shared.n, shared.n), CountMatrix::Zero(shared.n, shared.n), {}},
        indegree_(static_cast<std::size_t>(shared.n), 0) {
    for (const auto& [u, v] : edges_) {
      split_.edges(u, v) = 1;
      split_.edges(v, u) = 1;
    }
  }

  std::vector<std::vector<int>> choices(int v) const {
    std::vector<int> pool;
    for (int w = 0; w < s_.n; ++w) {
      if (w == v || split_.edges(v, w) != 0 || split_.arcs(w, v) != 0) continue;
      if (indegree_[static_cast<std::size_t>(w)] >= s_.z) continue;
      pool.push_back(w);
    }
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    combinations(pool, s_.z, 0, current, out);
    return out;
  }

  /// Places the arcs of v; false if the arcs make a completion impossible.
  bool place(int v, const std::vector<int>& heads) {
    for (int w : heads) {
      split_.arcs(v, w) = 1;
      ++indegree_[static_cast<std::size_t>(w)];
    }
    ++local_.nodes;
    const std::int64_t total = s_.nodes.fetch_add(1) + 1;
    if (total > s_.node_budget || ((total & 1023) == 0 && Clock::now() > s_.deadline)) s_.stop = true;
    return !s_.pruning || feasible();
  }

  void unplace(int v, const std::vector<int>& heads) {
    for (int w : heads) {
      split_.arcs(v, w) = 0;
      --indegree_[static_cast<std::size_t>(w)];
    }
  }

  void explore(int v) {
    if (s_.stop) return;
    if (v == s_.n) {
      leaf();
      return;
    }
    for (const auto& heads : choices(v)) {
      if (place(v, heads)) explore(v + 1);
      unplace(v, heads);
      if (s_.stop) return;
    }
  }

  void flush() {
    std::lock_guard lock(s_.mutex);
    s_.stats.nodes += local_.nodes;
    s_.stats.leaves += local_.leaves;
    s_.stats.pruned_row_surplus += local_.pruned_row_surplus;
    s_.stats.pruned_column_surplus += local_.pruned_column_surplus;
    s_.stats.rejected_at_leaf += local_.rejected_at_leaf;
    s_.stats.duplicates += local_.duplicates;
    for (auto& g : found_) {
      if (is_new_class(s_.classes, g)) {
        s_.classes.push_back(std::move(g));
      } else {
        ++s_.stats.duplicates;
      }
    }
    found_.clear();
    local_ = {};
  }

 private:
  // Walk counts only grow as arcs are added, and the finished count matrix
  // exceeds the all-ones matrix by one unit per row and column (almost
  // Moore) or not at all (Moore).
  bool feasible() {
    split_.total = split_.edges + split_.arcs;
    const CountMatrix t = tree_walk_total(split_, s_.k);
    const int allowed = s_.moore ? 0 : 1;
    const auto nonzero = (t.array() > 0).cast<int>();
    const Eigen::VectorXi row_surplus = t.rowwise().sum() - nonzero.matrix().rowwise().sum();
    if (row_surplus.maxCoeff() > allowed) {
      ++local_.pruned_row_surplus;
      return false;
    }
    const Eigen::RowVectorXi col_surplus = t.colwise().sum() - nonzero.matrix().colwise().sum();
    if (col_surplus.maxCoeff() > allowed) {
      ++local_.pruned_column_surplus;
      return false;
    }
    return true;
  }

  void leaf() {
    ++local_.leaves;
    EdgeList arcs;
    for (int u = 0; u < s_.n; ++u) {
      for (int w = 0; w < s_.n; ++w) {
        if (split_.arcs(u, w) != 0) arcs.emplace_back(u, w);
      }
    }
    if (!walk_counts_match()) {
      ++local_.rejected_at_leaf;
      return;
    }
    MixedGraph g(s_.n, edges_, std::move(arcs));
    if (is_new_class(found_, g)) {
      found_.push_back(std::move(g));
    } else {
      ++local_.duplicates;
    }
  }

  // T - J is a permutation matrix (almost Moore) or zero (Moore).
  bool walk_counts_match() {
    split_.total = split_.edges + split_.arcs;
    const CountMatrix excess = tree_walk_total(split_, s_.k) - CountMatrix::Ones(s_.n, s_.n);
    if (s_.moore) return excess.isZero();
    return is_permutation_matrix(excess);
  }

  Shared& s_;
  const EdgeList& edges_;
  AdjacencySplit<int> split_;
  std::vector<int> indegree_;
  SearchStats local_;
  std::vector<MixedGraph> found_;
};

void run_task(Shared& shared, const Task& task) {
  Explorer ex(shared, task.part);
  if (shared.n > 0 && !shared.stop) {
    if (ex.place(0, task.first_choice)) ex.explore(1);
  }
  ex.flush();
}

}  // namespace

CensusResult census(const SearchSpec& spec) {
  const auto start = Clock::now();
  if (spec.r < 0 || spec.z < 0 || spec.r + spec.z < 1 || spec.k < 1) {
    throw SearchEnvelopeError("census needs r, z >= 0, r + z >= 1 and k >= 1");
  }
  if (spec.r > kMaxCensusDegree || spec.z > kMaxCensusDegree) {
    throw SearchEnvelopeError("census supports r <= 2 and z <= 2");
  }
  if (spec.k >= 3 && spec.r >= 2 && !spec.allow_any_r) {
    throw SearchEnvelopeError("for k >= 3 the order M - 1 needs r = 1 (set allow_any_r to search anyway)");
  }
  if (spec.threads < 1) throw SearchEnvelopeError("threads must be positive");
  const std::int64_t m = moore_bound(spec.r, spec.z, spec.k);
  const std::int64_t n = spec.n.value_or(m - 1);
  if (n != m - 1 && n != m) {
    throw SearchEnvelopeError("census order must be M(r,z,k) - 1 = " + std::to_string(m - 1) +
                              " or M(r,z,k) = " + std::to_string(m) + ", got " + std::to_string(n));
  }
  if (n < 1 || n > kMaxCensusOrder) {
    throw SearchEnvelopeError("census supports 1 <= n <= " + std::to_string(kMaxCensusOrder) + ", got " +
                              std::to_string(n));
  }

  Shared shared;
  shared.n = static_cast<int>(n);
  shared.r = spec.r;
  shared.z = spec.z;
  shared.k = spec.k;
  shared.moore = n == m;
  shared.pruning = spec.pruning;
  shared.node_budget = spec.node_budget;
  shared.deadline = start + std::chrono::duration_cast<Clock::duration>(
                                std::chrono::duration<double>(spec.time_budget_seconds));
  shared.parts = undirected_parts(shared.n, spec.r, spec.symmetry_reduction);

  // First branching level: the arcs of vertex 0 in every undirected part.
  std::vector<Task> tasks;
  for (std::size_t p = 0; p < shared.parts.size(); ++p) {
    Explorer probe(shared, p);
    for (auto& c : probe.choices(0)) tasks.push_back({p, std::move(c)});
  }

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
      run_task(shared, tasks[i]);
    }
  };
  const int workers = std::min<int>(spec.threads, std::max<int>(1, static_cast<int>(tasks.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  CensusResult result;
  result.spec = spec;
  result.n = shared.n;
  result.moore = shared.moore;
  result.stats = shared.stats;
  result.stats.undirected_parts = static_cast<std::int64_t>(shared.parts.size());
  result.exhaustive = !shared.stop;
  // Every candidate class passes the full verifier, then canonical order.
  std::vector<std::pair<std::vector<int>, MixedGraph>> keyed;
  for (const auto& g : shared.classes) {
    const bool ok = result.moore ? is_moore_mixed_graph(g, spec.k) : verify_almost_moore(g, spec.k).almost_moore();
    if (!ok) {
      ++result.stats.rejected_by_verify;
      continue;
    }
    keyed.emplace_back(canonical_form(g).code, canonical_graph(g));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [code, g] : keyed) {
    if (!result.moore) result.reports.push_back(verify_almost_moore(g, spec.k));
    result.representatives.push_back(std::move(g));
  }
  result.stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

bool verify_census_against_known(const CensusResult& result, const std::vector<MixedGraph>& knowns) {
  const auto classes = [](const std::vector<MixedGraph>& graphs) {
    std::set<std::pair<int, std::vector<int>>> out;
    for (const auto& g : graphs) out.emplace(g.order(), canonical_form(g).code);
    return out;
  };
  return classes(result.representatives) == classes(knowns);
}

std::string format_census(const CensusResult& result) {
  const auto& s = result.spec;
  std::ostringstream out;
  out << "census (r,z,k) = (" << s.r << "," << s.z << "," << s.k << "), n = " << result.n << '\n';
  out << "target = " << (result.moore ? "mixed Moore graphs (order M)" : "almost Moore mixed graphs (order M - 1)")
      << '\n';
  // Total regularity is a theorem for diameter 2 and for r = z = 1; elsewhere
  // the search imposes it as part of the definition.
  const bool implied = s.k == 2 || (s.r == 1 && s.z == 1);
  out << "total regularity = " << (implied ? "implied" : "imposed by definition") << '\n';
  out << "count = " << result.representatives.size() << '\n';
  out << "exhaustive = " << (result.exhaustive ? "yes" : "no (budget exhausted)") << '\n';
  out << "undirected parts = " << result.stats.undirected_parts << '\n';
  out << "nodes = " << result.stats.nodes << '\n';
  out << "leaves = " << result.stats.leaves << '\n';
  out << "pruned (row surplus) = " << result.stats.pruned_row_surplus << '\n';
  out << "pruned (column surplus) = " << result.stats.pruned_column_surplus << '\n';
  out << "rejected at leaf = " << result.stats.rejected_at_leaf << '\n';
  out << "rejected by verify = " << result.stats.rejected_by_verify << '\n';
  out << "duplicates = " << result.stats.duplicates << '\n';
  for (std::size_t i = 0; i < result.representatives.size(); ++i) {
    out << "# representative " << i + 1 << '\n';
    if (i < result.reports.size() && result.reports[i].repeat) {
      out << "# sigma = " << result.reports[i].repeat->to_cycle_string() << ", cycle structure "
          << format_cycle_structure(result.reports[i].cycle_structure) << '\n';
    }
    out << to_mgf(result.representatives[i]);
  }
  return out.str();
}

}  // namespace mixmoore
