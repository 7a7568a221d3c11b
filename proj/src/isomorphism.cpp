#include "mixmoore/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mixmoore/distances.hpp"

namespace mixmoore {
namespace {

using Invariant = std::vector<int>;

// Degree triple, then the sorted row and column of the adjacency matrix
// (multiplicities), then sorted outgoing and incoming distance profiles.
std::vector<Invariant> vertex_invariants(const MixedGraph& g, const CountMatrix& a) {
  const int n = g.order();
  const DegreeReport deg = degree_report(g);
  const DistanceData d = distances(g);
  std::vector<Invariant> inv(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const auto sv = static_cast<std::size_t>(v);
    Invariant& x = inv[sv];
    x = {deg.undirected[sv], deg.out[sv], deg.in[sv]};
    std::vector<int> row(a.row(v).begin(), a.row(v).end());
    std::vector<int> col(a.col(v).begin(), a.col(v).end());
    std::vector<int> out_d(d.dist.row(v).begin(), d.dist.row(v).end());
    std::vector<int> in_d(d.dist.col(v).begin(), d.dist.col(v).end());
    for (auto* part : {&row, &col, &out_d, &in_d}) {
      std::sort(part->begin(), part->end());
      x.insert(x.end(), part->begin(), part->end());
    }
  }
  return inv;
}

void check_order(const MixedGraph& g, int max_order) {
  if (g.order() > max_order) {
    throw OrderTooLarge("isomorphism search supports at most " + std::to_string(max_order) +
                        " vertices, got " + std::to_string(g.order()));
  }
}

class Matcher {
 public:
  Matcher(const CountMatrix& a, const CountMatrix& b, std::vector<Invariant> inv_a,
          std::vector<Invariant> inv_b)
      : a_(a), b_(b), inv_a_(std::move(inv_a)), inv_b_(std::move(inv_b)),
        n_(static_cast<int>(a.rows())), map_(static_cast<std::size_t>(n_), -1),
        used_(static_cast<std::size_t>(n_), false) {
    order_ = search_order();
  }

  std::optional<Permutation> run() {
    if (!extend(0)) return std::nullopt;
    return Permutation(map_);
  }

 private:
  // Greedy order: next vertex is the one with most links to already placed ones.
  std::vector<int> search_order() const {
    std::vector<int> order;
    std::vector<bool> placed(static_cast<std::size_t>(n_), false);
    for (int step = 0; step < n_; ++step) {
      int best = -1;
      int best_links = -1;
      for (int v = 0; v < n_; ++v) {
        if (placed[static_cast<std::size_t>(v)]) continue;
        int links = 0;
        for (int w : order) links += (a_(v, w) != 0) + (a_(w, v) != 0);
        if (links > best_links) {
          best = v;
          best_links = links;
        }
      }
      placed[static_cast<std::size_t>(best)] = true;
      order.push_back(best);
    }
    return order;
  }

  bool extend(int depth) {
    if (depth == n_) return true;
    const int u = order_[static_cast<std::size_t>(depth)];
    for (int cand = 0; cand < n_; ++cand) {
      if (used_[static_cast<std::size_t>(cand)]) continue;
      if (inv_a_[static_cast<std::size_t>(u)] != inv_b_[static_cast<std::size_t>(cand)]) continue;
      bool ok = true;
      for (int i = 0; i < depth && ok; ++i) {
        const int w = order_[static_cast<std::size_t>(i)];
        const int mw = map_[static_cast<std::size_t>(w)];
        ok = a_(u, w) == b_(cand, mw) && a_(w, u) == b_(mw, cand);
      }
      if (!ok) continue;
      map_[static_cast<std::size_t>(u)] = cand;
      used_[static_cast<std::size_t>(cand)] = true;
      if (extend(depth + 1)) return true;
      used_[static_cast<std::size_t>(cand)] = false;
      map_[static_cast<std::size_t>(u)] = -1;
    }
    return false;
  }

  const CountMatrix& a_;
  const CountMatrix& b_;
  std::vector<Invariant> inv_a_;
  std::vector<Invariant> inv_b_;
  int n_;
  std::vector<int> map_;
  std::vector<bool> used_;
  std::vector<int> order_;
};

class Canonizer {
 public:
  Canonizer(const CountMatrix& a, const std::vector<Invariant>& inv)
      : a_(a), n_(static_cast<int>(a.rows())) {
    std::vector<int> by_inv(static_cast<std::size_t>(n_));
    std::iota(by_inv.begin(), by_inv.end(), 0);
    std::stable_sort(by_inv.begin(), by_inv.end(), [&](int x, int y) {
      return inv[static_cast<std::size_t>(x)] < inv[static_cast<std::size_t>(y)];
    });
    // slot_class[p] = invariant class required at position p.
    class_of_.assign(static_cast<std::size_t>(n_), 0);
    slot_class_.assign(static_cast<std::size_t>(n_), 0);
    int cls = 0;
    for (int p = 0; p < n_; ++p) {
      if (p > 0 && inv[static_cast<std::size_t>(by_inv[static_cast<std::size_t>(p)])] !=
                       inv[static_cast<std::size_t>(by_inv[static_cast<std::size_t>(p - 1)])]) {
        ++cls;
      }
      slot_class_[static_cast<std::size_t>(p)] = cls;
      class_of_[static_cast<std::size_t>(by_inv[static_cast<std::size_t>(p)])] = cls;
    }
    used_.assign(static_cast<std::size_t>(n_), false);
  }

  CanonicalForm run() {
    search(0, -1);
    std::vector<int> labeling(static_cast<std::size_t>(n_));
    for (int p = 0; p < n_; ++p) {
      labeling[static_cast<std::size_t>(best_order_[static_cast<std::size_t>(p)])] = p;
    }
    return {Permutation(std::move(labeling)), best_code_};
  }

 private:
  // cmp < 0: the current prefix is below the best code (or no best yet);
  // cmp == 0: it equals the best code's prefix. Returns true when a new best
  // was installed below, after which the current prefix is a prefix of it.
  bool search(int p, int cmp) {
    if (p == n_) {
      if (cmp < 0) {
        best_code_ = code_;
        best_order_ = order_;
        have_best_ = true;
        return true;
      }
      return false;
    }
    bool installed = false;
    for (int v = 0; v < n_; ++v) {
      if (used_[static_cast<std::size_t>(v)]) continue;
      if (class_of_[static_cast<std::size_t>(v)] != slot_class_[static_cast<std::size_t>(p)]) continue;
      const std::size_t mark = code_.size();
      for (int q = 0; q < p; ++q) {
        const int w = order_[static_cast<std::size_t>(q)];
        code_.push_back(a_(w, v));
        code_.push_back(a_(v, w));
      }
      int child = have_best_ ? cmp : -1;
      for (std::size_t i = mark; child == 0 && i < code_.size(); ++i) {
        if (code_[i] != best_code_[i]) child = code_[i] < best_code_[i] ? -1 : 1;
      }
      if (child <= 0) {
        used_[static_cast<std::size_t>(v)] = true;
        order_.push_back(v);
        if (search(p + 1, child)) {
          installed = true;
          cmp = 0;
        }
        order_.pop_back();
        used_[static_cast<std::size_t>(v)] = false;
      }
      code_.resize(mark);
    }
    return installed;
  }

  const CountMatrix& a_;
  int n_;
  std::vector<int> class_of_;
  std::vector<int> slot_class_;
  std::vector<bool> used_;
  std::vector<int> order_;
  std::vector<int> code_;
  std::vector<int> best_code_;
  std::vector<int> best_order_;
  bool have_best_ = false;
};

}  // namespace

std::optional<Permutation> find_isomorphism(const MixedGraph& g, const MixedGraph& h,
                                            int max_order) {
  check_order(g, max_order);
  check_order(h, max_order);
  if (g.order() != h.order() || g.edges().size() != h.edges().size() ||
      g.arcs().size() != h.arcs().size()) {
    return std::nullopt;
  }
  const CountMatrix a = adjacency_matrix<int>(g);
  const CountMatrix b = adjacency_matrix<int>(h);
  auto inv_a = vertex_invariants(g, a);
  auto inv_b = vertex_invariants(h, b);
  auto sorted_a = inv_a;
  auto sorted_b = inv_b;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b) return std::nullopt;
  return Matcher(a, b, std::move(inv_a), std::move(inv_b)).run();
}

bool is_isomorphism(const MixedGraph& g, const MixedGraph& h, const Permutation& p) {
  if (g.order() != h.order() || p.size() != g.order()) return false;
  return relabel(g, p) == h;
}

CanonicalForm canonical_form(const MixedGraph& g, int max_order) {
  check_order(g, max_order);
  const CountMatrix a = adjacency_matrix<int>(g);
  const auto inv = vertex_invariants(g, a);
  return Canonizer(a, inv).run();
}

MixedGraph canonical_graph(const MixedGraph& g, int max_order) {
  return relabel(g, canonical_form(g, max_order).labeling);
}

}  // namespace mixmoore
