#include "mixmoore/constructions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "mixmoore/distances.hpp"
#include "mixmoore/isomorphism.hpp"
#include "mixmoore/spectra.hpp"

namespace mixmoore {

namespace {

std::vector<VertexPair> expanded_arcs(const MixedGraph& g) {
  std::vector<VertexPair> out;
  out.reserve(2 * g.edges().size() + g.arcs().size());
  for (const auto& [u, v] : g.edges()) {
    out.emplace_back(u, v);
    out.emplace_back(v, u);
  }
  out.insert(out.end(), g.arcs().begin(), g.arcs().end());
  std::sort(out.begin(), out.end());
  return out;
}

int mod(int a, int m) { return ((a % m) + m) % m; }

void require(bool ok, const std::string& message) {
  if (!ok) throw FamilyError(message);
}

}  // namespace

std::string LineDigraphMap::label(int vertex) const {
  const auto& [u, v] = arcs.at(static_cast<std::size_t>(vertex));
  return std::to_string(u) + "," + std::to_string(v);
}

LineDigraph line_digraph(const MixedGraph& g) {
  if (!g.is_simple()) throw GraphError("line_digraph: parallel arcs are not supported");
  LineDigraph result;
  result.map.arcs = expanded_arcs(g);
  const auto& arcs = result.map.arcs;
  const int m = static_cast<int>(arcs.size());

  // Arcs leaving each source vertex, as indices into `arcs`.
  std::vector<std::vector<int>> leaving(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < m; ++i) leaving[static_cast<std::size_t>(arcs[i].first)].push_back(i);
  result.map.source_has_sinks =
      std::any_of(leaving.begin(), leaving.end(), [](const auto& l) { return l.empty(); });

  CountMatrix adj = CountMatrix::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j : leaving[static_cast<std::size_t>(arcs[i].second)]) adj(i, j) = 1;
  }
  result.graph = from_adjacency(adj);
  return result;
}

MixedGraph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<VertexPair> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return MixedGraph(n, std::move(edges), {});
}

MixedGraph complete_graph(int n) {
  require(n >= 1, "complete needs n >= 1");
  std::vector<VertexPair> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return MixedGraph(n, std::move(edges), {});
}

MixedGraph complete_bipartite_graph(int m, int n) {
  require(m >= 1 && n >= 1, "complete_bipartite needs positive part sizes");
  std::vector<VertexPair> edges;
  for (int u = 0; u < m; ++u) {
    for (int v = 0; v < n; ++v) edges.emplace_back(u, m + v);
  }
  return MixedGraph(m + n, std::move(edges), {});
}

MixedGraph petersen_graph() {
  std::vector<std::pair<int, int>> subsets;
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) subsets.emplace_back(a, b);
  }
  std::vector<VertexPair> edges;
  for (int i = 0; i < 10; ++i) {
    for (int j = i + 1; j < 10; ++j) {
      const auto [a, b] = subsets[static_cast<std::size_t>(i)];
      const auto [c, d] = subsets[static_cast<std::size_t>(j)];
      if (a != c && a != d && b != c && b != d) edges.emplace_back(i, j);
    }
  }
  return MixedGraph(10, std::move(edges), {});
}

MixedGraph hoffman_singleton_graph() {
  // Vertex i of pentagon h is 5h + i; vertex i of pentagram j is 25 + 5j + i.
  const auto pentagon = [](int h, int i) { return 5 * h + i; };
  const auto pentagram = [](int j, int i) { return 25 + 5 * j + i; };
  std::vector<VertexPair> edges;
  for (int h = 0; h < 5; ++h) {
    for (int i = 0; i < 5; ++i) {
      edges.emplace_back(pentagon(h, i), pentagon(h, (i + 1) % 5));
      edges.emplace_back(pentagram(h, i), pentagram(h, (i + 2) % 5));
    }
  }
  // Vertex j of pentagon h meets vertex h i + j of pentagram i.
  for (int h = 0; h < 5; ++h) {
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) edges.emplace_back(pentagon(h, j), pentagram(i, (h * i + j) % 5));
    }
  }
  return MixedGraph(50, std::move(edges), {});
}

MixedGraph pentagonal_prism() {
  std::vector<VertexPair> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(2 * i, (2 * i + 2) % 10);
    edges.emplace_back(2 * i + 1, (2 * i + 3) % 10);
    edges.emplace_back(2 * i, 2 * i + 1);
  }
  return MixedGraph(10, std::move(edges), {});
}

MixedGraph kautz_graph(int d, int k) {
  require(d >= 1, "kautz needs d >= 1");
  require(k >= 1 && k <= 6, "kautz needs 1 <= k <= 6");
  MixedGraph g = complete_graph(d + 1);
  for (int step = 1; step < k; ++step) g = line_digraph(g).graph;
  return g;
}

MixedGraph cayley_d5() {
  const auto index = [](int a, int b) { return mod(a, 5) + 5 * b; };
  std::vector<VertexPair> edges;
  std::vector<VertexPair> arcs;
  for (int a = 0; a < 5; ++a) {
    edges.emplace_back(index(a, 0), index(a, 1));
    for (int b = 0; b < 2; ++b) {
      // r^a s^b * r = r^(a + (-1)^b) s^b
      arcs.emplace_back(index(a, b), index(a + (b == 0 ? 1 : -1), b));
    }
  }
  return MixedGraph(10, std::move(edges), std::move(arcs));
}

MixedGraph almost_moore_212() {
  std::vector<VertexPair> edges;
  std::vector<VertexPair> arcs;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    arcs.emplace_back(i, 5 + mod(i - 1, 5));
    arcs.emplace_back(5 + i, mod(i - 1, 5));
  }
  return MixedGraph(10, std::move(edges), std::move(arcs));
}

const std::array<HPermutations, 3>& h_permutations() {
  static const std::array<HPermutations, 3> data = [] {
    const auto p = [](const char* text) { return Permutation::parse_cycles(10, text); };
    return std::array<HPermutations, 3>{{
        {p("(01)(23)(45)(67)(89)"), p("(01)(23)(45)(67)(89)"), p("(02468)(19753)")},
        {p("(01)(23)(4675)(89)"), p("(01)(23)(57)(46)(89)"), p("(0245319768)")},
        {p("(23)(4675)(8019)"), p("(08)(23)(57)(46)(19)"), p("(024531)(6897)")},
    }};
  }();
  return data;
}

namespace {

const HPermutations& h_data(int i) {
  if (i < 1 || i > 3) throw FamilyError("H permutation data exists for i = 1..3");
  return h_permutations()[static_cast<std::size_t>(i - 1)];
}

}  // namespace

CountMatrix h_edge_matrix(int i) { return permutation_matrix<int>(h_data(i).rho); }
CountMatrix h_arc_matrix(int i) { return permutation_matrix<int>(h_data(i).omega); }
CountMatrix h_sigma_matrix(int i) { return permutation_matrix<int>(h_data(i).sigma); }

CountMatrix h_adjacency(int i) {
  switch (i) {
    case 1:
    case 2:
    case 3:
      return h_edge_matrix(i) + h_arc_matrix(i);
    case 4:
      return h_edge_matrix(1) + h_arc_matrix(2);
    case 5:
      return h_edge_matrix(2) + h_arc_matrix(3);
    case 6:
      return h_sigma_matrix(1) + h_arc_matrix(2);
    case 7:
      return h_sigma_matrix(2) + h_arc_matrix(3);
    default:
      throw FamilyError("H graphs are numbered 1..7");
  }
}

MixedGraph h_graph(int i) { return from_adjacency(h_adjacency(i), i >= 4); }

MixedGraph family(std::string_view name, const std::vector<int>& params) {
  const auto arity = [&](std::size_t lo, std::size_t hi) {
    require(params.size() >= lo && params.size() <= hi,
            std::string(name) + ": expected " +
                (lo == hi ? std::to_string(lo) : std::to_string(lo) + "-" + std::to_string(hi)) +
                " parameter(s), got " + std::to_string(params.size()));
  };
  if (name == "cycle") {
    arity(1, 1);
    return cycle_graph(params[0]);
  }
  if (name == "complete") {
    arity(1, 1);
    return complete_graph(params[0]);
  }
  if (name == "complete_bipartite") {
    arity(2, 2);
    return complete_bipartite_graph(params[0], params[1]);
  }
  if (name == "petersen") {
    arity(0, 0);
    return petersen_graph();
  }
  if (name == "hoffman_singleton") {
    arity(0, 0);
    return hoffman_singleton_graph();
  }
  if (name == "prism") {
    arity(0, 0);
    return pentagonal_prism();
  }
  if (name == "kautz") {
    arity(1, 2);
    return kautz_graph(params[0], params.size() == 2 ? params[1] : 2);
  }
  if (name == "cayley_d5") {
    arity(0, 0);
    return cayley_d5();
  }
  if (name == "H") {
    arity(1, 1);
    require(params[0] >= 1 && params[0] <= 7, "H: index must be 1..7");
    return h_graph(params[0]);
  }
  if (name == "almost_moore_212") {
    arity(0, 0);
    return almost_moore_212();
  }
  throw FamilyError("unknown family '" + std::string(name) + "'");
}

std::vector<std::string> family_names() {
  return {"cycle", "complete", "complete_bipartite", "petersen", "hoffman_singleton", "prism",
          "kautz", "cayley_d5", "H", "almost_moore_212"};
}

bool CheckReport::all_held() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.held; });
}

std::string CheckReport::to_string() const {
  std::ostringstream out;
  for (const auto& item : items) out << (item.held ? "held   " : "FAILED ") << item.name << '\n';
  return out.str();
}

CheckReport lemma_rzp_suite() {
  CheckReport report;
  const CountMatrix id = identity_matrix<int>(10);
  const std::string n[] = {"", "1", "2", "3", "4", "5", "6", "7"};

  for (int i = 1; i <= 3; ++i) {
    const CountMatrix r = h_edge_matrix(i);
    report.add("R" + n[i] + "^2 = I", r * r == id);
  }
  for (int i = 1; i <= 3; ++i) {
    for (int j = i + 1; j <= 3; ++j) {
      report.add("A" + n[i] + " A" + n[j] + " = A" + n[j] + " A" + n[i],
                 commutes(h_adjacency(i), h_adjacency(j)));
    }
  }
  for (int i = 1; i <= 3; ++i) {
    report.add("A1 = P" + n[i] + " + Z" + n[i],
               h_adjacency(1) == CountMatrix(h_sigma_matrix(i) + h_arc_matrix(i)));
  }
  for (int i = 1; i <= 3; ++i) {
    report.add("A" + n[i] + " = P" + n[i] + "^T + Z1",
               h_adjacency(i) == CountMatrix(h_sigma_matrix(i).transpose() + h_arc_matrix(1)));
  }

  const Polynomial expected = diameter3_pattern(1).expand();
  for (int i = 1; i <= 7; ++i) {
    report.add("charpoly H" + n[i] + " = (x - 2) x^5 (x^2 + x - 1)^2",
               char_poly(IntMatrix(h_adjacency(i).cast<BigInt>())) == expected);
  }
  const MixedGraph h4 = h_graph(4);
  report.add("H4 isomorphic to H6", are_isomorphic(h4, h_graph(6)));
  report.add("H4 isomorphic to H7", are_isomorphic(h4, h_graph(7)));
  report.add("H4 not isomorphic to H5", !are_isomorphic(h4, h_graph(5)));

  const CountMatrix prism = adjacency_matrix<int>(pentagonal_prism());
  for (int i = 1; i <= 3; ++i) {
    const CountMatrix z = h_arc_matrix(i);
    report.add("R" + n[i] + " + Z" + n[i] + " + Z" + n[i] + "^T = pentagonal prism",
               CountMatrix(h_edge_matrix(i) + z + z.transpose()) == prism);
  }
  return report;
}

CheckReport algebra_membership() {
  CheckReport report;
  const std::string n[] = {"", "1", "2", "3"};
  const CountMatrix r1 = h_edge_matrix(1);
  const CountMatrix z1 = h_arc_matrix(1);
  const CountMatrix p1 = h_sigma_matrix(1);
  report.add("P1 = R1", p1 == r1);
  report.add("P1^2 = I", CountMatrix(p1 * p1) == identity_matrix<int>(10));
  for (int i = 1; i <= 3; ++i) {
    const CountMatrix p = h_sigma_matrix(i);
    const CountMatrix z = h_arc_matrix(i);
    report.add("P" + n[i] + " = R1 + Z1 - Z" + n[i], p == CountMatrix(r1 + z1 - z));
    report.add("R" + n[i] + " = P" + n[i] + "^T + Z1 - Z" + n[i],
               h_edge_matrix(i) == CountMatrix(p.transpose() + z1 - z));
  }
  return report;
}

LineDigraphMetrics line_digraph_metrics(const MixedGraph& g) {
  const DegreeReport deg = degree_report(g);
  const int n = g.order();
  if (n == 0) throw std::invalid_argument("line_digraph_metrics: empty graph");
  const int delta = deg.undirected[0] + deg.out[0];
  for (int v = 0; v < n; ++v) {
    const auto i = static_cast<std::size_t>(v);
    if (deg.undirected[i] + deg.out[i] != delta || deg.undirected[i] + deg.in[i] != delta) {
      throw std::invalid_argument("line_digraph_metrics: input is not regular as a digraph");
    }
  }
  if (delta <= 1) throw std::invalid_argument("line_digraph_metrics: degree must exceed 1");

  const DistanceData dg = distances(g);
  if (!dg.connected) throw std::invalid_argument("line_digraph_metrics: input is not strongly connected");
  const LineDigraph lg = line_digraph(g);
  const DistanceData dl = distances(lg.graph);

  LineDigraphMetrics m;
  m.delta = delta;
  m.n = n;
  m.k = *dg.diameter;
  m.distance_sum = dg.distance_sum;
  m.n_line = lg.graph.order();
  m.k_line = dl.diameter.value_or(kUnreachable);
  m.distance_sum_line = dl.distance_sum;
  m.average = dg.average_distance;
  m.average_line = dl.average_distance;
  m.order_ok = m.n_line == delta * n;
  m.diameter_ok = dl.connected && m.k_line == m.k + 1;
  // S_L / n_L^2 < S / n^2 + 1, cleared of denominators.
  const BigInt nn = BigInt(n) * BigInt(n);
  const BigInt nl = BigInt(m.n_line) * BigInt(m.n_line);
  m.average_ok = dl.connected && BigInt(m.distance_sum_line) * nn < (BigInt(m.distance_sum) + nn) * nl;
  return m;
}

}  // namespace mixmoore
