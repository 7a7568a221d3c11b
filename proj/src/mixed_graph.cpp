#include "mixmoore/mixed_graph.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <set>
#include <sstream>

namespace mixmoore {
namespace {

std::string pair_text(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

VertexPair unordered(int u, int v) { return u < v ? VertexPair{u, v} : VertexPair{v, u}; }

}  // namespace

MixedGraph::MixedGraph(int n, std::vector<VertexPair> edges, std::vector<VertexPair> arcs,
                       bool allow_parallel_arcs)
    : n_(n), edges_(std::move(edges)), arcs_(std::move(arcs)),
      allow_parallel_arcs_(allow_parallel_arcs) {
  if (n_ < 0) throw GraphError("negative vertex count");
  auto check_range = [&](int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) {
      throw GraphError("vertex out of range in " + pair_text(u, v));
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  };
  for (auto& e : edges_) {
    check_range(e.first, e.second);
    e = unordered(e.first, e.second);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw GraphError("duplicate edge");
  }
  for (const auto& [u, v] : arcs_) check_range(u, v);
  std::sort(arcs_.begin(), arcs_.end());
  const std::set<VertexPair> arc_set(arcs_.begin(), arcs_.end());
  const std::set<VertexPair> edge_set(edges_.begin(), edges_.end());
  for (const auto& [u, v] : arc_set) {
    if (arc_set.count({v, u}) != 0) {
      throw GraphError("digon " + pair_text(u, v) + "/" + pair_text(v, u) +
                       " must be given as an edge");
    }
    if (!allow_parallel_arcs_ && edge_set.count(unordered(u, v)) != 0) {
      throw GraphError("arc " + pair_text(u, v) + " lies on an edge");
    }
  }
  if (!allow_parallel_arcs_ && arc_set.size() != arcs_.size()) {
    throw GraphError("parallel arcs are not allowed");
  }
}

bool MixedGraph::is_simple() const {
  if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end()) return false;
  for (const auto& [u, v] : arcs_) {
    if (std::binary_search(edges_.begin(), edges_.end(), unordered(u, v))) return false;
  }
  return true;
}

std::vector<std::vector<int>> MixedGraph::out_neighbours() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n_));
  for (const auto& [u, v] : edges_) {
    out[static_cast<std::size_t>(u)].push_back(v);
    out[static_cast<std::size_t>(v)].push_back(u);
  }
  for (const auto& [u, v] : arcs_) out[static_cast<std::size_t>(u)].push_back(v);
  for (auto& list : out) std::sort(list.begin(), list.end());
  return out;
}

MixedGraph parse_mgf(std::istream& in, const ParseOptions& options) {
  std::string line;
  int line_no = 0;
  std::optional<int> n;
  std::vector<VertexPair> edges;
  std::set<VertexPair> edge_set;
  std::map<VertexPair, int> arc_count;
  std::map<VertexPair, int> arc_line;

  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string kind;
    if (!(tokens >> kind)) continue;

    auto read_int = [&](const char* what) {
      std::string tok;
      if (!(tokens >> tok)) throw ParseError(line_no, std::string("missing ") + what);
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != tok.size()) {
        throw ParseError(line_no, "expected an integer for " + std::string(what) + ", got '" +
                                      tok + "'");
      }
      return value;
    };
    auto expect_end = [&] {
      std::string extra;
      if (tokens >> extra) throw ParseError(line_no, "unexpected token '" + extra + "'");
    };

    if (!n) {
      if (kind != "n") throw ParseError(line_no, "expected header 'n <N>'");
      const int value = read_int("vertex count");
      if (value < 0) throw ParseError(line_no, "negative vertex count");
      expect_end();
      n = value;
      continue;
    }
    if (kind != "E" && kind != "A") {
      throw ParseError(line_no, "unknown record '" + kind + "' (expected E or A)");
    }
    const int u = read_int("first vertex");
    const int v = read_int("second vertex");
    expect_end();
    if (u < 0 || u >= *n || v < 0 || v >= *n) {
      throw ParseError(line_no, "vertex index out of range in " + pair_text(u, v));
    }
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    if (kind == "E") {
      if (!edge_set.insert(unordered(u, v)).second) {
        throw ParseError(line_no, "duplicate edge " + pair_text(u, v));
      }
      edges.push_back(unordered(u, v));
    } else {
      const VertexPair arc{u, v};
      if (!options.allow_parallel_arcs && arc_count[arc] > 0) {
        throw ParseError(line_no, "duplicate arc " + pair_text(u, v));
      }
      if (!options.promote_digons && arc_count.count({v, u}) != 0 && arc_count[{v, u}] > 0) {
        throw ParseError(line_no, "digon " + pair_text(v, u) + "/" + pair_text(u, v) +
                                      " must be written as an edge");
      }
      ++arc_count[arc];
      arc_line[arc] = line_no;
    }
  }
  if (!n) throw ParseError(line_no + 1, "missing header 'n <N>'");

  std::vector<VertexPair> arcs;
  for (auto& [arc, count] : arc_count) {
    const auto [u, v] = arc;
    if (u < v) {
      auto reverse = arc_count.find({v, u});
      if (reverse != arc_count.end() && reverse->second > 0 && count > 0) {
        const int promoted = std::min(count, reverse->second);
        const int at = std::max(arc_line[arc], arc_line[{v, u}]);
        if (promoted > 1) throw ParseError(at, "multiple digons on " + pair_text(u, v));
        if (!edge_set.insert({u, v}).second) {
          throw ParseError(at, "promoted digon duplicates edge " + pair_text(u, v));
        }
        edges.emplace_back(u, v);
        count -= promoted;
        reverse->second -= promoted;
      }
    }
  }
  for (const auto& [arc, count] : arc_count) {
    for (int i = 0; i < count; ++i) arcs.push_back(arc);
  }
  try {
    return MixedGraph(*n, std::move(edges), std::move(arcs), options.allow_parallel_arcs);
  } catch (const GraphError& e) {
    throw ParseError(line_no, e.what());
  }
}

MixedGraph parse_mgf_string(std::string_view text, const ParseOptions& options) {
  std::istringstream in{std::string(text)};
  return parse_mgf(in, options);
}

std::string to_mgf(const MixedGraph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (const auto& [u, v] : g.edges()) out += "E " + std::to_string(u) + " " + std::to_string(v) + "\n";
  for (const auto& [u, v] : g.arcs()) out += "A " + std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::string to_dot(const MixedGraph& g, std::string_view name) {
  std::string out = "digraph " + std::string(name) + " {\n";
  for (int v = 0; v < g.order(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (const auto& [u, v] : g.edges()) {
    out += "  " + std::to_string(u) + " -> " + std::to_string(v) + " [dir=none];\n";
  }
  for (const auto& [u, v] : g.arcs()) {
    out += "  " + std::to_string(u) + " -> " + std::to_string(v) + ";\n";
  }
  out += "}\n";
  return out;
}

MixedGraph from_adjacency(const CountMatrix& m, bool allow_parallel_arcs) {
  if (m.rows() != m.cols()) throw GraphError("adjacency matrix is not square");
  const int n = static_cast<int>(m.rows());
  std::vector<VertexPair> edges;
  std::vector<VertexPair> arcs;
  for (int u = 0; u < n; ++u) {
    if (m(u, u) != 0) throw GraphError("nonzero diagonal at vertex " + std::to_string(u));
    for (int v = u + 1; v < n; ++v) {
      if (m(u, v) < 0 || m(v, u) < 0) throw GraphError("negative adjacency entry");
      const int shared = std::min(m(u, v), m(v, u));
      if (shared > 1) throw GraphError("more than one digon on " + pair_text(u, v));
      if (shared == 1) edges.emplace_back(u, v);
      for (int i = shared; i < m(u, v); ++i) arcs.emplace_back(u, v);
      for (int i = shared; i < m(v, u); ++i) arcs.emplace_back(v, u);
    }
  }
  return MixedGraph(n, std::move(edges), std::move(arcs), allow_parallel_arcs);
}

DegreeReport degree_report(const MixedGraph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  DegreeReport d{std::vector<int>(n, 0), std::vector<int>(n, 0), std::vector<int>(n, 0), false, {}, {}};
  for (const auto& [u, v] : g.edges()) {
    ++d.undirected[static_cast<std::size_t>(u)];
    ++d.undirected[static_cast<std::size_t>(v)];
  }
  for (const auto& [u, v] : g.arcs()) {
    ++d.out[static_cast<std::size_t>(u)];
    ++d.in[static_cast<std::size_t>(v)];
  }
  if (n == 0) return d;
  const int r = d.undirected[0];
  const int z = d.out[0];
  d.totally_regular = true;
  for (std::size_t v = 0; v < n; ++v) {
    if (d.undirected[v] != r || d.out[v] != z || d.in[v] != z) d.totally_regular = false;
  }
  if (d.totally_regular) {
    d.r = r;
    d.z = z;
  }
  return d;
}

MixedGraph converse(const MixedGraph& g) {
  std::vector<VertexPair> arcs;
  arcs.reserve(g.arcs().size());
  for (const auto& [u, v] : g.arcs()) arcs.emplace_back(v, u);
  return MixedGraph(g.order(), g.edges(), std::move(arcs), g.allows_parallel_arcs());
}

MixedGraph relabel(const MixedGraph& g, const Permutation& p) {
  if (p.size() != g.order()) throw std::invalid_argument("relabel: size mismatch");
  std::vector<VertexPair> edges;
  std::vector<VertexPair> arcs;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(p(u), p(v));
  for (const auto& [u, v] : g.arcs()) arcs.emplace_back(p(u), p(v));
  return MixedGraph(g.order(), std::move(edges), std::move(arcs), g.allows_parallel_arcs());
}

MixedGraph from_permutations(const Permutation& involution, const Permutation& arc_map,
                             bool allow_parallel_arcs) {
  if (involution.size() != arc_map.size()) throw std::invalid_argument("size mismatch");
  if (!involution.is_involution()) throw std::invalid_argument("edge map is not an involution");
  std::vector<VertexPair> edges;
  std::vector<VertexPair> arcs;
  for (int u = 0; u < involution.size(); ++u) {
    if (involution(u) > u) edges.emplace_back(u, involution(u));
    if (arc_map(u) != u) arcs.emplace_back(u, arc_map(u));
  }
  return MixedGraph(involution.size(), std::move(edges), std::move(arcs), allow_parallel_arcs);
}

}  // namespace mixmoore
