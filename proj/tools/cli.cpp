#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "mixmoore/constructions.hpp"
#include "mixmoore/feasibility.hpp"
#include "mixmoore/mixed_graph.hpp"
#include "mixmoore/moore_bounds.hpp"
#include "mixmoore/search.hpp"
#include "mixmoore/spectra.hpp"
#include "mixmoore/verify.hpp"

namespace mixmoore::cli {

namespace {

/// Rejected argument values (as opposed to malformed command lines).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Unreadable or malformed input files.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

MixedGraph read_graph(const std::string& path, const ParseOptions& options, std::istream& in) {
  try {
    if (path == "-") return parse_mgf(in, options);
    std::ifstream file(path);
    if (!file) throw InputError("cannot open '" + path + "'");
    return parse_mgf(file, options);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const GraphError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("not an integer list: '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

struct BoundArgs {
  int r = 0;
  int z = 0;
  int k = 0;
  bool closed_form = false;
  bool layers = false;
};

int cmd_bound(const BoundArgs& a, std::ostream& out) {
  const MoorePlan plan = moore_plan(a.r, a.z, a.k);
  out << plan.moore_bound << '\n';
  if (a.layers) {
    for (std::size_t i = 0; i < plan.layers.size(); ++i) {
      out << "layer " << i + 1 << ": " << plan.layers[i].by_edge << " by edges, " << plan.layers[i].by_arc
          << " by arcs\n";
    }
  }
  if (a.closed_form) {
    try {
      out << "closed form = " << std::setprecision(15) << moore_bound_closed(a.r, a.z, a.k) << '\n';
    } catch (const DegenerateClosedForm& e) {
      out << "closed form = degenerate (" << e.what() << ")\n";
    }
  }
  return kOk;
}

struct FeasibleArgs {
  std::string r_list = "4,6,8,10,12,14,16,18,20,22";
  int z_max = 100;
  int count = 4;
  bool csv = false;
};

int cmd_feasible(const FeasibleArgs& a, std::ostream& out) {
  if (a.count < 1) throw UsageError("--count must be positive");
  auto rows = feasibility_table(parse_int_list(a.r_list), a.z_max);
  for (auto& row : rows) {
    const std::size_t keep = std::min<std::size_t>(row.z_values.size(), static_cast<std::size_t>(a.count));
    row.z_values.resize(keep);
    row.n_values.resize(keep);
  }
  out << (a.csv ? feasibility_table_csv(rows) : format_feasibility_table(rows));
  return kOk;
}

struct VerifyArgs {
  std::string file;
  int k = 0;
  std::string format = "text";
  bool promote_digons = false;
  bool allow_parallel = false;
};

int cmd_verify(const VerifyArgs& a, std::istream& in, std::ostream& out) {
  const MixedGraph g = read_graph(a.file, {a.promote_digons, a.allow_parallel}, in);
  const AlmostMooreReport report = verify_almost_moore(g, a.k);
  out << (a.format == "kv" ? format_report_kv(report) : format_report(report));
  if (!report.almost_moore() && is_moore_mixed_graph(g, a.k)) {
    out << (a.format == "kv" ? "moore_graph=true\n" : "moore graph = yes (order M(r,z,k), walk counts J)\n");
  }
  return report.almost_moore() ? kOk : kNotAlmostMoore;
}

struct ConstructArgs {
  std::string name;
  std::vector<int> params;
  bool dot = false;
  int line = 0;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
  MixedGraph g;
  try {
    g = family(a.name, a.params);
    for (int i = 0; i < a.line; ++i) g = line_digraph(g).graph;
  } catch (const FamilyError& e) {
    throw UsageError(e.what());
  } catch (const GraphError& e) {
    throw UsageError(e.what());
  }
  out << (a.dot ? to_dot(g, a.name) : to_mgf(g));
  return kOk;
}

struct SpectrumArgs {
  std::string file;
  bool allow_parallel = false;
};

int cmd_spectrum(const SpectrumArgs& a, std::istream& in, std::ostream& out) {
  const MixedGraph g = read_graph(a.file, {false, a.allow_parallel}, in);
  Polynomial p;
  try {
    p = char_poly(g);
  } catch (const SizeCapExceeded& e) {
    throw InputError(e.what());
  }
  out << "order = " << g.order() << '\n';
  out << "coefficients = " << p.coefficient_list() << '\n';
  out << "char poly = " << p.to_string() << '\n';
  for (int z = 1;; ++z) {
    const SpectrumPattern pattern = diameter3_pattern(z);
    if (pattern.degree() > g.order()) break;
    if (pattern.degree() == g.order() && pattern.expand() == p) {
      out << "factored = " << pattern.to_string() << '\n';
    }
  }
  const TraceReport t = trace_identities(g);
  out << "tr A^0 = " << t.trace0 << '\n';
  out << "tr A = " << t.trace1 << '\n';
  out << "tr A^2 = " << t.trace2 << '\n';
  return kOk;
}

struct CensusArgs {
  int r = 0;
  int z = 0;
  int k = 0;
  int n = 0;
  int threads = 1;
  bool no_symmetry = false;
  bool allow_any_r = false;
  std::int64_t node_budget = 1'000'000'000;
  double time_budget = 600.0;
};

int cmd_census(const CensusArgs& a, std::ostream& out) {
  SearchSpec spec;
  spec.r = a.r;
  spec.z = a.z;
  spec.k = a.k;
  if (a.n > 0) spec.n = a.n;
  spec.threads = a.threads;
  spec.symmetry_reduction = !a.no_symmetry;
  spec.allow_any_r = a.allow_any_r;
  spec.node_budget = a.node_budget;
  spec.time_budget_seconds = a.time_budget;
  try {
    out << format_census(census(spec));
  } catch (const SearchEnvelopeError& e) {
    throw UsageError(e.what());
  }
  return kOk;
}

int cmd_identities(std::ostream& out) {
  const CheckReport lemma = lemma_rzp_suite();
  const CheckReport algebra = algebra_membership();
  out << "# H-graph identities\n" << lemma.to_string();
  out << "# adjacency algebra expressions\n" << algebra.to_string();
  const bool all = lemma.all_held() && algebra.all_held();
  out << "all held = " << (all ? "yes" : "no") << '\n';
  return all ? kOk : kNotAlmostMoore;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Moore bounds, verification and search for mixed graphs", "mixmoore"};
  app.require_subcommand(1);

  BoundArgs bound;
  auto* bound_cmd = app.add_subcommand("bound", "Moore bound M(r,z,k)");
  bound_cmd->add_option("-r", bound.r, "undirected degree")->required();
  bound_cmd->add_option("-z", bound.z, "directed degree")->required();
  bound_cmd->add_option("-k", bound.k, "diameter")->required();
  bound_cmd->add_flag("--closed-form", bound.closed_form, "also print the closed form");
  bound_cmd->add_flag("--layers", bound.layers, "print the Moore tree layers");

  FeasibleArgs feasible;
  auto* feasible_cmd = app.add_subcommand("feasible", "diameter-2 feasibility table");
  feasible_cmd->add_option("--r-list", feasible.r_list, "comma-separated r values")->capture_default_str();
  feasible_cmd->add_option("--z-max", feasible.z_max, "largest z examined")->capture_default_str();
  feasible_cmd->add_option("--count", feasible.count, "admissible z values shown per row")->capture_default_str();
  feasible_cmd->add_flag("--csv", feasible.csv, "CSV output");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "check an MGF graph for the almost Moore property");
  verify_cmd->add_option("file", verify.file, "MGF file, - for standard input")->required();
  verify_cmd->add_option("-k", verify.k, "diameter")->required();
  verify_cmd->add_option("--format", verify.format, "text or kv")
      ->check(CLI::IsMember({"text", "kv"}))
      ->capture_default_str();
  verify_cmd->add_flag("--promote-digons", verify.promote_digons, "read opposite arcs as an edge");
  verify_cmd->add_flag("--allow-parallel", verify.allow_parallel, "accept parallel arcs");

  ConstructArgs construct;
  auto* construct_cmd = app.add_subcommand("construct", "write a named graph as MGF");
  construct_cmd->add_option("name", construct.name, "family name")->required();
  construct_cmd->add_option("params", construct.params, "integer parameters");
  construct_cmd->add_flag("--dot", construct.dot, "DOT output");
  construct_cmd->add_option("--line", construct.line, "apply the line digraph this many times")
      ->check(CLI::Range(0, 4));

  SpectrumArgs spectrum;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "characteristic polynomial of an MGF graph");
  spectrum_cmd->add_option("file", spectrum.file, "MGF file, - for standard input")->required();
  spectrum_cmd->add_flag("--allow-parallel", spectrum.allow_parallel, "accept parallel arcs");

  CensusArgs census_args;
  auto* census_cmd = app.add_subcommand("census", "isomorph-free search for almost Moore mixed graphs");
  census_cmd->add_option("-r", census_args.r, "undirected degree")->required();
  census_cmd->add_option("-z", census_args.z, "directed degree")->required();
  census_cmd->add_option("-k", census_args.k, "diameter")->required();
  census_cmd->add_option("-n", census_args.n, "order, M(r,z,k) - 1 by default");
  census_cmd->add_option("--threads", census_args.threads, "worker threads")->capture_default_str();
  census_cmd->add_flag("--no-symmetry", census_args.no_symmetry, "try every labelled undirected part");
  census_cmd->add_flag("--allow-any-r", census_args.allow_any_r, "allow r != 1 for k >= 3");
  census_cmd->add_option("--node-budget", census_args.node_budget)->capture_default_str();
  census_cmd->add_option("--time-budget", census_args.time_budget, "seconds")->capture_default_str();

  auto* identities_cmd = app.add_subcommand("identities", "matrix identities of the H graphs");

  std::vector<std::string> argv_store{"mixmoore"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*bound_cmd) return cmd_bound(bound, out);
    if (*feasible_cmd) return cmd_feasible(feasible, out);
    if (*verify_cmd) return cmd_verify(verify, in, out);
    if (*construct_cmd) return cmd_construct(construct, out);
    if (*spectrum_cmd) return cmd_spectrum(spectrum, in, out);
    if (*census_cmd) return cmd_census(census_args, out);
    if (*identities_cmd) return cmd_identities(out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kUsage;
}

}  // namespace mixmoore::cli
