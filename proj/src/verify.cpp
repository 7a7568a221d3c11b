#include "mixmoore/verify.hpp"

#include <sstream>

#include "mixmoore/distances.hpp"
#include "mixmoore/moore_bounds.hpp"
#include "mixmoore/tree_walks.hpp"

namespace mixmoore {
namespace {

struct Regular {
  int r;
  int z;
};

Regular require_regular_simple(const MixedGraph& g, const char* op) {
  if (!g.is_simple()) throw PreconditionError(std::string(op) + ": graph has parallel arcs");
  const DegreeReport d = degree_report(g);
  if (!d.totally_regular) throw PreconditionError(std::string(op) + ": graph is not totally regular");
  return {*d.r, *d.z};
}

void require_diameter(const MixedGraph& g, int k, const char* op) {
  const DistanceData d = distances(g);
  if (!d.diameter || *d.diameter != k) {
    throw PreconditionError(std::string(op) + ": diameter is " +
                            (d.diameter ? std::to_string(*d.diameter) : "infinite") +
                            ", expected " + std::to_string(k));
  }
}

// Reads sigma from W - J, where W counts tree walks of length <= k.
void read_repeats(const IntMatrix& remainder, RepeatExtraction& out) {
  const Eigen::Index n = remainder.rows();
  for (Eigen::Index u = 0; u < n; ++u) {
    int ones = 0;
    for (Eigen::Index v = 0; v < n; ++v) {
      const BigInt& x = remainder(u, v);
      if (x.sign() < 0) {
        out.failed_stage = VerifyStage::kDiameter;
        out.failing_row = static_cast<int>(u);
        out.failure = "row " + std::to_string(u) + ": vertex " + std::to_string(v) +
                      " is not reached by a walk of length <= k";
        return;
      }
      if (x == BigInt(1)) {
        ++ones;
      } else if (!x.is_zero()) {
        ones = -1;
        break;
      }
    }
    if (ones != 1) {
      out.failed_stage = VerifyStage::kEquation;
      out.failing_row = static_cast<int>(u);
      out.failure = "row " + std::to_string(u) + ": surplus over J is not a single repeat";
      return;
    }
  }
  out.repeat = as_permutation(remainder);
  if (!out.repeat) {
    out.failed_stage = VerifyStage::kEquation;
    out.failure = "repeat map is not a bijection";
  }
}

}  // namespace

const char* stage_name(VerifyStage stage) {
  switch (stage) {
    case VerifyStage::kSimple: return "simple";
    case VerifyStage::kRegularity: return "regularity";
    case VerifyStage::kOrder: return "order";
    case VerifyStage::kDiameter: return "diameter";
    case VerifyStage::kEquation: return "equation";
    case VerifyStage::kPassed: return "passed";
  }
  return "unknown";
}

RepeatExtraction extract_repeats(const MixedGraph& g, int k) {
  RepeatExtraction out;
  if (k < 1) throw std::invalid_argument("extract_repeats: k must be >= 1");
  if (!g.is_simple()) {
    out.failed_stage = VerifyStage::kSimple;
    out.failure = "graph has parallel arcs";
    return out;
  }
  const DegreeReport d = degree_report(g);
  if (!d.totally_regular || *d.r + *d.z < 1) {
    out.failed_stage = VerifyStage::kRegularity;
    out.failure = "graph is not totally regular";
    return out;
  }
  const int r = *d.r;
  const int z = *d.z;
  const std::int64_t expected = moore_bound(r, z, k) - 1;
  if (g.order() != expected) {
    out.failed_stage = VerifyStage::kOrder;
    out.failure = "order " + std::to_string(g.order()) + " differs from M(r,z,k) - 1 = " +
                  std::to_string(expected);
    return out;
  }

  const auto s = adjacency_split<BigInt>(g);
  const Eigen::Index n = g.order();
  const IntMatrix identity = identity_matrix<BigInt>(n);
  IntMatrix walks;
  if (k == 2) {
    walks = power_sum(s.total, 2) - BigInt(r) * identity;
  } else if (k == 3 && r == 1) {
    walks = power_sum(s.total, 3) - identity - s.total - s.arcs;
  } else {
    walks = tree_walk_total(s, k);
    out.generalized = true;
  }
  read_repeats(walks - ones_matrix<BigInt>(n), out);
  return out;
}

Diameter2Check check_eq_diameter2(const MixedGraph& g) {
  const Regular reg = require_regular_simple(g, "check_eq_diameter2");
  require_diameter(g, 2, "check_eq_diameter2");
  const auto s = adjacency_split<BigInt>(g);
  const Eigen::Index n = g.order();
  Diameter2Check out;
  out.remainder = power_sum(s.total, 2) - ones_matrix<BigInt>(n) -
                  BigInt(reg.r) * identity_matrix<BigInt>(n);
  out.repeat = as_permutation(out.remainder);
  out.held = out.repeat.has_value();
  return out;
}

Diameter3Check check_eq_diameter3(const MixedGraph& g) {
  const Regular reg = require_regular_simple(g, "check_eq_diameter3");
  if (reg.r != 1) throw PreconditionError("check_eq_diameter3: requires r = 1");
  require_diameter(g, 3, "check_eq_diameter3");
  const auto s = adjacency_split<BigInt>(g);
  const Eigen::Index n = g.order();
  const IntMatrix& a = s.total;
  const IntMatrix identity = identity_matrix<BigInt>(n);
  const IntMatrix j = ones_matrix<BigInt>(n);
  const IntMatrix a2 = a * a;
  const IntMatrix a3 = a2 * a;

  Diameter3Check out;
  out.remainder = a2 + a3 - j - s.arcs;
  out.repeat = as_permutation(out.remainder);
  out.held = out.repeat.has_value();
  out.simplified_held = (a3 + a2 - a) == j;

  const IntMatrix two_step = a2 - identity;
  const IntMatrix three_step = a3 - a - s.arcs;
  const auto tree = tree_walk_counts(s, 3);
  out.tree_walk_identities_held = tree[2] == two_step && tree[3] == three_step;

  const DistanceData d = distances(g);
  const IntMatrix layer2 = d.layers.at(2).cast<BigInt>();
  const IntMatrix layer3 = d.layers.at(3).cast<BigInt>();
  const IntMatrix surplus2 = two_step - layer2;
  const IntMatrix surplus3 = three_step - layer3;
  auto non_negative = [](const IntMatrix& m) {
    for (Eigen::Index i = 0; i < m.size(); ++i) {
      if (m(i).sign() < 0) return false;
    }
    return true;
  };
  out.distance_split_held = out.held && non_negative(surplus2) && non_negative(surplus3) &&
                            (surplus2 + surplus3) == out.remainder;
  return out;
}

bool is_automorphism(const MixedGraph& g, const Permutation& p) {
  if (p.size() != g.order()) throw std::invalid_argument("is_automorphism: size mismatch");
  const IntMatrix a = adjacency_matrix<BigInt>(g);
  const IntMatrix pm = permutation_matrix<BigInt>(p);
  return commutes(pm, a);
}

AlmostMooreReport verify_almost_moore(const MixedGraph& g, int k) {
  AlmostMooreReport rep;
  rep.k = k;
  rep.degrees = degree_report(g);
  const DistanceData dist = distances(g);
  rep.diameter = dist.diameter;
  if (rep.degrees.totally_regular && *rep.degrees.r + *rep.degrees.z >= 1) {
    rep.expected_order = moore_bound(*rep.degrees.r, *rep.degrees.z, k) - 1;
    rep.order_ok = g.order() == rep.expected_order;
  }

  if (!g.is_simple()) {
    rep.stage = VerifyStage::kSimple;
    rep.failure = "graph has parallel arcs";
    return rep;
  }
  if (!rep.degrees.totally_regular || *rep.degrees.r + *rep.degrees.z < 1) {
    rep.stage = VerifyStage::kRegularity;
    rep.failure = "graph is not totally regular";
    return rep;
  }
  if (!rep.order_ok) {
    rep.stage = VerifyStage::kOrder;
    rep.failure = "order " + std::to_string(g.order()) + " differs from M(r,z,k) - 1 = " +
                  std::to_string(rep.expected_order);
    return rep;
  }
  if (!rep.diameter || *rep.diameter != k) {
    rep.stage = VerifyStage::kDiameter;
    rep.failure = "diameter is " + (rep.diameter ? std::to_string(*rep.diameter) : "infinite") +
                  ", expected " + std::to_string(k);
    return rep;
  }

  const int r = *rep.degrees.r;
  if (k == 2) {
    rep.equations.push_back({"I+A+A^2=J+rI+P", check_eq_diameter2(g).held});
  } else if (k == 3 && r == 1) {
    const Diameter3Check c = check_eq_diameter3(g);
    rep.equations.push_back({"A^2+A^3=J+Z+P", c.held});
    rep.equations.push_back({"-A+A^2+A^3=J", c.simplified_held});
    rep.equations.push_back({"tree walks: T2=A^2-I, T3=A^3-A-Z", c.tree_walk_identities_held});
    rep.equations.push_back({"(A^2-I-A_2)+(A^3-A-Z-A_3)=P", c.distance_split_held});
  }

  const RepeatExtraction ex = extract_repeats(g, k);
  rep.generalized = ex.generalized;
  if (ex.generalized) {
    rep.equations.push_back({"tree-walk total over lengths <= k = J+P (generalized)",
                             ex.repeat.has_value()});
  }
  if (!ex.repeat) {
    rep.stage = ex.failed_stage;
    rep.failure = ex.failure;
    return rep;
  }
  rep.stage = VerifyStage::kPassed;
  rep.repeat = ex.repeat;
  rep.cycle_structure = ex.repeat->cycle_structure();
  rep.selfrepeats = ex.repeat->fixed_points();
  rep.sigma_is_automorphism = is_automorphism(g, *ex.repeat);
  return rep;
}

std::vector<int> selfrepeats(const AlmostMooreReport& report) {
  if (!report.repeat) return {};
  return report.repeat->fixed_points();
}

bool contradicts_selfrepeat_corollary(const AlmostMooreReport& report) {
  return report.repeat && report.k == 3 && report.degrees.r == 1 && report.repeat->is_identity();
}

bool is_moore_mixed_graph(const MixedGraph& g, int k) {
  if (!g.is_simple()) return false;
  const DegreeReport d = degree_report(g);
  if (!d.totally_regular || *d.r + *d.z < 1) return false;
  if (g.order() != moore_bound(*d.r, *d.z, k)) return false;
  const auto s = adjacency_split<BigInt>(g);
  if (tree_walk_total(s, k) != ones_matrix<BigInt>(g.order())) return false;
  // Degenerate bounds (r = 1, z = 0 gives M = 2 for every k) can be met
  // by graphs of smaller diameter.
  return distances(g).diameter == k;
}

namespace {

std::string list_text(const std::vector<int>& xs) {
  if (xs.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string regularity_text(const DegreeReport& d) {
  if (!d.totally_regular) return "not totally regular";
  return "totally regular (r=" + std::to_string(*d.r) + ", z=" + std::to_string(*d.z) + ")";
}

}  // namespace

std::string format_report(const AlmostMooreReport& rep) {
  std::ostringstream out;
  out << "order = " << rep.degrees.out.size();
  if (rep.expected_order > 0) out << " (M(r,z,k) - 1 = " << rep.expected_order << ")";
  out << "\n";
  out << "degrees = " << regularity_text(rep.degrees) << "\n";
  out << "diameter = " << (rep.diameter ? std::to_string(*rep.diameter) : "infinite") << "\n";
  if (rep.almost_moore()) {
    out << "verdict = almost Moore (" << *rep.degrees.r << "," << *rep.degrees.z << "," << rep.k
        << ")\n";
  } else {
    out << "verdict = not almost Moore (stage " << stage_name(rep.stage) << ": " << rep.failure
        << ")\n";
  }
  if (rep.repeat) {
    out << "sigma = " << rep.repeat->to_cycle_string() << "\n";
    out << "cycle structure = " << format_cycle_structure(rep.cycle_structure) << "\n";
    out << "selfrepeats = " << list_text(rep.selfrepeats) << "\n";
    out << "sigma automorphism = " << (rep.sigma_is_automorphism ? "yes" : "no") << "\n";
    if (contradicts_selfrepeat_corollary(rep)) {
      out << "warning = every vertex is a selfrepeat, impossible for (1,z,3)\n";
    }
  }
  for (const auto& eq : rep.equations) {
    out << "equation " << eq.id << ": " << (eq.held ? "held" : "failed") << "\n";
  }
  if (rep.generalized) {
    out << "note = no closed matrix identity for this k; repeats counted from tree walks\n";
  }
  return out.str();
}

std::string format_report_kv(const AlmostMooreReport& rep) {
  std::ostringstream out;
  out << "order=" << rep.degrees.out.size() << "\n";
  out << "expected_order=" << rep.expected_order << "\n";
  out << "order_ok=" << (rep.order_ok ? "true" : "false") << "\n";
  out << "totally_regular=" << (rep.degrees.totally_regular ? "true" : "false") << "\n";
  if (rep.degrees.totally_regular) {
    out << "r=" << *rep.degrees.r << "\nz=" << *rep.degrees.z << "\n";
  }
  out << "k=" << rep.k << "\n";
  out << "diameter=" << (rep.diameter ? std::to_string(*rep.diameter) : "inf") << "\n";
  out << "almost_moore=" << (rep.almost_moore() ? "true" : "false") << "\n";
  out << "stage=" << stage_name(rep.stage) << "\n";
  if (!rep.failure.empty()) out << "failure=" << rep.failure << "\n";
  if (rep.repeat) {
    out << "sigma=" << rep.repeat->to_cycle_string() << "\n";
    out << "cycle_structure=" << format_cycle_structure(rep.cycle_structure) << "\n";
    out << "selfrepeats=" << list_text(rep.selfrepeats) << "\n";
    out << "sigma_is_automorphism=" << (rep.sigma_is_automorphism ? "true" : "false") << "\n";
  }
  for (const auto& eq : rep.equations) {
    out << "equation[" << eq.id << "]=" << (eq.held ? "held" : "failed") << "\n";
  }
  out << "generalized=" << (rep.generalized ? "true" : "false") << "\n";
  return out.str();
}

}  // namespace mixmoore
