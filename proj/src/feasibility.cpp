#include "mixmoore/feasibility.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "mixmoore/moore_bounds.hpp"

namespace mixmoore {
namespace {

std::optional<int> exact_sqrt(std::int64_t x) {
  if (x < 0) return std::nullopt;
  auto root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
  while (root * root > x) --root;
  while ((root + 1) * (root + 1) <= x) ++root;
  if (root * root != x) return std::nullopt;
  return static_cast<int>(root);
}

bool divides(std::int64_t d, std::int64_t x) { return d != 0 && x % d == 0; }

std::int64_t branch_a_value(std::int64_t z) { return (4 * z + 1) * (4 * z - 7); }
std::int64_t branch_b_value(std::int64_t z) { return 16 * z * z + 40 * z - 23; }

void check_scope(int r, int z) {
  if (r <= 2 || r % 2 != 0) {
    throw OutOfTheoremScope("diameter-2 screen needs even r > 2, got r=" + std::to_string(r));
  }
  if (z < 1) throw OutOfTheoremScope("diameter-2 screen needs z >= 1");
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

template <typename T>
std::vector<std::string> to_strings(const std::vector<T>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(std::to_string(x));
  return out;
}

std::string opt_text(const std::optional<int>& x) { return x ? std::to_string(*x) : "-"; }

}  // namespace

std::optional<int> c1_candidate(int r) { return exact_sqrt(4LL * r + 1); }
std::optional<int> c2_candidate(int r) { return exact_sqrt(4LL * r - 7); }

FeasibilityWitness diameter2_feasible(int r, int z) {
  check_scope(r, z);
  FeasibilityWitness w{r, z, Diameter2Branch::kNone, {}, {}};
  if (const auto c1 = c1_candidate(r); c1 && divides(*c1, branch_a_value(z))) {
    w.branch = Diameter2Branch::kA;
    w.c = c1;
  } else if (const auto c2 = c2_candidate(r); c2 && divides(*c2, branch_b_value(z))) {
    w.branch = Diameter2Branch::kB;
    w.c = c2;
  }
  if (w.branch != Diameter2Branch::kNone) w.n = moore_bound(r, z, 2) - 1;
  return w;
}

std::vector<FeasibilityRow> feasibility_table(const std::vector<int>& r_values, int z_limit) {
  std::vector<FeasibilityRow> rows;
  for (int r : r_values) {
    check_scope(r, 1);
    FeasibilityRow row;
    row.r = r;
    row.c1 = c1_candidate(r);
    row.c2 = c2_candidate(r);
    for (int z = 1; z <= z_limit; ++z) {
      const auto w = diameter2_feasible(r, z);
      if (w.branch == Diameter2Branch::kNone) continue;
      row.z_values.push_back(z);
      row.n_values.push_back(*w.n);
    }
    // Both divisibility conditions are periodic in z with period c, so one
    // period decides whether any z at all is admissible.
    const int period = row.c1.value_or(row.c2.value_or(0));
    bool any = false;
    for (int z = 1; z <= period && !any; ++z) {
      any = diameter2_feasible(r, z).branch != Diameter2Branch::kNone;
    }
    row.excluded = !any;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_feasibility_table(const std::vector<FeasibilityRow>& rows) {
  std::ostringstream out;
  out << std::left << std::setw(4) << "r" << std::setw(4) << "c1" << std::setw(4) << "c2"
      << std::setw(24) << "z" << std::setw(32) << "n" << "Existence\n";
  for (const auto& row : rows) {
    const bool show = !row.excluded;
    const std::string z_text = show ? join(to_strings(row.z_values), ",") + ",..." : "-";
    const std::string n_text = show ? join(to_strings(row.n_values), ",") + ",..." : "-";
    out << std::left << std::setw(4) << row.r << std::setw(4) << opt_text(row.c1) << std::setw(4)
        << opt_text(row.c2) << std::setw(24) << z_text << std::setw(32) << n_text
        << (row.excluded ? "Non-existent" : "Unknown") << "\n";
  }
  return out.str();
}

std::string feasibility_table_csv(const std::vector<FeasibilityRow>& rows) {
  std::string out = "r,c1,c2,z,n,existence\n";
  for (const auto& row : rows) {
    out += std::to_string(row.r) + "," + (row.c1 ? std::to_string(*row.c1) : "") + "," +
           (row.c2 ? std::to_string(*row.c2) : "") + ",\"" + join(to_strings(row.z_values), " ") +
           "\",\"" + join(to_strings(row.n_values), " ") + "\"," +
           (row.excluded ? "Non-existent" : "Unknown") + "\n";
  }
  return out;
}

MultiplicityCheck multiplicity_feasible(int z) {
  if (z < 1) throw std::domain_error("multiplicity check needs z >= 1");
  MultiplicityCheck m;
  m.z = z;
  const std::int64_t w = z + 1;
  m.n = w * w * w + w * w - w;
  m.b = w;
  m.c = w;
  m.a = m.n - 1 - m.b - m.c;
  m.trace_multiplicity = static_cast<std::int64_t>(z) * (z + 1) * (z + 2) / 3;
  m.feasible = m.trace_multiplicity == m.b;
  return m;
}

}  // namespace mixmoore
