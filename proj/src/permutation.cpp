#include "mixmoore/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace mixmoore {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("images do not form a bijection");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(static_cast<std::size_t>(n), -1);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int from = cycle[i];
      const int to = cycle[(i + 1) % cycle.size()];
      if (from < 0 || from >= n || to < 0 || to >= n) {
        throw std::invalid_argument("cycle element out of range");
      }
      if (images[static_cast<std::size_t>(from)] != -1) {
        throw std::invalid_argument("element " + std::to_string(from) + " appears twice");
      }
      images[static_cast<std::size_t>(from)] = to;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (images[static_cast<std::size_t>(i)] == -1) images[static_cast<std::size_t>(i)] = i;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::parse_cycles(int n, std::string_view text) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    const std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos) throw std::invalid_argument("unterminated cycle");
    const std::string_view body = text.substr(pos + 1, close - pos - 1);
    std::vector<int> cycle;
    const bool separated = body.find_first_of(" ,\t") != std::string_view::npos;
    if (separated) {
      std::string tokens(body);
      std::replace(tokens.begin(), tokens.end(), ',', ' ');
      std::istringstream in(tokens);
      int v = 0;
      while (in >> v) cycle.push_back(v);
      if (!in.eof()) throw std::invalid_argument("bad token in cycle notation");
    } else {
      for (char c : body) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          throw std::invalid_argument("bad character in cycle notation");
        }
        cycle.push_back(c - '0');
      }
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    pos = close + 1;
  }
  return from_cycles(n, cycles);
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>((*this)(i))] = i;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> images(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) images[static_cast<std::size_t>(i)] = p(q(i));
  return Permutation(std::move(images));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 0; start < size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    for (int v = start; !seen[static_cast<std::size_t>(v)]; v = (*this)(v)) {
      seen[static_cast<std::size_t>(v)] = true;
      cycle.push_back(v);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<int> Permutation::cycle_structure() const {
  std::vector<int> m(images_.size() + 1, 0);
  for (const auto& cycle : cycles()) ++m[cycle.size()];
  return m;
}

std::vector<int> Permutation::fixed_points() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if ((*this)(i) == i) out.push_back(i);
  }
  return out;
}

bool Permutation::is_identity() const { return static_cast<int>(fixed_points().size()) == size(); }

bool Permutation::is_involution() const {
  for (int i = 0; i < size(); ++i) {
    if ((*this)((*this)(i)) != i) return false;
  }
  return true;
}

std::string Permutation::to_cycle_string() const {
  const bool compact = size() <= 10;
  std::string out;
  for (const auto& cycle : cycles()) {
    if (cycle.size() == 1) continue;
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (!compact && i > 0) out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::string format_cycle_structure(const std::vector<int>& structure) {
  std::string out;
  for (std::size_t len = 1; len < structure.size(); ++len) {
    if (structure[len] == 0) continue;
    if (!out.empty()) out += ' ';
    out += "m" + std::to_string(len) + "=" + std::to_string(structure[len]);
  }
  return out;
}

}  // namespace mixmoore
