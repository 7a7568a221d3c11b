#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mixmoore {

/// A bijection on {0, ..., n-1}.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `images` is a bijection on [0, n).
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  /// Parses cycle notation such as "(01)(23)(4675)" or "(0 1)(10 11)".
  /// Without separators inside a cycle every character is one digit.
  static Permutation parse_cycles(int n, std::string_view text);

  [[nodiscard]] int size() const { return static_cast<int>(images_.size()); }
  [[nodiscard]] int operator()(int v) const { return images_[static_cast<std::size_t>(v)]; }
  [[nodiscard]] const std::vector<int>& images() const { return images_; }

  [[nodiscard]] Permutation inverse() const;
  /// (p * q)(v) = p(q(v)).
  friend Permutation operator*(const Permutation& p, const Permutation& q);

  /// Cycles including fixed points, each starting at its smallest element,
  /// ordered by that element.
  [[nodiscard]] std::vector<std::vector<int>> cycles() const;
  /// Entry i is the number of cycles of length i (entry 0 is always 0).
  [[nodiscard]] std::vector<int> cycle_structure() const;
  [[nodiscard]] std::vector<int> fixed_points() const;
  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] bool is_involution() const;

  /// Cycle notation without fixed points; "()" for the identity.
  [[nodiscard]] std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// "m2=3 m4=1" style rendering of the nonzero entries of a cycle structure.
std::string format_cycle_structure(const std::vector<int>& structure);

}  // namespace mixmoore
