#pragma once

// Involutions of {0..n-1} with signed fixed points, the moves of a parabolic
// subgroup W_P = prod S_{m_j} on them, and their equivalence classes.
// Positions are 0-based here; text and JSON forms are 1-based.

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "glhecke/weight.hpp"

namespace glhecke {

class SignedInvolution {
 public:
  SignedInvolution() = default;

  /// All fixed points, with the given signs (+1 / -1).
  static SignedInvolution from_signs(const std::vector<int>& signs);
  /// arcs: disjoint position pairs; signs[i] for every position that is
  /// not an arc endpoint (ignored otherwise). Throws std::invalid_argument.
  static SignedInvolution from_arcs(int n, const std::vector<std::pair<int, int>>& arcs,
                                    const std::vector<int>& signs);
  /// Space-separated tokens, one per position: "+", "-", or an arc label
  /// that occurs exactly twice ("+ a b - b a").
  static SignedInvolution parse(std::string_view text);

  [[nodiscard]] int n() const { return static_cast<int>(code_.size()); }
  [[nodiscard]] bool is_fixed(int i) const { return code_[i] < 2; }
  /// Partner of an arc endpoint; i itself for a fixed point.
  [[nodiscard]] int partner(int i) const { return is_fixed(i) ? i : code_[i] - 2; }
  /// +1 / -1 for fixed points, 0 for arc endpoints.
  [[nodiscard]] int sign(int i) const;
  /// Arcs as (i, j) with i < j, sorted.
  [[nodiscard]] std::vector<std::pair<int, int>> arcs() const;
  /// (p, q) = (#arcs + #plus, #arcs + #minus).
  [[nodiscard]] std::pair<int, int> signature() const;

  /// Per position: 0 for +, 1 for -, 2 + partner for an arc endpoint.
  /// Classes take the lexicographically smallest encoding as canonical.
  [[nodiscard]] const std::vector<int>& encoding() const { return code_; }

  /// Inverse of parse(); arcs labelled a, b, ... in order of first endpoint.
  [[nodiscard]] std::string str() const;

  /// Conjugate by the transposition (i, i+1).
  [[nodiscard]] SignedInvolution conjugated(int i) const;

  friend auto operator<=>(const SignedInvolution&, const SignedInvolution&) = default;

 private:
  explicit SignedInvolution(std::vector<int> code) : code_(std::move(code)) {}
  std::vector<int> code_;
};

/// Display label of the index-th arc: a..z, A..Z, then x52, x53, ...
std::string arc_label(int index);

/// Composition (m_1, ..., m_r) of n into consecutive position blocks.
class BlockStructure {
 public:
  explicit BlockStructure(std::vector<int> composition);
  /// Multiplicities of the distinct entries of lambda, largest value first.
  static BlockStructure from_weight(const IntegralWeight& lambda);

  [[nodiscard]] const std::vector<int>& composition() const { return composition_; }
  [[nodiscard]] int n() const { return static_cast<int>(block_.size()); }
  [[nodiscard]] int block_of(int i) const { return block_[i]; }
  /// True when i and i+1 lie in one block, i.e. s_i belongs to W_P.
  [[nodiscard]] bool is_inner(int i) const { return i >= 0 && i + 1 < n() && block_[i] == block_[i + 1]; }

 private:
  std::vector<int> composition_;
  std::vector<int> block_;
};

/// One move of s_i in W_P. Throws std::invalid_argument unless is_inner(i).
SignedInvolution s_action(const SignedInvolution& sigma, int i, const BlockStructure& bs);

class OrbitClass {
 public:
  [[nodiscard]] const SignedInvolution& canonical() const { return *members_.begin(); }
  [[nodiscard]] const std::set<SignedInvolution>& members() const { return members_; }
  [[nodiscard]] bool contains(const SignedInvolution& s) const { return members_.count(s) > 0; }
  [[nodiscard]] int size() const { return static_cast<int>(members_.size()); }

  friend bool operator==(const OrbitClass& a, const OrbitClass& b) { return a.canonical() == b.canonical(); }

 private:
  friend OrbitClass orbit_class(const SignedInvolution&, const BlockStructure&);
  std::set<SignedInvolution> members_;
};

/// Closure of {sigma} under the moves, each move read as an undirected edge.
OrbitClass orbit_class(const SignedInvolution& sigma, const BlockStructure& bs);

}  // namespace glhecke
