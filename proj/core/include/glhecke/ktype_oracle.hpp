#pragma once

// Brute-force branching of tensor powers of the standard representation of
// GL(n) restricted to O(2)^s x O(1)^m. Used as an oracle for the dimension
// formula: it never looks at levels or factorials.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "glhecke/real_params.hpp"

namespace glhecke {

/// Irreducible representation of O(2): trivial, determinant, or V(j) with
/// SO(2) weights +-j, j >= 1. O(1) slots only ever carry Triv or Sgn.
class O2Label {
 public:
  static O2Label triv() { return O2Label(-1); }
  static O2Label sgn() { return O2Label(0); }
  /// Throws std::invalid_argument for j < 1; V(0) is reducible (see v_expanded).
  static O2Label v(int j);
  /// V(j) for j >= 1; {Triv, Sgn} for j == 0.
  static std::vector<O2Label> v_expanded(int j);

  [[nodiscard]] bool is_triv() const { return code_ == -1; }
  [[nodiscard]] bool is_sgn() const { return code_ == 0; }
  [[nodiscard]] bool is_v() const { return code_ > 0; }
  [[nodiscard]] int j() const { return code_ > 0 ? code_ : 0; }
  [[nodiscard]] int dim() const { return is_v() ? 2 : 1; }
  [[nodiscard]] std::string str() const;

  friend auto operator<=>(const O2Label&, const O2Label&) = default;

 private:
  explicit O2Label(int code) : code_(code) {}
  int code_;
};

/// Multiset of irreducibles in a ⊗ b.
std::vector<O2Label> tensor_o2(const O2Label& a, const O2Label& b);

/// One label per O(2) slot followed by one per O(1) slot.
using SlotTuple = std::vector<O2Label>;

struct ProductDecomposition {
  int s = 0;  ///< number of O(2) slots
  int m = 0;  ///< number of O(1) slots
  std::map<SlotTuple, std::int64_t> multiplicity;

  /// Sum over tuples of (product of label dimensions) * multiplicity.
  [[nodiscard]] std::int64_t total_dimension() const;
  [[nodiscard]] std::int64_t at(const SlotTuple& t) const;
};

/// V^{⊗k} for V = C^{2s+m} restricted to O(2)^s x O(1)^m, where V splits as
/// V(1) on each O(2) slot plus sgn on each O(1) slot.
ProductDecomposition tensor_power_standard(int s, int m, int k);

/// Multiplicity inside V^{⊗k} of the lowest type of (delta* ⊗ sgn) restricted
/// to K ∩ L: V(l) on GL(2) slots, Sgn on trivial GL(1) slots, Triv on sign
/// GL(1) slots. Throws std::domain_error when level < k.
std::int64_t hom_multiplicity(const RealParam& param, int k);

/// The slot tuple hom_multiplicity looks up, O(2) slots first in factor order.
SlotTuple lowest_type_tuple(const RealParam& param);

}  // namespace glhecke
