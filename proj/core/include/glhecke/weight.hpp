#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "glhecke/exact.hpp"

namespace glhecke {

/// A weakly decreasing vector of integers: the integral infinitesimal (or
/// central) characters that the enumeration routines accept.
class IntegralWeight {
 public:
  IntegralWeight() = default;
  /// Throws std::invalid_argument on a non-integral or non-decreasing entry.
  explicit IntegralWeight(std::vector<std::int64_t> entries);
  static IntegralWeight from_rationals(std::span<const Rational> entries);
  static IntegralWeight from_rationals(std::span<const Scalar> entries);
  /// Comma separated list, e.g. "4,4,3,3,2"; entries may be written "a/b"
  /// but must be integral. Error messages name the offending position.
  static IntegralWeight parse(std::string_view text);

  /// (n-1, n-2, ..., 0): n consecutive distinct integers. Equal to rho_n up to a
  /// central shift, and to rho_n itself when translated by -(n-1)/2.
  static IntegralWeight consecutive(int n);

  [[nodiscard]] const std::vector<std::int64_t>& entries() const { return entries_; }
  [[nodiscard]] int size() const { return static_cast<int>(entries_.size()); }
  [[nodiscard]] std::vector<Scalar> as_scalars() const;
  /// Distinct values in decreasing order, with their multiplicities.
  [[nodiscard]] std::vector<std::pair<std::int64_t, int>> columns() const;
  [[nodiscard]] std::string str() const;

  friend bool operator==(const IntegralWeight&, const IntegralWeight&) = default;

 private:
  std::vector<std::int64_t> entries_;
};

/// rho = ((n-1)/2, (n-3)/2, ..., -(n-1)/2).
std::vector<Scalar> rho(int n);

/// All weakly decreasing length-n vectors with entries in [lo, hi].
std::vector<IntegralWeight> weights_in_window(int n, std::int64_t lo, std::int64_t hi);

/// Sorts a multiset of scalars into the canonical (descending) order.
std::vector<Scalar> sorted_multiset(std::vector<Scalar> values);

}  // namespace glhecke
