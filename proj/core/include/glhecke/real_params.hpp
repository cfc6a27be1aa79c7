#pragma once

// Langlands parameters for GL(n, R): ordered products of relative discrete
// series of GL(1, R) and GL(2, R), with dominance, equivalence classes, the
// level statistic and enumeration at a fixed integral infinitesimal character.

#include <compare>
#include <string>
#include <vector>

#include "glhecke/exact.hpp"
#include "glhecke/weight.hpp"

namespace glhecke {

enum class Eps { Trivial, Sign };

/// delta(eps, nu) on GL(1,R) or delta(l, nu) on GL(2,R) with l >= 2.
class RdsFactor {
 public:
  enum class Kind { GL1, GL2 };

  static RdsFactor gl1(Eps eps, Scalar nu);
  /// Throws std::invalid_argument if l < 2.
  static RdsFactor gl2(int l, Scalar nu);

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] bool is_gl1() const { return kind_ == Kind::GL1; }
  [[nodiscard]] bool is_gl2() const { return kind_ == Kind::GL2; }
  [[nodiscard]] bool is_sign() const { return is_gl1() && eps_ == Eps::Sign; }
  [[nodiscard]] Eps eps() const { return eps_; }
  [[nodiscard]] int l() const { return l_; }
  [[nodiscard]] const Scalar& nu() const { return nu_; }

  /// 1 for GL(1), 2 for GL(2).
  [[nodiscard]] int size() const { return is_gl1() ? 1 : 2; }
  /// 1 for delta(triv, nu), 0 for delta(sgn, nu), l for delta(l, nu).
  [[nodiscard]] int level() const;
  /// Re(nu) / size: the quantity ordered by dominance.
  [[nodiscard]] Rational slope() const;
  /// {nu} for GL(1); {nu + (l-1)/2, nu - (l-1)/2} for GL(2).
  [[nodiscard]] std::vector<Scalar> infinitesimal_character() const;

  [[nodiscard]] std::string str() const;

  friend bool operator==(const RdsFactor&, const RdsFactor&) = default;

 private:
  RdsFactor(Kind kind, Eps eps, int l, Scalar nu) : kind_(kind), eps_(eps), l_(l), nu_(nu) {}

  Kind kind_;
  Eps eps_;
  int l_;
  Scalar nu_;
};

/// Total order used for canonical forms: slope desc, level desc, Im(nu) asc,
/// trivial before sign. Distinct factors never compare equal.
bool canonical_less(const RdsFactor& a, const RdsFactor& b);

class RealParam {
 public:
  RealParam() = default;
  explicit RealParam(std::vector<RdsFactor> factors) : factors_(std::move(factors)) {}

  [[nodiscard]] const std::vector<RdsFactor>& factors() const { return factors_; }
  /// n = sum of factor sizes.
  [[nodiscard]] int rank() const;
  [[nodiscard]] int level() const;
  [[nodiscard]] int gl2_count() const;
  [[nodiscard]] int sign_count() const;
  /// Multiset union of factor infinitesimal characters, sorted descending.
  [[nodiscard]] std::vector<Scalar> infinitesimal_character() const;
  [[nodiscard]] bool is_dominant() const;
  /// Canonical representative of the equivalence class; throws
  /// std::invalid_argument when the input ordering is not dominant.
  [[nodiscard]] RealParam canonical_class() const;

  [[nodiscard]] std::string str() const;

  friend bool operator==(const RealParam&, const RealParam&) = default;
  /// Deterministic total order on parameters (used for sorted enumeration).
  friend bool operator<(const RealParam& a, const RealParam& b);

 private:
  std::vector<RdsFactor> factors_;
};

/// All equivalence classes with infinitesimal character lambda and level at
/// least min_level, as canonical representatives in a deterministic order.
std::vector<RealParam> enumerate_real_params(const IntegralWeight& lambda, int min_level);

}  // namespace glhecke
