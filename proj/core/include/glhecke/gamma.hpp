#pragma once

// The parameter map Gamma_{n,k} from level >= k real parameters to Hecke
// parameters (or zero), and the standard-module data it predicts.

#include <cstdint>
#include <optional>
#include <vector>

#include "glhecke/hecke_params.hpp"
#include "glhecke/real_params.hpp"

namespace glhecke {

/// Zero when the level exceeds k, otherwise a Hecke parameter.
struct GammaResult {
  std::optional<HeckeParam> param;

  [[nodiscard]] bool is_zero() const { return !param.has_value(); }
};

/// Throws std::domain_error when level(gamma) < k.
GammaResult gamma(const RealParam& param, int k);

/// The factor-order image before re-sorting: sign factors dropped, triv:nu to
/// {nu}, gl2:l:nu to the length-l segment centred at nu. Requires level == k.
Multisegment gamma_factor_order(const RealParam& param, int k);

/// k! / prod lev_i! when level == k, 0 when level > k.
std::int64_t dimension_std(const RealParam& param, int k);

/// Levels of the non-sign factors, in factor order.
struct WStructure {
  std::vector<int> composition;

  /// Dimension of the sign representation of prod S_{c_i} induced to S_k.
  [[nodiscard]] std::int64_t induced_dimension() const;
};

/// Requires level == k; throws std::domain_error otherwise.
WStructure w_structure(const RealParam& param, int k);

/// Closed-form eigenvalue of epsilon_l on the cyclic vector, l = 1..k:
/// nu'_p - (lev_p - 1)/2 + (l - prec(l) - 1), p the block containing l.
std::vector<Scalar> closed_form_eigenvalues(const RealParam& param, int k);

/// True iff closed_form_eigenvalues agrees coordinate-wise with the block
/// coordinates of the factor-order image. Requires level == k.
bool eigenvalue_identity(const RealParam& param, int k);

struct BijectionPair {
  RealParam real;
  HeckeParam hecke;
};

/// Level-n classes at lambda compared with the multisegment classes M(lambda).
struct BijectionReport {
  IntegralWeight lambda;
  std::vector<RealParam> level_n;
  std::vector<HeckeParam> multisegments;
  std::vector<BijectionPair> pairs;      ///< every level-n class and its image
  std::vector<HeckeParam> missing;       ///< classes in M(lambda) with no preimage
  std::vector<HeckeParam> collisions;    ///< images hit more than once
  std::vector<BijectionPair> escapes;    ///< images whose support differs from lambda
  bool bijection = false;
};

BijectionReport verify_bijection_level_n(const IntegralWeight& lambda);

std::int64_t factorial(int n);

}  // namespace glhecke
