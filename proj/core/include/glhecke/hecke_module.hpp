#pragma once

// Explicit matrix realisations of standard modules H_k ⊗_{H_P} (St ⊗ C_nu)
// of the graded Hecke algebra of gl(k), with relation checks, central
// characters, intertwining operators and Langlands quotients.
//
// Conventions: s_i (0-based i = 0..k-2) is the reflection in
// alpha_i = e_i - e_{i+1}; eps_j (j = 0..k-1) are the coordinate functions;
// the defining cross relation is s_i eps - s_i(eps) s_i = <alpha_i, eps>.

#include <string>
#include <vector>

#include "glhecke/hecke_params.hpp"
#include "glhecke/matrix.hpp"

namespace glhecke {

/// One-line notation of a permutation of {0, ..., k-1}.
using Permutation = std::vector<int>;

/// Matrices of the generators s_0..s_{k-2} and eps_0..eps_{k-1}.
struct ModuleMatrices {
  int k = 0;
  std::vector<Matrix> s;
  std::vector<Matrix> eps;

  [[nodiscard]] int dim() const { return s.empty() ? (eps.empty() ? 0 : eps.front().rows()) : s.front().rows(); }
};

class StandardModule {
 public:
  /// Induced module for an arbitrary ordering of the segments (the
  /// dominance condition is not required here).
  static StandardModule build(const Multisegment& ordered);

  [[nodiscard]] const Multisegment& param() const { return param_; }
  [[nodiscard]] int k() const { return matrices_.k; }
  [[nodiscard]] int dim() const { return static_cast<int>(basis_.size()); }
  /// Minimal-length representatives of S_k / prod S_{L_i}, basis order.
  [[nodiscard]] const std::vector<Permutation>& basis() const { return basis_; }
  [[nodiscard]] const ModuleMatrices& matrices() const { return matrices_; }
  /// Block sizes L_1, ..., L_r.
  [[nodiscard]] std::vector<int> composition() const;
  /// Weight by which eps acts on the inducing line: block coordinates.
  [[nodiscard]] const std::vector<Scalar>& inducing_weight() const { return weight_; }
  /// Index in basis() of s_{i1} ... s_{ir} applied to the identity coset, or -1.
  [[nodiscard]] int index_of(const Permutation& w) const;

 private:
  Multisegment param_;
  std::vector<Permutation> basis_;
  std::vector<Scalar> weight_;
  ModuleMatrices matrices_;
};

StandardModule build_standard_module(const HeckeParam& hp);
StandardModule build_standard_module(const Multisegment& ordered);

/// Lexicographically smallest reduced word (0-based letters) of w, read left
/// to right: w = s_{word[0]} s_{word[1]} ...
std::vector<int> reduced_word(const Permutation& w);
int permutation_length(const Permutation& w);

struct RelationCheck {
  bool ok = true;
  std::vector<std::string> failures;
};

/// s_i^2 = 1, braid relations, [eps_a, eps_b] = 0 and the cross relations,
/// all as exact matrix identities.
RelationCheck check_relations(const ModuleMatrices& m);
bool verify_relations(const ModuleMatrices& m);

struct CentralCharacterCheck {
  bool ok = false;
  std::vector<Scalar> chi;             ///< expected central character, sorted
  std::vector<Scalar> elementary;      ///< scalars by which e_1..e_k act (when scalar)
  std::string failure;
};

/// Evaluates every elementary symmetric polynomial e_d(eps_0..eps_{k-1})
/// and compares with e_d(chi), chi the inducing block coordinates.
CentralCharacterCheck central_character_of_module(const StandardModule& m);

/// e_1..e_k of a list of scalars.
std::vector<Scalar> elementary_symmetric(const std::vector<Scalar>& values);

struct IntertwinerSpace {
  int dimension = 0;
  std::vector<Matrix> basis;  ///< each maps from.dim() to to.dim() coordinates
};

/// Hom_H(from, to). A map out of an induced module is fixed by the image x
/// of the generating line, which must satisfy s x = -x for s in the inducing
/// Young subgroup and eps_j x = weight_j x; T is then rebuilt on the coset
/// basis and checked against every generator.
IntertwinerSpace intertwiner_space(const StandardModule& from, const StandardModule& to);

/// Same space obtained by solving T A_g = B_g T for all generators g
/// directly (dim(from) * dim(to) unknowns). Intended for small modules.
IntertwinerSpace intertwiner_space_direct(const StandardModule& from, const StandardModule& to);

struct QuotientModule {
  int dim = 0;
  ModuleMatrices matrices;
  int intertwiner_dimension = 0;
};

/// Langlands quotient of std(hp): the image of the intertwiner
/// std(hp) -> std(reversed hp). Throws std::runtime_error if the
/// intertwiner space is not one-dimensional.
QuotientModule irreducible_quotient(const HeckeParam& hp);

/// Multiplicity of the sign character of the Young subgroup prod S_{c_i}
/// (consecutive blocks) in the restriction of the module, by character
/// inner product over all group elements.
Rational young_sign_multiplicity(const ModuleMatrices& m, const std::vector<int>& composition);

}  // namespace glhecke
