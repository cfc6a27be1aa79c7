#pragma once

// Batched verification sweeps shared by the command-line tool and the
// acceptance programs. Every sweep is exhaustive over its bounds.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace glhecke {

struct SweepBounds {
  int max_n = 6;
  int max_k = 6;
  std::int64_t lo = 0;  ///< smallest entry of lambda
  std::int64_t hi = 6;  ///< largest entry of lambda
};

struct SuiteReport {
  std::string name;
  std::int64_t checked = 0;
  std::vector<std::string> failures;
  nlohmann::json details = nlohmann::json::object();

  [[nodiscard]] bool passed() const { return failures.empty(); }
  [[nodiscard]] nlohmann::json to_json() const;
};

/// dimension_std against the branching oracle, every real parameter with
/// n <= max_n and integral lambda in [lo, hi], every k <= max_k with
/// level >= k; both sides must vanish when level > k.
SuiteReport run_dims_suite(const SweepBounds& b);

/// Relations and central characters of every standard module with
/// k <= max_k over supports in [lo, hi]. The two halves can be requested
/// separately.
SuiteReport run_relations_suite(const SweepBounds& b);
SuiteReport run_central_character_suite(const SweepBounds& b);

/// Closed-form eigenvalues against the block coordinates of the image, all
/// level-k parameters with n <= max_n, k <= max_k.
SuiteReport run_eigenvalues_suite(const SweepBounds& b);

/// Level-n classes against multisegment classes for every lambda with
/// n <= max_n; details also carry the lambda-preserving restriction and the
/// 2^(n-1) counts at consecutive lambda up to rho_max_n.
SuiteReport run_bijection_suite(const SweepBounds& b, int rho_max_n = 10);

/// Choice-independence and injectivity of the orbit map for every lambda.
SuiteReport run_psi_suite(const SweepBounds& b);

/// Quotients: the intertwiner space is one-dimensional and the image
/// verifies the relations, every dominant parameter with k <= max_k.
SuiteReport run_quotients_suite(const SweepBounds& b);

/// Names accepted by run_suite: dims, relations, central, eigenvalues,
/// bijection, psi, quotients.
std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const SweepBounds& b);

}  // namespace glhecke
