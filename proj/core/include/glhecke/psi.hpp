#pragma once

// The map from multisegments with integral support lambda to classes of
// signed involutions: columns of parity signs, one arc per segment of
// length >= 2 (with sign flips across same-parity segments), then
// flattening of the columns into a row.

#include <cstdint>
#include <string>
#include <vector>

#include "glhecke/hecke_params.hpp"
#include "glhecke/signed_involution.hpp"
#include "glhecke/weight.hpp"

namespace glhecke {

struct PsiEntry {
  int sign = 1;      ///< +1 / -1; meaningless once arc >= 0
  int arc = -1;      ///< index of the arc this entry ends, if any
  bool fresh = true; ///< neither joined by an arc nor flipped
};

struct PsiColumn {
  std::int64_t value = 0;
  std::vector<PsiEntry> entries;  ///< top to bottom
};

struct PsiDiagram {
  std::vector<PsiColumn> columns;  ///< largest value first
  int arcs = 0;

  /// Text picture: a header of column values, then one row per level with
  /// "+", "-" or the arc label. Arcs are labelled a, b, ... in creation order.
  [[nodiscard]] std::string render() const;
};

/// Initial diagram: one column per distinct value, + for even, - for odd.
PsiDiagram initial_diagram(const IntegralWeight& lambda);

/// Reads the segment as integers (from, to) with from <= to. Throws
/// std::invalid_argument for non-integral entries.
std::pair<std::int64_t, std::int64_t> integral_bounds(const Segment& seg);

/// Column flattening: rows of each column top to bottom, columns left to right.
SignedInvolution flatten(const PsiDiagram& d);
/// Flattening with an explicit within-column order (order[c] is a
/// permutation of column c's entry indices).
SignedInvolution flatten(const PsiDiagram& d, const std::vector<std::vector<int>>& order);

struct PsiTrace {
  std::vector<PsiDiagram> stages;  ///< initial diagram, then one per arc drawn
  SignedInvolution flattened;
};

/// Runs the construction with the canonical choices: segments by decreasing
/// length (ties in the given order), topmost fresh entry in each column.
/// Throws std::invalid_argument on a support mismatch and
/// std::runtime_error when a needed column has no fresh entry.
PsiTrace psi_g_trace(const Multisegment& tau, const IntegralWeight& lambda);
OrbitClass psi_g(const Multisegment& tau, const IntegralWeight& lambda);

struct PsiWellPosedReport {
  IntegralWeight lambda;
  int multisegments = 0;
  std::int64_t variants = 0;         ///< flattened outputs examined
  std::vector<std::string> violations;
  [[nodiscard]] bool ok() const { return violations.empty(); }
};

/// For each multisegment at lambda: every tie order of equal-length segments,
/// every choice of fresh entries for arcs and flips, and every within-column
/// flattening order must land in one class.
PsiWellPosedReport verify_psi_wellposed(const IntegralWeight& lambda);

/// All outputs reachable from tau under every choice (same sweep as above).
std::vector<SignedInvolution> psi_g_all_outputs(const Multisegment& tau, const IntegralWeight& lambda);

struct PsiInjectivityReport {
  IntegralWeight lambda;
  int multisegments = 0;
  int classes = 0;
  std::vector<std::pair<HeckeParam, HeckeParam>> collisions;
  [[nodiscard]] bool ok() const { return collisions.empty(); }
};

PsiInjectivityReport verify_injectivity(const IntegralWeight& lambda);

}  // namespace glhecke
