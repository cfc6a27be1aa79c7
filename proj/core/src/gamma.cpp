#include "glhecke/gamma.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace glhecke {

std::int64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::domain_error("factorial argument out of range");
  std::int64_t out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

namespace {

void require_level_at_least(const RealParam& param, int k) {
  if (param.level() < k) {
    throw std::domain_error("level " + std::to_string(param.level()) + " < k = " +
                            std::to_string(k) + " is outside the domain of Gamma");
  }
}

void require_level_exactly(const RealParam& param, int k) {
  if (param.level() != k) {
    throw std::domain_error("level " + std::to_string(param.level()) + " != k = " +
                            std::to_string(k));
  }
}

}  // namespace

Multisegment gamma_factor_order(const RealParam& param, int k) {
  require_level_exactly(param, k);
  std::vector<Segment> segments;
  for (const auto& f : param.factors()) {
    if (f.is_sign()) continue;
    segments.push_back(Segment::from_center(f.nu(), f.level()));
  }
  return Multisegment(std::move(segments));
}

GammaResult gamma(const RealParam& param, int k) {
  require_level_at_least(param, k);
  if (param.level() > k) return {};
  return {HeckeParam::dominant_representative(gamma_factor_order(param, k))};
}

std::int64_t dimension_std(const RealParam& param, int k) {
  require_level_at_least(param, k);
  if (param.level() > k) return 0;
  return w_structure(param, k).induced_dimension();
}

std::int64_t WStructure::induced_dimension() const {
  int k = 0;
  for (int c : composition) k += c;
  std::int64_t out = factorial(k);
  for (int c : composition) out /= factorial(c);
  return out;
}

WStructure w_structure(const RealParam& param, int k) {
  require_level_exactly(param, k);
  WStructure ws;
  for (const auto& f : param.factors()) {
    if (f.level() > 0) ws.composition.push_back(f.level());
  }
  return ws;
}

std::vector<Scalar> closed_form_eigenvalues(const RealParam& param, int k) {
  require_level_exactly(param, k);
  std::vector<Scalar> out;
  int prec = 0;  // tensor length of the blocks before the current one
  for (const auto& f : param.factors()) {
    if (f.is_sign()) continue;
    const int lev = f.level();
    for (int ell = prec + 1; ell <= prec + lev; ++ell) {
      out.push_back(f.nu() - Scalar(Rational(lev - 1, 2)) + Scalar(ell - prec - 1));
    }
    prec += lev;
  }
  return out;
}

bool eigenvalue_identity(const RealParam& param, int k) {
  auto closed = closed_form_eigenvalues(param, k);
  auto coords = block_coordinates(gamma_factor_order(param, k));
  return static_cast<int>(closed.size()) == k && closed == coords;
}

BijectionReport verify_bijection_level_n(const IntegralWeight& lambda) {
  const int n = lambda.size();
  BijectionReport report;
  report.lambda = lambda;
  report.level_n = enumerate_real_params(lambda, n);
  std::erase_if(report.level_n, [n](const RealParam& p) { return p.level() != n; });
  report.multisegments = enumerate_multisegments(lambda);

  const auto target_support = lambda.as_scalars();
  std::map<HeckeParam, int> hits;
  for (const auto& p : report.level_n) {
    auto image = *gamma(p, n).param;
    report.pairs.push_back({p, image});
    if (image.support() != sorted_multiset(target_support)) {
      report.escapes.push_back({p, image});
      continue;
    }
    ++hits[image];
  }
  for (const auto& h : report.multisegments) {
    auto it = hits.find(h);
    if (it == hits.end()) report.missing.push_back(h);
  }
  for (const auto& [h, count] : hits) {
    if (count > 1) report.collisions.push_back(h);
  }
  report.bijection = report.missing.empty() && report.collisions.empty() && report.escapes.empty();
  return report;
}

}  // namespace glhecke
