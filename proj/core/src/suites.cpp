#include "glhecke/suites.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

#include "glhecke/gamma.hpp"
#include "glhecke/hecke_module.hpp"
#include "glhecke/io.hpp"
#include "glhecke/ktype_oracle.hpp"
#include "glhecke/psi.hpp"

namespace glhecke {

namespace {

// Failure lists are capped so a badly broken build still yields a readable report.
constexpr std::size_t kMaxListedFailures = 50;

void fail(SuiteReport& r, const std::string& what) {
  if (r.failures.size() < kMaxListedFailures) {
    r.failures.push_back(what);
  } else if (r.failures.size() == kMaxListedFailures) {
    r.failures.push_back("(further failures omitted)");
  }
}

std::vector<IntegralWeight> all_weights(const SweepBounds& b, int max_n) {
  std::vector<IntegralWeight> out;
  for (int n = 1; n <= max_n; ++n) {
    auto w = weights_in_window(n, b.lo, b.hi);
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

class OracleCache {
 public:
  std::int64_t multiplicity(const RealParam& p, int k) {
    const int s = p.gl2_count();
    const int m = p.rank() - 2 * s;
    auto key = std::make_tuple(s, m, k);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, tensor_power_standard(s, m, k)).first;
    return it->second.at(lowest_type_tuple(p));
  }

 private:
  std::map<std::tuple<int, int, int>, ProductDecomposition> cache_;
};

template <typename Fn>
void for_each_module_param(const SweepBounds& b, Fn&& fn) {
  for (const auto& lambda : all_weights(b, b.max_k)) {
    for (const auto& hp : enumerate_multisegments(lambda)) fn(hp);
  }
}

}  // namespace

nlohmann::json SuiteReport::to_json() const {
  return {{"suite", name}, {"checked", checked}, {"passed", passed()}, {"failures", failures}, {"details", details}};
}

SuiteReport run_dims_suite(const SweepBounds& b) {
  SuiteReport r;
  r.name = "dims";
  OracleCache oracle;
  std::int64_t zero_cases = 0;
  for (const auto& lambda : all_weights(b, b.max_n)) {
    for (const auto& p : enumerate_real_params(lambda, 0)) {
      for (int k = 0; k <= std::min(b.max_k, p.level()); ++k) {
        ++r.checked;
        const auto formula = dimension_std(p, k);
        const auto brute = oracle.multiplicity(p, k);
        if (p.level() > k) {
          ++zero_cases;
          if (formula != 0 || brute != 0) {
            fail(r, p.str() + " k=" + std::to_string(k) + ": expected 0, formula " + std::to_string(formula) +
                        ", oracle " + std::to_string(brute));
          }
        } else if (formula != brute) {
          fail(r, p.str() + " k=" + std::to_string(k) + ": formula " + std::to_string(formula) + ", oracle " +
                      std::to_string(brute));
        }
      }
    }
  }
  r.details["level_above_k_cases"] = zero_cases;
  return r;
}

SuiteReport run_relations_suite(const SweepBounds& b) {
  SuiteReport r;
  r.name = "relations";
  std::int64_t max_dim = 0;
  for_each_module_param(b, [&](const HeckeParam& hp) {
    ++r.checked;
    const auto m = build_standard_module(hp);
    max_dim = std::max<std::int64_t>(max_dim, m.dim());
    std::int64_t expected = factorial(hp.k());
    for (const auto& s : hp.segments()) expected /= factorial(s.len());
    if (m.dim() != expected) fail(r, hp.str() + ": dimension " + std::to_string(m.dim()));
    const auto check = check_relations(m.matrices());
    if (!check.ok) fail(r, hp.str() + ": " + check.failures.front());
  });
  r.details["largest_dimension"] = max_dim;
  return r;
}

SuiteReport run_central_character_suite(const SweepBounds& b) {
  SuiteReport r;
  r.name = "central";
  for_each_module_param(b, [&](const HeckeParam& hp) {
    ++r.checked;
    const auto m = build_standard_module(hp);
    const auto cc = central_character_of_module(m);
    if (!cc.ok) {
      fail(r, hp.str() + ": " + cc.failure);
    } else if (cc.chi != hp.support()) {
      fail(r, hp.str() + ": central character differs from the support");
    }
  });
  return r;
}

SuiteReport run_eigenvalues_suite(const SweepBounds& b) {
  SuiteReport r;
  r.name = "eigenvalues";
  for (const auto& lambda : all_weights(b, b.max_n)) {
    for (const auto& p : enumerate_real_params(lambda, 0)) {
      if (p.level() > b.max_k) continue;
      ++r.checked;
      if (!eigenvalue_identity(p, p.level())) fail(r, p.str() + ": eigenvalues differ from the block coordinates");
    }
  }
  return r;
}

SuiteReport run_bijection_suite(const SweepBounds& b, int rho_max_n) {
  SuiteReport r;
  r.name = "bijection";
  std::int64_t escapes_total = 0;
  std::int64_t restricted_failures = 0;
  nlohmann::json examples = nlohmann::json::array();
  for (const auto& lambda : all_weights(b, b.max_n)) {
    ++r.checked;
    const auto rep = verify_bijection_level_n(lambda);
    if (!rep.bijection) {
      fail(r, "lambda " + lambda.str() + ": " + std::to_string(rep.level_n.size()) + " level-n classes, " +
                  std::to_string(rep.multisegments.size()) + " multisegments, " + std::to_string(rep.missing.size()) +
                  " missing, " + std::to_string(rep.collisions.size()) + " collisions, " +
                  std::to_string(rep.escapes.size()) + " with a different support");
      if (examples.size() < 5 && !rep.escapes.empty()) {
        examples.push_back({{"lambda", io::to_json(lambda)},
                            {"real", rep.escapes.front().real.str()},
                            {"image", rep.escapes.front().hecke.str()}});
      }
    }
    escapes_total += static_cast<std::int64_t>(rep.escapes.size());
    // The same comparison restricted to classes whose image keeps the support.
    if (!rep.missing.empty() || !rep.collisions.empty()) ++restricted_failures;
  }
  r.details["support_changing_images"] = escapes_total;
  r.details["support_changing_examples"] = examples;
  r.details["restricted_bijection_failures"] = restricted_failures;

  nlohmann::json counts = nlohmann::json::array();
  for (int n = 1; n <= rho_max_n; ++n) {
    ++r.checked;
    const auto lambda = IntegralWeight::consecutive(n);
    const auto rep = verify_bijection_level_n(lambda);
    const std::int64_t expected = std::int64_t{1} << (n - 1);
    const auto real_count = static_cast<std::int64_t>(rep.level_n.size());
    const auto hecke_count = static_cast<std::int64_t>(rep.multisegments.size());
    counts.push_back({{"n", n}, {"level_n", real_count}, {"multisegments", hecke_count}, {"expected", expected}});
    if (real_count != expected || hecke_count != expected) {
      fail(r, "consecutive lambda n=" + std::to_string(n) + ": " + std::to_string(real_count) + " level-n classes, " +
                  std::to_string(hecke_count) + " multisegments, expected " + std::to_string(expected));
    }
  }
  r.details["consecutive_counts"] = counts;
  return r;
}

SuiteReport run_psi_suite(const SweepBounds& b) {
  SuiteReport r;
  r.name = "psi";
  std::int64_t variants = 0;
  std::int64_t multisegments = 0;
  for (const auto& lambda : all_weights(b, b.max_n)) {
    ++r.checked;
    const auto wp = verify_psi_wellposed(lambda);
    variants += wp.variants;
    multisegments += wp.multisegments;
    for (const auto& v : wp.violations) fail(r, "lambda " + lambda.str() + ": " + v);
    const auto inj = verify_injectivity(lambda);
    for (const auto& [a, c] : inj.collisions) {
      fail(r, "lambda " + lambda.str() + ": " + a.str() + " and " + c.str() + " give the same class");
    }
    const auto bs = BlockStructure::from_weight(lambda);
    int even = 0;
    for (auto v : lambda.entries()) even += v % 2 == 0;
    for (const auto& hp : enumerate_multisegments(lambda)) {
      const auto trace = psi_g_trace(hp.multisegment(), lambda);
      const auto sig = trace.flattened.signature();
      if (sig != std::make_pair(even, lambda.size() - even)) fail(r, hp.str() + ": wrong signature");
      int long_segments = 0;
      for (const auto& s : hp.segments()) long_segments += s.len() >= 2;
      if (static_cast<int>(trace.flattened.arcs().size()) != long_segments) fail(r, hp.str() + ": wrong arc count");
    }
  }
  r.details["multisegments"] = multisegments;
  r.details["flattenings_examined"] = variants;
  return r;
}

SuiteReport run_quotients_suite(const SweepBounds& b) {
  SuiteReport r;
  r.name = "quotients";
  for_each_module_param(b, [&](const HeckeParam& hp) {
    ++r.checked;
    try {
      const auto q = irreducible_quotient(hp);
      const auto check = check_relations(q.matrices);
      if (!check.ok) fail(r, hp.str() + ": quotient " + check.failures.front());
    } catch (const std::runtime_error& e) {
      fail(r, hp.str() + ": " + e.what());
    }
  });
  return r;
}

std::vector<std::string> suite_names() {
  return {"dims", "relations", "central", "eigenvalues", "bijection", "psi", "quotients"};
}

SuiteReport run_suite(const std::string& name, const SweepBounds& b) {
  if (name == "dims") return run_dims_suite(b);
  if (name == "relations") return run_relations_suite(b);
  if (name == "central") return run_central_character_suite(b);
  if (name == "eigenvalues") return run_eigenvalues_suite(b);
  if (name == "bijection") return run_bijection_suite(b);
  if (name == "psi") return run_psi_suite(b);
  if (name == "quotients") return run_quotients_suite(b);
  throw std::invalid_argument("unknown suite \"" + name + "\"");
}

}  // namespace glhecke
