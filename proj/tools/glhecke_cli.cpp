// glhecke: command-line front end to the parameter, module and orbit code.
//
// Exit status: 0 on success, 1 when a verification reports failures, 2 on
// malformed input.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "glhecke/gamma.hpp"
#include "glhecke/hecke_module.hpp"
#include "glhecke/io.hpp"
#include "glhecke/ktype_oracle.hpp"
#include "glhecke/psi.hpp"
#include "glhecke/suites.hpp"

using namespace glhecke;
using nlohmann::json;

namespace {

struct Options {
  std::string lambda;
  int n = -1;
  int k = -1;
  int min_level = 0;
  int max_level = -1;
  std::string format = "json";
  std::string out;
  std::string side = "hecke";
  std::string real;
  std::string segments;
  std::string param_file;
  int steinberg = -1;
  bool quotient = false;
  std::string suite;
  int max_n = 6;
  int max_k = 6;
  std::int64_t lo = 0;
  std::int64_t hi = 6;
  int s = -1;
  int m = -1;
  std::string tau;
  bool stages = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
  } else {
    io::write_atomic(o.out, text);
  }
}

void emit_json(const Options& o, const json& j) { emit(o, j.dump(2) + "\n"); }

IntegralWeight lambda_from(const Options& o) {
  if (!o.lambda.empty()) return IntegralWeight::parse(o.lambda);
  if (o.n > 0) return IntegralWeight::consecutive(o.n);
  throw UsageError("give --lambda, or --n for the consecutive weight (n-1,...,0)");
}

RealParam real_from(const Options& o) {
  if (!o.real.empty()) return io::parse_real_param(o.real);
  if (!o.param_file.empty()) {
    std::ifstream in(o.param_file);
    if (!in) throw UsageError("cannot read " + o.param_file);
    return io::real_param_from_json(json::parse(in));
  }
  throw UsageError("give --real \"triv:nu; gl2:l:nu; ...\" or --param FILE");
}

HeckeParam hecke_from(const Options& o) {
  if (o.steinberg > 0) return steinberg_param(o.steinberg);
  if (!o.segments.empty()) return HeckeParam::dominant_representative(Multisegment::parse(o.segments));
  if (!o.param_file.empty()) {
    std::ifstream in(o.param_file);
    if (!in) throw UsageError("cannot read " + o.param_file);
    return HeckeParam::dominant_representative(io::multisegment_from_json(json::parse(in)));
  }
  throw UsageError("give --segments \"{a,...};{...}\", --steinberg K or --param FILE");
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (o.format == f) return;
  }
  throw UsageError("format \"" + o.format + "\" is not available for this command");
}

int cmd_enumerate(const Options& o) {
  const auto lambda = lambda_from(o);
  if (o.side == "real") {
    auto params = enumerate_real_params(lambda, o.min_level);
    if (o.max_level >= 0) std::erase_if(params, [&](const RealParam& p) { return p.level() > o.max_level; });
    if (o.format == "csv") {
      emit(o, io::real_params_csv(params));
    } else if (o.format == "text") {
      std::string text;
      for (const auto& p : params) text += p.str() + "  level " + std::to_string(p.level()) + "\n";
      emit(o, text);
    } else {
      json rows = json::array();
      for (const auto& p : params) {
        auto j = io::to_json(p);
        j["text"] = p.str();
        j["level"] = p.level();
        j["infinitesimal_character"] = io::scalars_to_json(p.infinitesimal_character());
        rows.push_back(std::move(j));
      }
      emit_json(o, {{"lambda", io::to_json(lambda)}, {"side", "real"}, {"min_level", o.min_level},
                    {"max_level", o.max_level >= 0 ? json(o.max_level) : json(nullptr)},
                    {"count", params.size()}, {"params", rows}});
    }
    return 0;
  }
  if (o.side != "hecke") throw UsageError("--side must be real or hecke");
  const auto params = enumerate_multisegments(lambda);
  if (o.format == "csv") {
    emit(o, io::hecke_params_csv(params));
  } else if (o.format == "text") {
    std::string text;
    for (const auto& p : params) text += p.str() + "\n";
    emit(o, text);
  } else {
    json rows = json::array();
    for (const auto& p : params) {
      auto j = io::to_json(p);
      j["text"] = p.str();
      j["k"] = p.k();
      j["central_character"] = io::scalars_to_json(p.central_character());
      rows.push_back(std::move(j));
    }
    emit_json(o, {{"lambda", io::to_json(lambda)}, {"side", "hecke"}, {"count", params.size()}, {"params", rows}});
  }
  return 0;
}

int cmd_gamma(const Options& o) {
  require_format(o, {"json", "text"});
  const auto p = real_from(o);
  const int k = o.k >= 0 ? o.k : p.level();
  const auto g = gamma(p, k);
  if (o.format == "text") {
    emit(o, g.is_zero() ? std::string("0\n") : g.param->str() + "\n");
    return 0;
  }
  json j = {{"real", io::to_json(p)}, {"real_text", p.str()}, {"level", p.level()}, {"k", k}};
  if (g.is_zero()) {
    j["image"] = nullptr;
  } else {
    j["image"] = io::to_json(*g.param);
    j["image_text"] = g.param->str();
    j["central_character"] = io::scalars_to_json(g.param->central_character());
  }
  emit_json(o, j);
  return 0;
}

int cmd_dim(const Options& o) {
  require_format(o, {"json", "text"});
  const auto p = real_from(o);
  const int k = o.k >= 0 ? o.k : p.level();
  const auto formula = dimension_std(p, k);
  const auto oracle = hom_multiplicity(p, k);
  if (o.format == "text") {
    emit(o, std::to_string(formula) + "\n");
  } else {
    json j = {{"real_text", p.str()}, {"level", p.level()}, {"k", k}, {"dimension_std", formula},
              {"oracle", oracle}, {"agree", formula == oracle}};
    if (p.level() == k) j["w_structure"] = w_structure(p, k).composition;
    emit_json(o, j);
  }
  return formula == oracle ? 0 : 1;
}

int cmd_oracle(const Options& o) {
  require_format(o, {"json", "csv"});
  if (o.k < 0) throw UsageError("--k is required");
  int s = o.s;
  int m = o.m;
  std::optional<RealParam> p;
  if (!o.real.empty() || !o.param_file.empty()) {
    p = real_from(o);
    s = p->gl2_count();
    m = p->rank() - 2 * s;
  }
  if (s < 0 || m < 0) throw UsageError("give --s and --m, or a real parameter");
  const auto d = tensor_power_standard(s, m, o.k);
  if (o.format == "csv") {
    emit(o, io::decomposition_csv(d));
    return 0;
  }
  json rows = json::array();
  for (const auto& [tuple, mult] : d.multiplicity) {
    json t = json::array();
    for (const auto& label : tuple) t.push_back(label.str());
    rows.push_back({{"tuple", t}, {"multiplicity", mult}});
  }
  json j = {{"s", s}, {"m", m}, {"k", o.k}, {"total_dimension", d.total_dimension()}, {"rows", rows}};
  if (p) {
    json t = json::array();
    for (const auto& label : lowest_type_tuple(*p)) t.push_back(label.str());
    j["lowest_type"] = t;
    j["hom_multiplicity"] = d.at(lowest_type_tuple(*p));
  }
  emit_json(o, j);
  return 0;
}

int cmd_module(const Options& o) {
  require_format(o, {"json"});
  const auto hp = hecke_from(o);
  const auto m = build_standard_module(hp);
  auto j = io::to_json(m);
  j["param_text"] = hp.str();
  const auto cc = central_character_of_module(m);
  j["central_character"] = io::scalars_to_json(cc.chi);
  j["central_character_ok"] = cc.ok;
  j["relations_ok"] = verify_relations(m.matrices());
  if (o.quotient) {
    const auto q = irreducible_quotient(hp);
    j["quotient_dim"] = q.dim;
  }
  emit_json(o, j);
  return cc.ok && j["relations_ok"].get<bool>() ? 0 : 1;
}

int cmd_quotient(const Options& o) {
  require_format(o, {"json", "text"});
  const auto hp = hecke_from(o);
  const auto q = irreducible_quotient(hp);
  const bool ok = verify_relations(q.matrices);
  if (o.format == "text") {
    emit(o, std::to_string(q.dim) + "\n");
  } else {
    std::int64_t std_dim = factorial(hp.k());
    for (const auto& s : hp.segments()) std_dim /= factorial(s.len());
    emit_json(o, {{"param", io::to_json(hp)},
                  {"param_text", hp.str()},
                  {"std_dim", std_dim},
                  {"intertwiner_dimension", q.intertwiner_dimension},
                  {"quotient_dim", q.dim},
                  {"relations_ok", ok},
                  {"quotient", io::to_json(q.matrices)}});
  }
  return ok ? 0 : 1;
}

int cmd_psi(const Options& o) {
  require_format(o, {"json", "text"});
  const auto lambda = lambda_from(o);
  if (o.tau.empty()) {
    // Whole orbit map at lambda.
    json rows = json::array();
    std::string text;
    for (const auto& hp : enumerate_multisegments(lambda)) {
      const auto cls = psi_g(hp.multisegment(), lambda);
      rows.push_back({{"tau", hp.str()}, {"canonical", cls.canonical().str()}, {"class_size", cls.size()}});
      text += hp.str() + "  ->  " + cls.canonical().str() + "\n";
    }
    if (o.format == "text") {
      emit(o, text);
    } else {
      emit_json(o, {{"lambda", io::to_json(lambda)}, {"classes", rows}});
    }
    return 0;
  }
  const auto tau = Multisegment::parse(o.tau);
  const auto trace = psi_g_trace(tau, lambda);
  const auto cls = orbit_class(trace.flattened, BlockStructure::from_weight(lambda));
  if (o.format == "text") {
    std::string text;
    if (o.stages) {
      for (std::size_t i = 0; i < trace.stages.size(); ++i) text += trace.stages[i].render() + "\n";
    } else {
      text += trace.stages.back().render() + "\n";
    }
    text += trace.flattened.str() + "\n";
    emit(o, text);
    return 0;
  }
  json stages = json::array();
  for (const auto& s : trace.stages) stages.push_back(s.render());
  emit_json(o, {{"lambda", io::to_json(lambda)},
                {"tau", tau.str()},
                {"stages", stages},
                {"flattened", io::to_json(trace.flattened)},
                {"flattened_text", trace.flattened.str()},
                {"class", io::to_json(cls)}});
  return 0;
}

int cmd_verify(const Options& o) {
  require_format(o, {"json", "text"});
  if (o.suite.empty()) throw UsageError("--suite is required");
  SuiteReport report;
  if (o.suite == "bijection" && (!o.lambda.empty() || o.n > 0)) {
    const auto rep = verify_bijection_level_n(lambda_from(o));
    report.name = "bijection";
    report.checked = static_cast<std::int64_t>(rep.pairs.size());
    if (!rep.bijection) report.failures.push_back("not a bijection at lambda " + rep.lambda.str());
    report.details = io::to_json(rep);
  } else if (o.suite == "psi" && (!o.lambda.empty() || o.n > 0)) {
    const auto lambda = lambda_from(o);
    const auto wp = verify_psi_wellposed(lambda);
    const auto inj = verify_injectivity(lambda);
    report.name = "psi";
    report.checked = wp.multisegments;
    report.failures = wp.violations;
    for (const auto& [a, b] : inj.collisions) report.failures.push_back(a.str() + " and " + b.str() + " collide");
    report.details = {{"lambda", io::to_json(lambda)}, {"classes", inj.classes}, {"flattenings", wp.variants}};
  } else {
    SweepBounds b;
    b.max_n = o.max_n;
    b.max_k = o.max_k;
    b.lo = o.lo;
    b.hi = o.hi;
    report = run_suite(o.suite, b);
  }
  if (o.format == "text") {
    std::string text = report.name + ": " + (report.passed() ? "pass" : "FAIL") + " (" +
                       std::to_string(report.checked) + " checked)\n";
    for (const auto& f : report.failures) text += "  " + f + "\n";
    emit(o, text);
  } else {
    emit_json(o, report.to_json());
  }
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parameters, standard modules and orbit classes for GL(n,R) and graded Hecke algebras"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", o.out, "write to this file (atomically) instead of stdout");
  };
  auto add_lambda = [&o](CLI::App* sub) {
    sub->add_option("--lambda", o.lambda, "weakly decreasing integers, e.g. \"4,4,3,2\"");
    sub->add_option("--n", o.n, "use lambda = (n-1, ..., 0)");
  };
  auto add_real = [&o](CLI::App* sub) {
    sub->add_option("--real", o.real, "real parameter, e.g. \"gl2:2:1/2; triv:0\"");
    sub->add_option("--param", o.param_file, "parameter JSON file");
    sub->add_option("--k", o.k, "k (defaults to the level)");
  };
  auto add_hecke = [&o](CLI::App* sub) {
    sub->add_option("--segments", o.segments, "multisegment, e.g. \"{1/2};{-1/2}\"");
    sub->add_option("--steinberg", o.steinberg, "single segment of length K centred at 0");
    sub->add_option("--param", o.param_file, "multisegment JSON file");
  };

  auto* en = app.add_subcommand("enumerate", "list parameter classes at lambda");
  add_lambda(en);
  en->add_option("--side", o.side, "real or hecke")->check(CLI::IsMember({"real", "hecke"}));
  en->add_option("--min-level", o.min_level, "smallest level kept (real side)");
  en->add_option("--max-level", o.max_level, "largest level kept (real side)");
  add_common(en);

  auto* ga = app.add_subcommand("gamma", "image of a real parameter");
  add_real(ga);
  add_common(ga);

  auto* di = app.add_subcommand("dim", "standard module dimension, formula and oracle");
  add_real(di);
  add_common(di);

  auto* orc = app.add_subcommand("oracle", "branching of V^k to O(2)^s x O(1)^m");
  add_real(orc);
  orc->add_option("--s", o.s, "number of O(2) slots");
  orc->add_option("--m", o.m, "number of O(1) slots");
  add_common(orc);

  auto* mo = app.add_subcommand("module", "standard module matrices");
  add_hecke(mo);
  mo->add_flag("--quotient", o.quotient, "also report the irreducible quotient dimension");
  add_common(mo);

  auto* qu = app.add_subcommand("quotient", "irreducible quotient of a standard module");
  add_hecke(qu);
  add_common(qu);

  auto* ps = app.add_subcommand("psi", "signed-involution class of a multisegment");
  add_lambda(ps);
  ps->add_option("--tau", o.tau, "multisegment with support lambda (all of them when omitted)");
  ps->add_flag("--stages", o.stages, "print every intermediate diagram (text format)");
  add_common(ps);

  auto* ve = app.add_subcommand("verify", "run a verification sweep");
  ve->add_option("--suite", o.suite, "dims, relations, central, eigenvalues, bijection, psi or quotients")
      ->check(CLI::IsMember(suite_names()));
  ve->add_option("--max-n", o.max_n, "largest n");
  ve->add_option("--max-k", o.max_k, "largest k");
  ve->add_option("--lo", o.lo, "smallest entry of lambda");
  ve->add_option("--hi", o.hi, "largest entry of lambda");
  add_lambda(ve);
  add_common(ve);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (en->parsed()) return cmd_enumerate(o);
    if (ga->parsed()) return cmd_gamma(o);
    if (di->parsed()) return cmd_dim(o);
    if (orc->parsed()) return cmd_oracle(o);
    if (mo->parsed()) return cmd_module(o);
    if (qu->parsed()) return cmd_quotient(o);
    if (ps->parsed()) return cmd_psi(o);
    if (ve->parsed()) return cmd_verify(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
