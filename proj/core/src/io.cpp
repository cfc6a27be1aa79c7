#include "glhecke/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace glhecke::io {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::string join_scalars(const std::vector<Scalar>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i].str();
  }
  return out;
}

Eps eps_from_string(const std::string& s) {
  if (s == "triv") return Eps::Trivial;
  if (s == "sgn") return Eps::Sign;
  throw std::invalid_argument("eps must be \"triv\" or \"sgn\", got \"" + s + "\"");
}

}  // namespace

json to_json(const Rational& r) { return r.str(); }

json to_json(const Scalar& s) { return {{"re", s.re().str()}, {"im", s.im().str()}}; }

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<std::int64_t>());
  if (j.is_object()) {
    const Rational re = Rational::parse(j.at("re").get<std::string>());
    const Rational im = j.contains("im") ? Rational::parse(j.at("im").get<std::string>()) : Rational(0);
    return {re, im};
  }
  throw std::invalid_argument("expected a scalar, got " + j.dump());
}

json to_json(const RdsFactor& f) {
  if (f.is_gl1()) return {{"kind", "gl1"}, {"eps", f.eps() == Eps::Trivial ? "triv" : "sgn"}, {"nu", to_json(f.nu())}};
  return {{"kind", "gl2"}, {"l", f.l()}, {"nu", to_json(f.nu())}};
}

json to_json(const RealParam& p) {
  json factors = json::array();
  for (const auto& f : p.factors()) factors.push_back(to_json(f));
  return {{"factors", factors}};
}

RealParam real_param_from_json(const json& j) {
  std::vector<RdsFactor> factors;
  for (const auto& f : j.at("factors")) {
    const auto kind = f.at("kind").get<std::string>();
    const Scalar nu = scalar_from_json(f.at("nu"));
    if (kind == "gl1") {
      factors.push_back(RdsFactor::gl1(eps_from_string(f.at("eps").get<std::string>()), nu));
    } else if (kind == "gl2") {
      factors.push_back(RdsFactor::gl2(f.at("l").get<int>(), nu));
    } else {
      throw std::invalid_argument("unknown factor kind \"" + kind + "\"");
    }
  }
  return RealParam(std::move(factors));
}

RealParam parse_real_param(std::string_view text) {
  std::string body = trim(text);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw std::invalid_argument("unbalanced '[' in real parameter");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<RdsFactor> factors;
  std::stringstream ss(body);
  int index = 0;
  for (std::string item; std::getline(ss, item, ';');) {
    ++index;
    item = trim(item);
    const auto where = " (factor " + std::to_string(index) + ")";
    std::vector<std::string> parts;
    std::stringstream fs(item);
    for (std::string part; std::getline(fs, part, ':');) parts.push_back(trim(part));
    try {
      if (parts.size() == 2 && (parts[0] == "triv" || parts[0] == "sgn")) {
        factors.push_back(RdsFactor::gl1(eps_from_string(parts[0]), Scalar::parse(parts[1])));
      } else if (parts.size() == 3 && parts[0] == "gl2") {
        std::size_t used = 0;
        const int l = std::stoi(parts[1], &used);
        if (used != parts[1].size()) throw std::invalid_argument("bad l \"" + parts[1] + "\"");
        factors.push_back(RdsFactor::gl2(l, Scalar::parse(parts[2])));
      } else {
        throw std::invalid_argument("expected triv:nu, sgn:nu or gl2:l:nu, got \"" + item + "\"");
      }
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(std::string(e.what()) + where);
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("number out of range" + where);
    }
  }
  if (factors.empty()) throw std::invalid_argument("empty real parameter");
  return RealParam(std::move(factors));
}

json to_json(const Segment& s) { return {{"start", s.start().str()}, {"len", s.len()}}; }

json to_json(const Multisegment& m) {
  json segs = json::array();
  for (const auto& s : m.segments()) segs.push_back(to_json(s));
  return {{"segments", segs}};
}

json to_json(const HeckeParam& p) { return to_json(p.multisegment()); }

Multisegment multisegment_from_json(const json& j) {
  std::vector<Segment> segs;
  for (const auto& s : j.at("segments")) segs.emplace_back(scalar_from_json(s.at("start")), s.at("len").get<int>());
  return Multisegment(std::move(segs));
}

json to_json(const IntegralWeight& w) { return w.entries(); }

json scalars_to_json(const std::vector<Scalar>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const ModuleMatrices& m) {
  json s = json::array();
  json eps = json::array();
  for (const auto& g : m.s) s.push_back(matrix_to_json(g));
  for (const auto& g : m.eps) eps.push_back(matrix_to_json(g));
  return {{"k", m.k}, {"dim", m.dim()}, {"s", s}, {"eps", eps}};
}

json to_json(const StandardModule& m) {
  json out = to_json(m.matrices());
  out["param"] = to_json(m.param());
  json basis = json::array();
  for (const auto& w : m.basis()) {
    json one_based = json::array();
    for (int v : w) one_based.push_back(v + 1);
    basis.push_back(std::move(one_based));
  }
  out["basis"] = basis;
  return out;
}

json to_json(const BijectionReport& r) {
  json pairs = json::array();
  for (const auto& p : r.pairs) pairs.push_back({{"real", to_json(p.real)}, {"hecke", to_json(p.hecke)}});
  json missing = json::array();
  for (const auto& h : r.missing) missing.push_back(to_json(h));
  json collisions = json::array();
  for (const auto& h : r.collisions) collisions.push_back(to_json(h));
  json escapes = json::array();
  for (const auto& p : r.escapes) escapes.push_back({{"real", to_json(p.real)}, {"hecke", to_json(p.hecke)}});
  return {{"lambda", to_json(r.lambda)}, {"pairs", pairs},           {"bijection", r.bijection},
          {"missing", missing},          {"collisions", collisions}, {"escapes", escapes},
          {"level_n_count", r.level_n.size()}, {"multisegment_count", r.multisegments.size()}};
}

json to_json(const SignedInvolution& s) {
  json arcs = json::array();
  for (auto [a, b] : s.arcs()) arcs.push_back({a + 1, b + 1});
  json signs = json::object();
  for (int i = 0; i < s.n(); ++i) {
    if (s.is_fixed(i)) signs[std::to_string(i + 1)] = s.sign(i) > 0 ? "+" : "-";
  }
  return {{"n", s.n()}, {"arcs", arcs}, {"signs", signs}};
}

SignedInvolution signed_involution_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> arcs;
  for (const auto& a : j.at("arcs")) arcs.emplace_back(a.at(0).get<int>() - 1, a.at(1).get<int>() - 1);
  std::vector<int> signs(n, 0);
  for (const auto& [pos, sign] : j.at("signs").items()) {
    const int i = std::stoi(pos) - 1;
    if (i < 0 || i >= n) throw std::invalid_argument("sign position " + pos + " out of range");
    const auto v = sign.get<std::string>();
    if (v == "+") {
      signs[i] = 1;
    } else if (v == "-" || v == "−") {
      signs[i] = -1;
    } else {
      throw std::invalid_argument("sign must be \"+\" or \"-\", got \"" + v + "\"");
    }
  }
  return SignedInvolution::from_arcs(n, arcs, signs);
}

json to_json(const OrbitClass& c) {
  json members = json::array();
  for (const auto& m : c.members()) members.push_back(m.str());
  const auto [p, q] = c.canonical().signature();
  return {{"canonical", to_json(c.canonical())},
          {"canonical_text", c.canonical().str()},
          {"signature", {p, q}},
          {"size", c.size()},
          {"members", members}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\n";
}

std::string real_params_csv(const std::vector<RealParam>& params) {
  std::string out = csv_row({"factors", "rank", "level", "gl2", "sign", "infinitesimal_character"});
  for (const auto& p : params) {
    out += csv_row({p.str(), std::to_string(p.rank()), std::to_string(p.level()), std::to_string(p.gl2_count()),
                    std::to_string(p.sign_count()), join_scalars(p.infinitesimal_character(), " ")});
  }
  return out;
}

std::string hecke_params_csv(const std::vector<HeckeParam>& params) {
  std::string out = csv_row({"segments", "k", "central_character"});
  for (const auto& p : params) {
    out += csv_row({p.str(), std::to_string(p.k()), join_scalars(p.central_character(), " ")});
  }
  return out;
}

std::string decomposition_csv(const ProductDecomposition& d) {
  std::string out = csv_row({"tuple", "multiplicity"});
  for (const auto& [tuple, mult] : d.multiplicity) {
    std::string t;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (i) t += " x ";
      t += tuple[i].str();
    }
    out += csv_row({t, std::to_string(mult)});
  }
  return out;
}

void write_atomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << contents;
    out.flush();
    if (!out) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot move output into " + target.string() + ": " + ec.message());
  }
}

}  // namespace glhecke::io
