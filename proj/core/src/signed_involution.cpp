#include "glhecke/signed_involution.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace glhecke {

std::string arc_label(int index) {
  static const std::string letters = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
  if (index < static_cast<int>(letters.size())) return std::string(1, letters[index]);
  return "x" + std::to_string(index);
}

SignedInvolution SignedInvolution::from_signs(const std::vector<int>& signs) {
  return from_arcs(static_cast<int>(signs.size()), {}, signs);
}

SignedInvolution SignedInvolution::from_arcs(int n, const std::vector<std::pair<int, int>>& arcs,
                                             const std::vector<int>& signs) {
  if (n < 0 || static_cast<int>(signs.size()) != n) throw std::invalid_argument("need one sign slot per position");
  std::vector<int> code(n, -1);
  for (auto [a, b] : arcs) {
    if (a == b || a < 0 || b < 0 || a >= n || b >= n) throw std::invalid_argument("bad arc endpoint");
    if (code[a] != -1 || code[b] != -1) throw std::invalid_argument("arcs are not disjoint");
    code[a] = 2 + b;
    code[b] = 2 + a;
  }
  for (int i = 0; i < n; ++i) {
    if (code[i] != -1) continue;
    if (signs[i] != 1 && signs[i] != -1) {
      throw std::invalid_argument("fixed point " + std::to_string(i + 1) + " needs sign +1 or -1");
    }
    code[i] = signs[i] > 0 ? 0 : 1;
  }
  return SignedInvolution(std::move(code));
}

SignedInvolution SignedInvolution::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  const int n = static_cast<int>(tokens.size());
  std::vector<int> signs(n, 0);
  std::map<std::string, std::vector<int>> labels;
  for (int i = 0; i < n; ++i) {
    if (tokens[i] == "+") {
      signs[i] = 1;
    } else if (tokens[i] == "-" || tokens[i] == "−") {
      signs[i] = -1;
    } else {
      labels[tokens[i]].push_back(i);
    }
  }
  std::vector<std::pair<int, int>> arcs;
  for (const auto& [label, where] : labels) {
    if (where.size() != 2) {
      throw std::invalid_argument("arc label '" + label + "' must occur exactly twice, found " +
                                  std::to_string(where.size()));
    }
    arcs.emplace_back(where[0], where[1]);
  }
  return from_arcs(n, arcs, signs);
}

int SignedInvolution::sign(int i) const {
  if (code_[i] == 0) return 1;
  if (code_[i] == 1) return -1;
  return 0;
}

std::vector<std::pair<int, int>> SignedInvolution::arcs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n(); ++i) {
    if (!is_fixed(i) && i < partner(i)) out.emplace_back(i, partner(i));
  }
  return out;
}

std::pair<int, int> SignedInvolution::signature() const {
  int arcs_twice = 0;
  int plus = 0;
  int minus = 0;
  for (int i = 0; i < n(); ++i) {
    if (!is_fixed(i)) {
      ++arcs_twice;
    } else if (code_[i] == 0) {
      ++plus;
    } else {
      ++minus;
    }
  }
  return {arcs_twice / 2 + plus, arcs_twice / 2 + minus};
}

std::string SignedInvolution::str() const {
  std::vector<std::string> tokens(n());
  int next = 0;
  for (int i = 0; i < n(); ++i) {
    if (is_fixed(i)) {
      tokens[i] = code_[i] == 0 ? "+" : "-";
    } else if (i < partner(i)) {
      tokens[i] = tokens[partner(i)] = arc_label(next++);
    }
  }
  std::string out;
  for (int i = 0; i < n(); ++i) {
    if (i) out += ' ';
    out += tokens[i];
  }
  return out;
}

SignedInvolution SignedInvolution::conjugated(int i) const {
  std::vector<int> code = code_;
  std::swap(code[i], code[i + 1]);
  // Relabel partners through the transposition.
  for (auto& c : code) {
    if (c < 2) continue;
    const int p = c - 2;
    if (p == i) {
      c = 2 + i + 1;
    } else if (p == i + 1) {
      c = 2 + i;
    }
  }
  return SignedInvolution(std::move(code));
}

BlockStructure::BlockStructure(std::vector<int> composition) : composition_(std::move(composition)) {
  for (std::size_t b = 0; b < composition_.size(); ++b) {
    if (composition_[b] < 1) throw std::invalid_argument("block sizes must be positive");
    block_.insert(block_.end(), composition_[b], static_cast<int>(b));
  }
}

BlockStructure BlockStructure::from_weight(const IntegralWeight& lambda) {
  std::vector<int> comp;
  for (const auto& [value, mult] : lambda.columns()) comp.push_back(mult);
  return BlockStructure(std::move(comp));
}

SignedInvolution s_action(const SignedInvolution& sigma, int i, const BlockStructure& bs) {
  if (sigma.n() != bs.n()) throw std::invalid_argument("block structure size differs from involution size");
  if (!bs.is_inner(i)) {
    throw std::invalid_argument("positions " + std::to_string(i + 1) + "," + std::to_string(i + 2) +
                                " are not in one block");
  }
  const bool fixed_i = sigma.is_fixed(i);
  const bool fixed_j = sigma.is_fixed(i + 1);
  if (fixed_i && fixed_j) {
    if (sigma.sign(i) == sigma.sign(i + 1)) return sigma;
    auto arcs = sigma.arcs();
    arcs.emplace_back(i, i + 1);
    std::vector<int> signs(sigma.n());
    for (int p = 0; p < sigma.n(); ++p) signs[p] = sigma.is_fixed(p) ? sigma.sign(p) : 1;
    return SignedInvolution::from_arcs(sigma.n(), arcs, signs);
  }
  if (sigma.partner(i) == i + 1) return sigma;
  return sigma.conjugated(i);
}

OrbitClass orbit_class(const SignedInvolution& sigma, const BlockStructure& bs) {
  OrbitClass out;
  out.members_.insert(sigma);
  std::vector<SignedInvolution> frontier{sigma};
  auto visit = [&](const SignedInvolution& s, std::vector<SignedInvolution>& next) {
    if (out.members_.insert(s).second) next.push_back(s);
  };
  while (!frontier.empty()) {
    std::vector<SignedInvolution> next;
    for (const auto& cur : frontier) {
      for (int i = 0; i + 1 < cur.n(); ++i) {
        if (!bs.is_inner(i)) continue;
        visit(s_action(cur, i, bs), next);
        // Reverse edges: an arc {i, i+1} is the image of both opposite-sign pairs.
        if (cur.partner(i) == i + 1) {
          std::vector<int> signs(cur.n());
          for (int p = 0; p < cur.n(); ++p) signs[p] = cur.is_fixed(p) ? cur.sign(p) : 1;
          auto arcs = cur.arcs();
          std::erase(arcs, std::make_pair(i, i + 1));
          for (int first : {1, -1}) {
            signs[i] = first;
            signs[i + 1] = -first;
            visit(SignedInvolution::from_arcs(cur.n(), arcs, signs), next);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace glhecke
