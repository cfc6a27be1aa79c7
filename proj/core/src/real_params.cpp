#include "glhecke/real_params.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace glhecke {

RdsFactor RdsFactor::gl1(Eps eps, Scalar nu) { return {Kind::GL1, eps, 0, nu}; }

RdsFactor RdsFactor::gl2(int l, Scalar nu) {
  if (l < 2) throw std::invalid_argument("GL(2) discrete series needs l >= 2, got " + std::to_string(l));
  return {Kind::GL2, Eps::Trivial, l, nu};
}

int RdsFactor::level() const {
  if (is_gl2()) return l_;
  return eps_ == Eps::Trivial ? 1 : 0;
}

Rational RdsFactor::slope() const { return is_gl1() ? nu_.re() : nu_.re().half(); }

std::vector<Scalar> RdsFactor::infinitesimal_character() const {
  if (is_gl1()) return {nu_};
  Scalar shift = Rational(l_ - 1, 2);
  return {nu_ + shift, nu_ - shift};
}

std::string RdsFactor::str() const {
  if (is_gl1()) return std::string(eps_ == Eps::Trivial ? "triv" : "sgn") + ":" + nu_.str();
  return "gl2:" + std::to_string(l_) + ":" + nu_.str();
}

bool canonical_less(const RdsFactor& a, const RdsFactor& b) {
  if (auto c = a.slope() <=> b.slope(); c != 0) return c > 0;
  if (a.level() != b.level()) return a.level() > b.level();
  if (auto c = a.nu().im() <=> b.nu().im(); c != 0) return c < 0;
  // Remaining ties are GL(1) factors with equal nu.
  return a.eps() == Eps::Trivial && b.eps() == Eps::Sign;
}

int RealParam::rank() const {
  int n = 0;
  for (const auto& f : factors_) n += f.size();
  return n;
}

int RealParam::level() const {
  int total = 0;
  for (const auto& f : factors_) total += f.level();
  return total;
}

int RealParam::gl2_count() const {
  return static_cast<int>(std::count_if(factors_.begin(), factors_.end(),
                                        [](const RdsFactor& f) { return f.is_gl2(); }));
}

int RealParam::sign_count() const {
  return static_cast<int>(std::count_if(factors_.begin(), factors_.end(),
                                        [](const RdsFactor& f) { return f.is_sign(); }));
}

std::vector<Scalar> RealParam::infinitesimal_character() const {
  std::vector<Scalar> out;
  for (const auto& f : factors_) {
    auto part = f.infinitesimal_character();
    out.insert(out.end(), part.begin(), part.end());
  }
  return sorted_multiset(std::move(out));
}

bool RealParam::is_dominant() const {
  for (std::size_t i = 1; i < factors_.size(); ++i) {
    if (factors_[i - 1].slope() < factors_[i].slope()) return false;
  }
  return true;
}

RealParam RealParam::canonical_class() const {
  if (!is_dominant()) throw std::invalid_argument("parameter " + str() + " is not dominant");
  auto sorted = factors_;
  std::stable_sort(sorted.begin(), sorted.end(), canonical_less);
  return RealParam(std::move(sorted));
}

std::string RealParam::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += "; ";
    out += factors_[i].str();
  }
  return out + "]";
}

bool operator<(const RealParam& a, const RealParam& b) {
  return std::lexicographical_compare(
      a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end(),
      [](const RdsFactor& x, const RdsFactor& y) {
        if (canonical_less(x, y)) return true;
        if (canonical_less(y, x)) return false;
        return x.nu() < y.nu();
      });
}

std::vector<RealParam> enumerate_real_params(const IntegralWeight& lambda, int min_level) {
  // Remaining multiplicities, keyed by value in decreasing order.
  std::map<std::int64_t, int, std::greater<>> remaining;
  for (auto v : lambda.entries()) ++remaining[v];

  std::set<RealParam> found;
  std::vector<RdsFactor> current;

  // The largest remaining value is the top of exactly one factor; branch on it.
  std::function<void()> rec = [&]() {
    auto top = std::find_if(remaining.begin(), remaining.end(), [](auto& kv) { return kv.second > 0; });
    if (top == remaining.end()) {
      RealParam p(current);
      if (p.level() >= min_level) {
        auto sorted = current;
        std::stable_sort(sorted.begin(), sorted.end(), canonical_less);
        found.insert(RealParam(std::move(sorted)));
      }
      return;
    }
    const std::int64_t a = top->first;
    --top->second;
    for (Eps eps : {Eps::Trivial, Eps::Sign}) {
      current.push_back(RdsFactor::gl1(eps, Scalar(a)));
      rec();
      current.pop_back();
    }
    for (auto it = std::next(top); it != remaining.end(); ++it) {
      if (it->second == 0) continue;
      const std::int64_t b = it->first;
      --it->second;
      current.push_back(RdsFactor::gl2(static_cast<int>(a - b + 1), Scalar(Rational(a + b, 2))));
      rec();
      current.pop_back();
      ++it->second;
    }
    ++top->second;
  };
  rec();
  return {found.begin(), found.end()};
}

}  // namespace glhecke
