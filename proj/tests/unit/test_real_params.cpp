#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "glhecke/real_params.hpp"

using namespace glhecke;

namespace {

RdsFactor triv(Scalar nu) { return RdsFactor::gl1(Eps::Trivial, nu); }
RdsFactor sgn(Scalar nu) { return RdsFactor::gl1(Eps::Sign, nu); }
Scalar q(int a, int b = 1) { return Scalar(Rational(a, b)); }

using FactorBag = std::multiset<std::string>;

FactorBag bag(const RealParam& p) {
  FactorBag out;
  for (const auto& f : p.factors()) out.insert(f.str());
  return out;
}

int level_by_rule(const std::vector<RdsFactor>& fs) {
  int lev = 0;
  for (const auto& f : fs) {
    if (f.is_gl2()) {
      lev += f.l();
    } else if (f.eps() == Eps::Trivial) {
      lev += 1;
    }
  }
  return lev;
}

// Independent enumeration over positions of lambda: every partial matching by
// strictly decreasing pairs, every sign choice on the unmatched positions.
std::set<FactorBag> brute_force_classes(const std::vector<std::int64_t>& lambda, int min_level) {
  const int n = static_cast<int>(lambda.size());
  std::set<FactorBag> out;
  std::vector<bool> used(n, false);
  std::vector<RdsFactor> cur;
  std::function<void(int)> rec = [&](int i) {
    while (i < n && used[i]) ++i;
    if (i == n) {
      if (level_by_rule(cur) >= min_level) {
        FactorBag b;
        for (const auto& f : cur) b.insert(f.str());
        out.insert(b);
      }
      return;
    }
    used[i] = true;
    for (auto f : {triv(q(static_cast<int>(lambda[i]))), sgn(q(static_cast<int>(lambda[i])))}) {
      cur.push_back(f);
      rec(i + 1);
      cur.pop_back();
    }
    for (int j = i + 1; j < n; ++j) {
      if (used[j] || lambda[j] == lambda[i]) continue;
      const auto a = std::max(lambda[i], lambda[j]);
      const auto b = std::min(lambda[i], lambda[j]);
      used[j] = true;
      cur.push_back(RdsFactor::gl2(static_cast<int>(a - b + 1), Scalar(Rational(a + b, 2))));
      rec(i + 1);
      cur.pop_back();
      used[j] = false;
    }
    used[i] = false;
  };
  rec(0);
  return out;
}

}  // namespace

TEST_SUITE("real_params") {

TEST_CASE("factor levels") {
  CHECK(RealParam({triv(q(0))}).level() == 1);
  CHECK(RealParam({sgn(q(0))}).level() == 0);
  CHECK(RealParam({RdsFactor::gl2(5, q(0))}).level() == 5);
  CHECK(RealParam().level() == 0);
  CHECK(RealParam().rank() == 0);
  std::vector<RdsFactor> spherical;
  for (int i = 0; i < 7; ++i) spherical.push_back(triv(q(6 - 2 * i, 2)));
  CHECK(RealParam(spherical).level() == 7);
  CHECK_THROWS_AS(RdsFactor::gl2(1, q(0)), std::invalid_argument);
}

TEST_CASE("infinitesimal characters") {
  for (int n = 2; n <= 7; ++n) {
    const auto ic = RealParam({RdsFactor::gl2(n, q(0))}).infinitesimal_character();
    CHECK(ic == std::vector<Scalar>{q(n - 1, 2), q(1 - n, 2)});
  }
  CHECK(RealParam({triv(q(3))}).infinitesimal_character() == std::vector<Scalar>{q(3)});
  CHECK(RealParam({sgn(q(1, 2)), triv(q(-1, 2))}).infinitesimal_character() ==
        std::vector<Scalar>{q(1, 2), q(-1, 2)});
  // Complex nu: the shift is real.
  const Scalar z(Rational(1), Rational(2));
  CHECK(RealParam({RdsFactor::gl2(3, z)}).infinitesimal_character() ==
        std::vector<Scalar>{z + Scalar(1), z - Scalar(1)});
}

TEST_CASE("dominance compares Re(nu) divided by the factor size") {
  CHECK(RealParam({triv(q(2)), RdsFactor::gl2(2, q(3))}).is_dominant());
  CHECK_FALSE(RealParam({RdsFactor::gl2(2, q(3)), triv(q(2))}).is_dominant());
  CHECK(RealParam({RdsFactor::gl2(4, q(-7))}).is_dominant());
  CHECK(RealParam().is_dominant());
}

TEST_CASE("canonical classes") {
  const RealParam a({sgn(q(2)), triv(q(2)), RdsFactor::gl2(3, q(4))});
  const RealParam expected({RdsFactor::gl2(3, q(4)), triv(q(2)), sgn(q(2))});
  CHECK(a.canonical_class() == expected);
  CHECK(expected.canonical_class() == expected);
  CHECK(RealParam({triv(q(1)), sgn(q(1))}).canonical_class() == RealParam({sgn(q(1)), triv(q(1))}).canonical_class());
  CHECK_THROWS_AS((void)RealParam({RdsFactor::gl2(2, q(3)), triv(q(2))}).canonical_class(), std::invalid_argument);
  // Imaginary parts break ties in increasing order.
  const Scalar up(Rational(0), Rational(1));
  const Scalar down(Rational(0), Rational(-1));
  CHECK(RealParam({triv(up), triv(down)}).canonical_class() == RealParam({triv(down), triv(up)}));
}

TEST_CASE("canonical forms depend only on the factor multiset") {
  std::vector<RdsFactor> fs{triv(q(1)), sgn(q(1)), RdsFactor::gl2(2, q(2)), RdsFactor::gl2(4, q(2)), triv(q(-1))};
  auto by_str = [](const RdsFactor& a, const RdsFactor& b) { return a.str() < b.str(); };
  std::sort(fs.begin(), fs.end(), by_str);
  std::set<std::string> canonical_forms;
  int dominant_orderings = 0;
  do {
    const RealParam p(fs);
    if (!p.is_dominant()) continue;
    ++dominant_orderings;
    const auto c = p.canonical_class();
    canonical_forms.insert(c.str());
    CHECK(c.canonical_class() == c);
    CHECK(c.level() == p.level());
    CHECK(c.infinitesimal_character() == p.infinitesimal_character());
    CHECK(static_cast<int>(c.infinitesimal_character().size()) == c.rank());
  } while (std::next_permutation(fs.begin(), fs.end(), by_str));
  CHECK(dominant_orderings > 1);
  CHECK(canonical_forms.size() == 1);
  // A different multiset gives a different canonical form.
  const RealParam other({RdsFactor::gl2(4, q(2)), RdsFactor::gl2(2, q(2)), triv(q(1)), triv(q(1)), triv(q(-1))});
  CHECK(other.canonical_class().str() != *canonical_forms.begin());
}

TEST_CASE("enumeration examples") {
  const auto zero = enumerate_real_params(IntegralWeight({0}), 0);
  REQUIRE(zero.size() == 2);
  CHECK(zero[0] == RealParam({triv(q(0))}));
  CHECK(zero[1] == RealParam({sgn(q(0))}));
  CHECK_THROWS_AS(IntegralWeight::from_rationals(std::vector<Rational>{Rational(1, 2), Rational(-1, 2)}),
                  std::invalid_argument);
  const auto level2 = enumerate_real_params(IntegralWeight({1, 0}), 2);
  CHECK(level2.size() == 2);
  for (const auto& p : level2) CHECK(p.level() >= 2);
}

TEST_CASE("enumeration agrees with an independent position-based search") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lambda : weights_in_window(n, 0, 4)) {
      for (int min_level : {0, n - 1, n}) {
        const auto params = enumerate_real_params(lambda, min_level);
        std::set<FactorBag> produced;
        for (const auto& p : params) {
          CHECK(p.is_dominant());
          CHECK(p.canonical_class() == p);
          produced.insert(bag(p));
        }
        CHECK(produced.size() == params.size());  // no duplicate classes
        CHECK(produced == brute_force_classes(lambda.entries(), min_level));
      }
    }
  }
}

TEST_CASE("properties of enumerated parameters") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lambda : weights_in_window(n, 0, 5)) {
      const auto params = enumerate_real_params(lambda, 0);
      // Deterministic order.
      CHECK(std::is_sorted(params.begin(), params.end()));
      for (const auto& p : params) {
        CHECK(p.rank() == n);
        CHECK(p.infinitesimal_character() == lambda.as_scalars());
        CHECK(p.level() == level_by_rule(p.factors()));
        int gl2_excess = 0;
        for (const auto& f : p.factors()) {
          if (f.is_gl2()) gl2_excess += f.l() - 2;
        }
        CHECK(p.level() == n + gl2_excess - p.sign_count());
        // Level is additive over concatenation.
        auto fs = p.factors();
        const std::vector<RdsFactor> head(fs.begin(), fs.begin() + static_cast<std::ptrdiff_t>(fs.size() / 2));
        const std::vector<RdsFactor> tail(fs.begin() + static_cast<std::ptrdiff_t>(fs.size() / 2), fs.end());
        CHECK(RealParam(head).level() + RealParam(tail).level() == p.level());
      }
    }
  }
}

}  // TEST_SUITE
