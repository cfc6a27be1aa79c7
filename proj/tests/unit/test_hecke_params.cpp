#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "glhecke/hecke_params.hpp"

using namespace glhecke;

namespace {

Scalar q(int a, int b = 1) { return Scalar(Rational(a, b)); }

std::multiset<std::string> bag(const Multisegment& m) {
  std::multiset<std::string> out;
  for (const auto& s : m.segments()) out.insert(s.str());
  return out;
}

// Independent count: choose segments [a, b] from all candidates in a fixed
// order with multiplicities, subtracting from the remaining support.
std::set<std::multiset<std::string>> brute_force(const std::vector<std::int64_t>& lambda) {
  std::map<std::int64_t, int> left;
  for (auto v : lambda) ++left[v];
  std::vector<std::pair<std::int64_t, std::int64_t>> candidates;
  const auto lo = left.begin()->first;
  const auto hi = left.rbegin()->first;
  for (auto a = lo; a <= hi; ++a) {
    for (auto b = a; b <= hi; ++b) candidates.emplace_back(a, b);
  }
  std::set<std::multiset<std::string>> out;
  std::multiset<std::string> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    bool empty = true;
    for (auto& [v, c] : left) empty = empty && c == 0;
    if (empty) {
      out.insert(cur);
      return;
    }
    if (idx == candidates.size()) return;
    rec(idx + 1);
    const auto [a, b] = candidates[idx];
    int copies = 0;
    while (true) {
      bool ok = true;
      for (auto v = a; v <= b; ++v) ok = ok && left[v] > 0;
      if (!ok) break;
      for (auto v = a; v <= b; ++v) --left[v];
      cur.insert(Segment(Scalar(a), static_cast<int>(b - a + 1)).str());
      ++copies;
      rec(idx + 1);
    }
    for (int c = 0; c < copies; ++c) {
      for (auto v = a; v <= b; ++v) ++left[v];
      cur.erase(cur.find(Segment(Scalar(a), static_cast<int>(b - a + 1)).str()));
    }
  };
  rec(0);
  return out;
}

}  // namespace

TEST_SUITE("hecke_params") {

TEST_CASE("segments") {
  const Segment s(q(-1), 3);
  CHECK(s.end() == q(1));
  CHECK(s.center() == q(0));
  CHECK(s.str() == "{-1,0,1}");
  CHECK(Segment::from_center(q(1, 2), 2).start() == q(0));
  CHECK_THROWS_AS(Segment(q(0), 0), std::invalid_argument);
}

TEST_CASE("inline multisegment syntax") {
  const auto m = Multisegment::parse("{1/2};{-1/2}");
  REQUIRE(m.segments().size() == 2);
  CHECK(m.segments()[0] == Segment(q(1, 2), 1));
  CHECK(Multisegment::parse("({0,1},{0,1})").segments().size() == 2);
  CHECK(Multisegment::parse(" {3, 4} ; {2} ").str() == "{3,4};{2}");
  CHECK_THROWS_AS(Multisegment::parse("{0,2}"), std::invalid_argument);
  CHECK_THROWS_AS(Multisegment::parse("{0,1"), std::invalid_argument);
  CHECK_THROWS_AS(Multisegment::parse("0,1"), std::invalid_argument);
  CHECK_THROWS_AS(Multisegment::parse("{}"), std::invalid_argument);
  CHECK(Multisegment::parse("").segments().empty());
}

TEST_CASE("dominant representatives") {
  const auto hp = HeckeParam::dominant_representative(Multisegment::parse("{2};{3,4}"));
  CHECK(hp.str() == "{3,4};{2}");
  CHECK(hp.multisegment().is_dominant());
  const auto single = HeckeParam::dominant_representative(Multisegment::parse("{5,6}"));
  CHECK(single.str() == "{5,6}");
  for (int n = 1; n <= 6; ++n) {
    std::vector<Segment> full{Segment(q(1 - n, 2), n)};
    CHECK(HeckeParam::dominant_representative(Multisegment(full)) == steinberg_param(n));
  }
  // Ties in center: longer first, then larger start.
  CHECK(HeckeParam::dominant_representative(Multisegment::parse("{1};{0,1,2}")).str() == "{0,1,2};{1}");
}

TEST_CASE("central characters are block coordinates") {
  CHECK(steinberg_param(3).central_character() == std::vector<Scalar>{q(-1), q(0), q(1)});
  CHECK(steinberg_param(1).central_character() == std::vector<Scalar>{q(0)});
  CHECK(HeckeParam::dominant_representative(Multisegment::parse("{1/2};{-1/2}")).central_character() ==
        std::vector<Scalar>{q(1, 2), q(-1, 2)});
  CHECK(block_coordinates(Multisegment::parse("{3,4};{2}")) == std::vector<Scalar>{q(3), q(4), q(2)});
  for (int k = 1; k <= 7; ++k) {
    auto minus_rho = rho(k);
    std::reverse(minus_rho.begin(), minus_rho.end());
    CHECK(steinberg_param(k).central_character() == minus_rho);
  }
  CHECK_THROWS_AS(steinberg_param(0), std::invalid_argument);
}

TEST_CASE("enumeration examples") {
  CHECK(enumerate_multisegments(IntegralWeight({0})).size() == 1);
  const auto ones = enumerate_multisegments(IntegralWeight({1, 1}));
  REQUIRE(ones.size() == 1);
  CHECK(ones[0].str() == "{1};{1}");
  for (int n = 1; n <= 10; ++n) {
    const auto all = enumerate_multisegments(IntegralWeight::consecutive(n));
    CHECK(all.size() == (std::size_t{1} << (n - 1)));
  }
}

TEST_CASE("enumeration agrees with a candidate-segment search") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lambda : weights_in_window(n, -1, 3)) {
      const auto params = enumerate_multisegments(lambda);
      std::set<std::multiset<std::string>> produced;
      for (const auto& hp : params) {
        CHECK(hp.multisegment().is_dominant());
        CHECK(HeckeParam::dominant_representative(hp.multisegment()) == hp);
        CHECK(hp.support() == lambda.as_scalars());
        CHECK(sorted_multiset(hp.central_character()) == hp.support());
        produced.insert(bag(hp.multisegment()));
      }
      CHECK(produced.size() == params.size());
      CHECK(produced == brute_force(lambda.entries()));
    }
  }
}

TEST_CASE("dominant representative is constant on reorderings") {
  const auto ms = Multisegment::parse("{0,1};{2};{-1,0,1};{1}");
  auto segs = ms.segments();
  std::sort(segs.begin(), segs.end(), [](const Segment& a, const Segment& b) { return a.str() < b.str(); });
  const auto ref = HeckeParam::dominant_representative(ms);
  do {
    const auto hp = HeckeParam::dominant_representative(Multisegment(segs));
    CHECK(hp == ref);
    CHECK(hp.support() == ms.support());
  } while (std::next_permutation(segs.begin(), segs.end(),
                                 [](const Segment& a, const Segment& b) { return a.str() < b.str(); }));
}

}  // TEST_SUITE
