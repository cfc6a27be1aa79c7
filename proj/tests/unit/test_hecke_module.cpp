#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "glhecke/gamma.hpp"
#include "glhecke/hecke_module.hpp"
#include "glhecke/ktype_oracle.hpp"

using namespace glhecke;

namespace {

Scalar q(int a, int b = 1) { return Scalar(Rational(a, b)); }

HeckeParam dom(const char* text) { return HeckeParam::dominant_representative(Multisegment::parse(text)); }

// Weight tuples of the coset basis: every arrangement of the block labels,
// each block filling its positions with its coordinates in increasing order.
std::multiset<std::vector<Scalar>> weight_tuples(const Multisegment& ms) {
  std::vector<int> labels;
  for (std::size_t b = 0; b < ms.segments().size(); ++b) {
    labels.insert(labels.end(), ms.segments()[b].len(), static_cast<int>(b));
  }
  std::multiset<std::vector<Scalar>> out;
  do {
    std::vector<int> used(ms.segments().size(), 0);
    std::vector<Scalar> t;
    for (int b : labels) t.push_back(ms.segments()[b].start() + Scalar(used[b]++));
    out.insert(t);
  } while (std::next_permutation(labels.begin(), labels.end()));
  return out;
}

bool in_span(const std::vector<Matrix>& basis, const Matrix& m) {
  std::vector<Vector> cols;
  auto flat = [](const Matrix& a) {
    Vector v;
    for (int r = 0; r < a.rows(); ++r) {
      for (int c = 0; c < a.cols(); ++c) v.push_back(a(r, c));
    }
    return v;
  };
  for (const auto& b : basis) cols.push_back(flat(b));
  if (cols.empty()) return m.is_zero();
  const auto v = flat(m);
  return coordinates(Matrix::from_columns(cols, static_cast<int>(v.size())), v).has_value();
}

std::vector<Multisegment> all_orderings(const HeckeParam& hp) {
  auto segs = hp.segments();
  std::vector<int> idx(segs.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::vector<Multisegment> out;
  do {
    std::vector<Segment> s;
    for (int i : idx) s.push_back(segs[i]);
    Multisegment m(s);
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

}  // namespace

TEST_SUITE("hecke_module") {

TEST_CASE("permutation helpers") {
  CHECK(permutation_length({0, 1, 2}) == 0);
  CHECK(permutation_length({2, 1, 0}) == 3);
  CHECK(reduced_word({1, 0, 2}) == std::vector<int>{0});
  const Permutation w{2, 0, 3, 1};
  const auto word = reduced_word(w);
  CHECK(static_cast<int>(word.size()) == permutation_length(w));
  Permutation p{0, 1, 2, 3};
  for (int i : word) {
    // Right multiplication by s_i swaps positions i and i+1.
    std::swap(p[i], p[i + 1]);
  }
  CHECK(p == w);
}

TEST_CASE("Steinberg module") {
  for (int k = 1; k <= 6; ++k) {
    const auto m = build_standard_module(steinberg_param(k));
    REQUIRE(m.dim() == 1);
    for (const auto& s : m.matrices().s) CHECK(s.as_scalar() == Scalar(-1));
    auto minus_rho = rho(k);
    std::reverse(minus_rho.begin(), minus_rho.end());
    for (int j = 0; j < k; ++j) CHECK(m.matrices().eps[j].as_scalar() == minus_rho[j]);
    CHECK(verify_relations(m.matrices()));
  }
}

TEST_CASE("two singletons") {
  const auto m = build_standard_module(Multisegment::parse("{1/2};{-1/2}"));
  REQUIRE(m.dim() == 2);
  const auto& e0 = m.matrices().eps[0];
  CHECK(e0(0, 0) == q(1, 2));
  CHECK(e0(1, 0) == q(0));
  CHECK(e0(1, 1) == q(-1, 2));
  CHECK(e0(0, 1) == q(1));
  CHECK(m.matrices().s[0](1, 0) == q(1));
  CHECK(verify_relations(m.matrices()));
  CHECK(m.index_of({0, 1}) == 0);
  CHECK(m.index_of({1, 0}) == 1);
}

TEST_CASE("a perturbed matrix breaks the relations") {
  const auto m = build_standard_module(dom("{0,1};{-1,0}"));
  REQUIRE(verify_relations(m.matrices()));
  auto bad = m.matrices();
  bad.eps[1](0, 0) += Scalar(1);
  const auto check = check_relations(bad);
  CHECK_FALSE(check.ok);
  CHECK_FALSE(check.failures.empty());
  auto bad_s = m.matrices();
  bad_s.s[0](0, 0) += Scalar(1);
  CHECK_FALSE(verify_relations(bad_s));
}

TEST_CASE("basis, dimension and weights against independent counts") {
  for (int k = 1; k <= 5; ++k) {
    for (const auto& lambda : weights_in_window(k, -1, 2)) {
      for (const auto& hp : enumerate_multisegments(lambda)) {
        const auto m = build_standard_module(hp);
        std::int64_t expected = factorial(k);
        for (const auto& s : hp.segments()) expected /= factorial(s.len());
        CHECK(m.dim() == expected);
        for (std::size_t u = 1; u < m.basis().size(); ++u) {
          CHECK(permutation_length(m.basis()[u - 1]) <= permutation_length(m.basis()[u]));
        }
        std::multiset<std::vector<Scalar>> diag;
        for (int u = 0; u < m.dim(); ++u) {
          std::vector<Scalar> t;
          for (const auto& e : m.matrices().eps) t.push_back(e(u, u));
          diag.insert(t);
        }
        CHECK(diag == weight_tuples(hp.multisegment()));
        for (const auto& e : m.matrices().eps) {
          for (int r = 0; r < m.dim(); ++r) {
            for (int c = 0; c < r; ++c) CHECK(e(r, c).is_zero());
          }
        }
      }
    }
  }
}

TEST_CASE("central characters") {
  const auto m = build_standard_module(dom("{2};{3,4}"));
  const auto cc = central_character_of_module(m);
  CHECK(cc.ok);
  CHECK(cc.chi == std::vector<Scalar>{q(4), q(3), q(2)});
  CHECK(cc.elementary == elementary_symmetric({q(2), q(3), q(4)}));
  CHECK(elementary_symmetric({q(1), q(2), q(3)}) == std::vector<Scalar>{q(6), q(11), q(6)});
  CHECK(elementary_symmetric({}).empty());
  const Scalar z(Rational(1), Rational(1));
  const auto complex = build_standard_module(Multisegment({Segment(z, 2), Segment(q(0), 1)}));
  CHECK(verify_relations(complex.matrices()));
  CHECK(central_character_of_module(complex).ok);
}

TEST_CASE("intertwiners") {
  const auto a = build_standard_module(Multisegment::parse("{3};{1}"));
  const auto b = build_standard_module(Multisegment::parse("{1};{3}"));
  const auto hom = intertwiner_space(a, b);
  REQUIRE(hom.dimension == 1);
  CHECK(rank(hom.basis.front()) == 2);

  const auto c = build_standard_module(Multisegment::parse("{1/2};{-1/2}"));
  const auto d = build_standard_module(Multisegment::parse("{-1/2};{1/2}"));
  const auto linked = intertwiner_space(c, d);
  REQUIRE(linked.dimension == 1);
  CHECK(rank(linked.basis.front()) == 1);

  // Modules with different central characters have no maps between them.
  const auto e = build_standard_module(Multisegment::parse("{5};{1}"));
  CHECK(intertwiner_space(a, e).dimension == 0);
  CHECK(intertwiner_space_direct(a, e).dimension == 0);
}

TEST_CASE("both intertwiner solvers agree") {
  for (int k = 1; k <= 3; ++k) {
    for (const auto& lambda : weights_in_window(k, 0, 2)) {
      for (const auto& hp : enumerate_multisegments(lambda)) {
        const auto orders = all_orderings(hp);
        for (const auto& from_order : orders) {
          const auto from = build_standard_module(from_order);
          for (const auto& to_order : orders) {
            const auto to = build_standard_module(to_order);
            const auto fast = intertwiner_space(from, to);
            const auto slow = intertwiner_space_direct(from, to);
            CHECK(fast.dimension == slow.dimension);
            for (const auto& t : fast.basis) {
              CHECK(in_span(slow.basis, t));
              for (const auto& g : {std::make_pair(&from.matrices().s, &to.matrices().s),
                                    std::make_pair(&from.matrices().eps, &to.matrices().eps)}) {
                for (std::size_t i = 0; i < g.first->size(); ++i) {
                  CHECK(t * (*g.first)[i] == (*g.second)[i] * t);
                }
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("Langlands quotients") {
  CHECK(irreducible_quotient(steinberg_param(3)).dim == 1);
  CHECK(irreducible_quotient(dom("{3};{1}")).dim == 2);
  const auto triv = irreducible_quotient(dom("{2};{1};{0}"));
  REQUIRE(triv.dim == 1);
  for (const auto& s : triv.matrices.s) CHECK(s.as_scalar() == Scalar(1));
  CHECK(triv.matrices.eps[0].as_scalar() == q(2));
  CHECK(triv.matrices.eps[2].as_scalar() == q(0));
  const auto speh = irreducible_quotient(dom("{0,1};{-1,0}"));
  CHECK(speh.dim >= 1);
  CHECK(speh.dim < 6);
  CHECK(verify_relations(speh.matrices));

  for (int k = 1; k <= 4; ++k) {
    for (const auto& lambda : weights_in_window(k, 0, 2)) {
      for (const auto& hp : enumerate_multisegments(lambda)) {
        const auto qm = irreducible_quotient(hp);
        CHECK(qm.intertwiner_dimension == 1);
        CHECK(qm.dim >= 1);
        CHECK(verify_relations(qm.matrices));
        std::vector<int> comp;
        for (const auto& s : hp.segments()) comp.push_back(s.len());
        CHECK(young_sign_multiplicity(qm.matrices, comp) >= Rational(1));
      }
    }
  }
}

TEST_CASE("sign multiplicities of Young subgroups") {
  const auto spherical = build_standard_module(dom("{2};{1};{0}"));
  CHECK(young_sign_multiplicity(spherical.matrices(), {3}) == Rational(1));
  CHECK(young_sign_multiplicity(spherical.matrices(), {1, 1, 1}) == Rational(6));
  const auto st = build_standard_module(steinberg_param(4));
  CHECK(young_sign_multiplicity(st.matrices(), {4}) == Rational(1));
  CHECK(young_sign_multiplicity(st.matrices(), {2, 2}) == Rational(1));
  CHECK_THROWS_AS(young_sign_multiplicity(st.matrices(), {2}), std::invalid_argument);
}

TEST_CASE("three computations of the standard module dimension agree") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& lambda : weights_in_window(n, 0, 3)) {
      for (const auto& p : enumerate_real_params(lambda, 0)) {
        const int k = p.level();
        if (k == 0 || k > 5) continue;
        const auto formula = dimension_std(p, k);
        const auto oracle = hom_multiplicity(p, k);
        const auto module = build_standard_module(*gamma(p, k).param);
        CHECK(formula == oracle);
        CHECK(formula == module.dim());
        CHECK(young_sign_multiplicity(module.matrices(), w_structure(p, k).composition) >= Rational(1));
      }
    }
  }
}

}  // TEST_SUITE
