#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "glhecke/psi.hpp"

using namespace glhecke;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string joined_stages(const PsiTrace& t) {
  std::string out;
  for (std::size_t i = 0; i < t.stages.size(); ++i) {
    if (i) out += "\n";
    out += t.stages[i].render();
  }
  return out;
}

const IntegralWeight kExampleLambda({4, 4, 3, 3, 3, 3, 2, 2, 2, 1, 1, 0});
const char* const kExampleTau = "{0,1,2,3,4};{1,2,3};{2};{3};{3};{4}";

}  // namespace

TEST_SUITE("psi") {

TEST_CASE("initial diagram and rendering") {
  const auto d = initial_diagram(IntegralWeight({2, 2, 1, 0}));
  REQUIRE(d.columns.size() == 3);
  CHECK(d.columns[0].value == 2);
  CHECK(d.columns[0].entries.size() == 2);
  CHECK(d.columns[1].entries.front().sign == -1);
  CHECK(d.render() == "2  1  0\n+  -  +\n+\n");
  CHECK(flatten(d).str() == "+ + - +");
  CHECK(flatten(d, {{1, 0}, {0}, {0}}).str() == "+ + - +");
  CHECK(integral_bounds(Segment(Scalar(-1), 3)) == std::make_pair(std::int64_t{-1}, std::int64_t{1}));
  CHECK_THROWS_AS(integral_bounds(Segment(Scalar(Rational(1, 2)), 2)), std::invalid_argument);
}

TEST_CASE("all singletons give the parity signs") {
  const IntegralWeight lambda({3, 2, 2, 1, 0});
  const auto t = psi_g_trace(Multisegment::parse("{3};{2};{2};{1};{0}"), lambda);
  CHECK(t.stages.size() == 1);
  CHECK(t.flattened.str() == "- + + - +");
}

TEST_CASE("a full segment joins its end columns") {
  const auto odd = psi_g_trace(Multisegment::parse("{0,1,2}"), IntegralWeight::consecutive(3));
  CHECK(odd.flattened.str() == "a + a");
  const auto even = psi_g_trace(Multisegment::parse("{0,1,2,3}"), IntegralWeight::consecutive(4));
  CHECK(even.flattened.str() == "a + - a");
  CHECK(even.stages.size() == 2);
}

TEST_CASE("worked example matches the transcribed diagrams") {
  const auto t = psi_g_trace(Multisegment::parse(kExampleTau), kExampleLambda);
  REQUIRE(t.stages.size() == 3);
  const auto golden = read_file(std::string(GLHECKE_GOLDEN_DIR) + "/psi_worked_example_stages.txt");
  CHECK(joined_stages(t) == golden);
  CHECK(t.flattened.signature() == std::make_pair(6, 6));
}

TEST_CASE("worked example flattenings lie in one class") {
  std::istringstream in(read_file(std::string(GLHECKE_GOLDEN_DIR) + "/psi_worked_example.txt"));
  std::vector<SignedInvolution> flattenings;
  for (std::string line; std::getline(in, line);) {
    const std::string key = "flattening ";
    if (line.rfind(key, 0) == 0) flattenings.push_back(SignedInvolution::parse(line.substr(key.size())));
  }
  REQUIRE(flattenings.size() == 2);
  const auto cls = psi_g(Multisegment::parse(kExampleTau), kExampleLambda);
  const auto bs = BlockStructure::from_weight(kExampleLambda);
  for (const auto& f : flattenings) {
    CHECK(cls.contains(f));
    CHECK(orbit_class(f, bs) == cls);
  }
  for (const auto& out : psi_g_all_outputs(Multisegment::parse(kExampleTau), kExampleLambda)) {
    CHECK(cls.contains(out));
  }
}

TEST_CASE("support mismatches are rejected") {
  CHECK_THROWS_AS(psi_g(Multisegment::parse("{0,1}"), IntegralWeight({2, 1})), std::invalid_argument);
  CHECK_THROWS_AS(psi_g(Multisegment::parse("{1/2}"), IntegralWeight({0})), std::invalid_argument);
}

TEST_CASE("signature and arc count") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lambda : weights_in_window(n, 0, 3)) {
      int even = 0;
      for (auto v : lambda.entries()) even += v % 2 == 0 ? 1 : 0;
      for (const auto& hp : enumerate_multisegments(lambda)) {
        const auto t = psi_g_trace(hp.multisegment(), lambda);
        CHECK(t.flattened.signature() == std::make_pair(even, n - even));
        int long_segments = 0;
        for (const auto& s : hp.segments()) long_segments += s.len() >= 2 ? 1 : 0;
        CHECK(static_cast<int>(t.flattened.arcs().size()) == long_segments);
        CHECK(static_cast<int>(t.stages.size()) == long_segments + 1);
      }
    }
  }
}

TEST_CASE("distinct multisegments at consecutive weights give distinct involutions") {
  for (int n = 1; n <= 8; ++n) {
    const auto lambda = IntegralWeight::consecutive(n);
    std::set<SignedInvolution> images;
    const auto params = enumerate_multisegments(lambda);
    for (const auto& hp : params) {
      const auto cls = psi_g(hp.multisegment(), lambda);
      // Every block is a singleton, so each class has one member.
      CHECK(cls.size() == 1);
      images.insert(cls.canonical());
    }
    CHECK(images.size() == params.size());
  }
}

TEST_CASE("well-posedness and injectivity examples") {
  const auto wp = verify_psi_wellposed(IntegralWeight({1, 1, 0}));
  CHECK(wp.ok());
  CHECK(wp.multisegments == 2);
  CHECK(wp.variants >= 2);
  const auto three = verify_injectivity(IntegralWeight::consecutive(3));
  CHECK(three.ok());
  CHECK(three.classes == 4);
  CHECK(verify_injectivity(IntegralWeight({0})).classes == 1);
  const auto mixed = verify_injectivity(IntegralWeight({2, 1, 1, 0}));
  CHECK(mixed.ok());
  CHECK(mixed.classes == mixed.multisegments);
  CHECK(verify_psi_wellposed(IntegralWeight({2, 2, 1, 1, 0})).ok());
}

}  // TEST_SUITE
