#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "glhecke/io.hpp"

using namespace glhecke;
using glhecke::io::json;

TEST_SUITE("io") {

TEST_CASE("scalars and rationals") {
  CHECK(io::to_json(Rational(6, 2)) == json("3"));
  CHECK(io::to_json(Rational(-1, 2)) == json("-1/2"));
  const Scalar z(Rational(1, 2), Rational(-3));
  CHECK(io::to_json(z) == json{{"re", "1/2"}, {"im", "-3"}});
  CHECK(io::scalar_from_json(io::to_json(z)) == z);
  CHECK(io::scalar_from_json(json("5/3")) == Scalar(Rational(5, 3)));
  CHECK(io::scalar_from_json(json(4)) == Scalar(4));
  CHECK(io::scalar_from_json(json{{"re", "2"}}) == Scalar(2));
  CHECK_THROWS_AS(io::scalar_from_json(json(1.5)), std::invalid_argument);
}

TEST_CASE("real parameters") {
  const auto p = io::parse_real_param("[sgn:1/2; gl2:4:0; sgn:-1/2]");
  REQUIRE(p.factors().size() == 3);
  CHECK(p.factors()[1].l() == 4);
  CHECK(io::parse_real_param("triv:3/2;triv:1/2") == RealParam({RdsFactor::gl1(Eps::Trivial, Scalar(Rational(3, 2))),
                                                                 RdsFactor::gl1(Eps::Trivial, Scalar(Rational(1, 2)))}));
  CHECK(io::parse_real_param(p.str()) == p);
  CHECK(io::real_param_from_json(io::to_json(p)) == p);
  const auto j = io::to_json(p);
  CHECK(j["factors"][0]["kind"] == "gl1");
  CHECK(j["factors"][0]["eps"] == "sgn");
  CHECK(j["factors"][1]["l"] == 4);
  CHECK(j["factors"][2]["nu"]["re"] == "-1/2");
  CHECK_THROWS_AS(io::parse_real_param(""), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_real_param("[triv:0"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_real_param("gl2:1:0"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_real_param("gl2:x:0"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_real_param("triv:0; bogus:1"), std::invalid_argument);
  try {
    io::parse_real_param("triv:0; sgn:1/0");
    FAIL("expected an error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("factor 2") != std::string::npos);
  }
  CHECK_THROWS_AS(io::real_param_from_json(json{{"factors", {{{"kind", "gl3"}, {"nu", "0"}}}}}),
                  std::invalid_argument);
}

TEST_CASE("multisegments and modules") {
  const auto m = Multisegment::parse("{0,1};{-1,0}");
  const auto j = io::to_json(m);
  CHECK(j["segments"][0]["start"] == "0");
  CHECK(j["segments"][1]["len"] == 2);
  CHECK(io::multisegment_from_json(j) == m);
  const auto module = build_standard_module(Multisegment::parse("{1/2};{-1/2}"));
  const auto mj = io::to_json(module);
  CHECK(mj["dim"] == 2);
  CHECK(mj["k"] == 2);
  CHECK(mj["eps"][0] == json::array({json::array({"1/2", "1"}), json::array({"0", "-1/2"})}));
  CHECK(mj["s"][0].size() == 2);
  CHECK(io::to_json(IntegralWeight({2, 1})) == json{2, 1});
}

TEST_CASE("signed involutions") {
  const auto s = SignedInvolution::parse("+ a b - b a");
  const auto j = io::to_json(s);
  CHECK(j["n"] == 6);
  CHECK(j["arcs"] == json{{2, 6}, {3, 5}});
  CHECK(j["signs"]["1"] == "+");
  CHECK(j["signs"]["4"] == "-");
  CHECK(io::signed_involution_from_json(j) == s);
  json unicode = j;
  unicode["signs"]["4"] = "\xe2\x88\x92";
  CHECK(io::signed_involution_from_json(unicode) == s);
  json bad = j;
  bad["signs"]["9"] = "+";
  CHECK_THROWS_AS(io::signed_involution_from_json(bad), std::invalid_argument);
  const auto cls = orbit_class(SignedInvolution::parse("+ -"), BlockStructure({2}));
  const auto cj = io::to_json(cls);
  CHECK(cj["size"] == 3);
  CHECK(cj["signature"] == json{1, 1});
  CHECK(cj["canonical_text"] == "+ -");
}

TEST_CASE("csv tables") {
  CHECK(io::csv_field("plain") == "plain");
  CHECK(io::csv_field("a,b") == "\"a,b\"");
  CHECK(io::csv_field("say \"x\"") == "\"say \"\"x\"\"\"");
  CHECK(io::csv_row({"a", "b,c"}) == "a,\"b,c\"\n");
  const auto real = io::real_params_csv(enumerate_real_params(IntegralWeight({0}), 0));
  CHECK(real == "factors,rank,level,gl2,sign,infinitesimal_character\n[triv:0],1,1,0,0,0\n[sgn:0],1,0,0,1,0\n");
  const auto hecke = io::hecke_params_csv({steinberg_param(2)});
  CHECK(hecke == "segments,k,central_character\n\"{-1/2,1/2}\",2,-1/2 1/2\n");
  const auto dec = io::decomposition_csv(tensor_power_standard(1, 0, 2));
  CHECK(dec.rfind("tuple,multiplicity\n", 0) == 0);
  CHECK(dec.find("V(2),1\n") != std::string::npos);
}

TEST_CASE("atomic writes") {
  const auto dir = std::filesystem::temp_directory_path() / "glhecke_io_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "out.json").string();
  io::write_atomic(path, "first");
  io::write_atomic(path, "second");
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == "second");
  CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
  CHECK_THROWS_AS(io::write_atomic((dir / "missing" / "x").string(), "x"), std::runtime_error);
  std::filesystem::remove_all(dir);
}

}  // TEST_SUITE
