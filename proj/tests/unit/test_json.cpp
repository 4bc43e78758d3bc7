#include "doctest.h"

#include <fstream>
#include <sstream>

#include "bcx/error.hpp"
#include "bcx/examples.hpp"
#include "bcx/expr.hpp"
#include "bcx/json_io.hpp"
#include "bcx/random.hpp"

using namespace bcx;

namespace {

std::string json_error_path(std::string_view text) {
  try {
    (void)function_from_json(parse_json(text));
  } catch (const JsonFormatError& e) {
    return e.path();
  }
  return "none";
}

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(BCX_GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("exact encodings") {
  CHECK(dump(to_json(GaussianRational(Rational(-1, 2), Rational(3)))) == R"(["-1","2","3","1"])");
  CHECK(dump(to_json(Bicomplex::e_plus())) == R"(["1","1","0","1","0","1","0","1"])");
  const BicomplexFunction f(Poly4::monomial({0, 2, 0, 0}, GaussianRational(0, 1)), Poly4());
  CHECK(dump(to_json(f)) == R"({"minus":[],"plus":[[0,2,0,0,["0","1","1","1"]]]})");
}

TEST_CASE("JSON round trips") {
  Rng rng(61);
  GenConfig cfg;
  for (int t = 0; t < 300; ++t) {
    const BicomplexFunction f = random_function(rng, cfg);
    CHECK(function_from_json(parse_json(dump(to_json(f)))) == f);
    const Operator op = random_operator(rng, cfg);
    CHECK(operator_from_json(to_json(op)) == op);
    const Bicomplex z = random_bicomplex(rng, 9);
    CHECK(bicomplex_from_json(to_json(z)) == z);
  }
}

TEST_CASE("malformed JSON is rejected with a path") {
  CHECK(json_error_path("{\"plus\": [], ") == "$");
  CHECK(json_error_path("[]") == "$");
  CHECK(json_error_path(R"({"plus": []})") == "$");
  CHECK(json_error_path(R"({"plus": [], "minus": [], "extra": 1})") == "$");
  CHECK(json_error_path(R"({"plus": {}, "minus": []})") == "$.plus");
  CHECK(json_error_path(R"({"plus": [], "minus": [[0,0,0,0,["1","1","0"]]]})") == "$.minus[0][4]");
  CHECK(json_error_path(R"({"plus": [[0,0,0,0,["0","1","0","1"]]], "minus": []})") == "$.plus[0][4]");
  CHECK(json_error_path(R"({"plus": [[0,0,0,0,["01","1","0","1"]]], "minus": []})") == "$.plus[0][4][0]");
  CHECK(json_error_path(R"({"plus": [[0,0,0,0,["1","0","0","1"]]], "minus": []})") == "$.plus[0][4][1]");
  CHECK(json_error_path(R"({"plus": [[0,0,0,0,["2","4","0","1"]]], "minus": []})") == "$.plus[0][4]");
  CHECK(json_error_path(R"({"plus": [[0,0,0,0,[1,"1","0","1"]]], "minus": []})") == "$.plus[0][4][0]");
  CHECK(json_error_path(R"({"plus": [[0,-1,0,0,["1","1","0","1"]]], "minus": []})") == "$.plus[0][1]");
  CHECK(json_error_path(
            R"({"plus": [[1,0,0,0,["1","1","0","1"]],[0,0,0,0,["1","1","0","1"]]], "minus": []})") ==
        "$.plus[1]");
  CHECK(json_error_path(R"({"plus": [[0,0,0,0,["1","1","0","1"]],[0,0,0,0,["1","1","0","1"]]], "minus": []})") ==
        "$.plus[1]");
}

TEST_CASE("golden snapshots are byte-stable") {
  const BicomplexFunction F1 = reference_F1();
  const BicomplexFunction G1 = reference_G1();
  CHECK(format(F1) + "\n" == read_golden("F1.txt"));
  CHECK(format(G1) + "\n" == read_golden("G1.txt"));
  CHECK(dump(to_json(F1)) + "\n" == read_golden("F1.json"));
  CHECK(dump(to_json(G1)) + "\n" == read_golden("G1.json"));
  CHECK(dump(worked_examples(ValueEncoding::text)) + "\n" == read_golden("worked_examples.json"));
  CHECK(dump(worked_examples(ValueEncoding::exact)) + "\n" == read_golden("worked_examples_exact.json"));
}
