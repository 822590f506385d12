#include "doctest.h"
#include "serialize.hpp"
#include "suite.hpp"

using namespace deltader;

namespace {

// Re-reads a module through text, as the file input path does.
Representation through_text(const Representation& m) {
  Json doc{{"algebra", algebra_to_json(*m.algebra())}, {"module", module_to_json(m)}};
  Json back = Json::parse(doc.dump());
  auto algebra = std::make_shared<const LieAlgebra>(algebra_from_json(back.at("algebra")));
  return module_from_json(back.at("module"), algebra);
}

}  // namespace

TEST_CASE("algebra JSON shape") {
  Json j = algebra_to_json(*sl2());
  CHECK(j.at("dim") == 3);
  CHECK(j.at("brackets").size() == 3);
  CHECK(j.at("brackets")[0] == Json::array({0, 1, 0, "2"}));
  CHECK(j.at("labels") == Json::array({"e-", "h", "e+"}));
  CHECK(algebra_from_json(j) == *sl2());
}

TEST_CASE("algebra JSON input accepts the minimal schema") {
  Json j = Json::parse(R"({"dim": 3, "brackets": [[1, 0, 0, "-2"], [1, 2, 2, "2"], [2, 0, 1, "1"]], "labels": ["e-", "h", "e+"]})");
  CHECK(algebra_from_json(j) == *sl2());
  CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"brackets": []})")), InvalidArgument);
  CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"dim": 2, "brackets": [[0, 3, 0, "1"]]})")), IndexOutOfRange);
  Json bad = Json::parse(R"({"dim": 3, "brackets": [[0, 1, 0, "1"], [0, 1, 1, "1"], [0, 2, 2, "1"], [1, 2, 0, "1"]]})");
  CHECK_THROWS_AS(algebra_from_json(bad), JacobiViolation);
}

TEST_CASE("module JSON errors") {
  Json j = module_to_json(sl2_module(1));
  j["action"][0][0][0] = "5";
  CHECK_THROWS_AS(module_from_json(j, sl2()), NotARepresentation);
  Json short_action = module_to_json(sl2_module(1));
  short_action["action"].erase(0);
  CHECK_THROWS_AS(module_from_json(short_action, sl2()), ShapeMismatch);
}

TEST_CASE("property: JSON round trip gives identical solver output") {
  for (const auto& in : suite::semisimple_inputs()) {
    CAPTURE(in.name);
    auto copy = through_text(in.module);
    CHECK(*copy.algebra() == *in.module.algebra());
    CHECK(copy.action() == in.module.action());
    for (const auto& d : {Rational(1), Rational(-1), Rational(1, 2), Rational(-2, 3)})
      CHECK(space_to_json(solve(copy, d)).dump() == space_to_json(solve(in.module, d)).dump());
    CHECK(scan_to_json(scan(copy)).dump() == scan_to_json(scan(in.module)).dump());
  }
}

TEST_CASE("space JSON") {
  Json j = space_to_json(solve(sl2_module(2), Rational(1, 2), 1));
  CHECK(j.at("delta") == "1/2");
  CHECK(j.at("dimension") == 1);
  CHECK(j.at("basis").size() == 1);
  CHECK(j.at("basis")[0].size() == 3);
  CHECK(j.at("weights") == Json::array({"0"}));
  CHECK(space_to_json(solve(sl2_module(2), Rational(1, 2))).at("weights").is_null());
}

TEST_CASE("scan JSON") {
  Json j = scan_to_json(scan(sl2_module(2)));
  CHECK(j.at("generic_rank") == 9);
  CHECK(j.at("findings") == Json::parse(R"([{"delta": "-1", "dimension": 5}, {"delta": "1", "dimension": 3},
                                               {"delta": "1/2", "dimension": 1}])"));
  CHECK(j.at("nonrational_factors") == Json::array());
}

TEST_CASE("tables") {
  auto t = scan_to_table(scan(sl2_module(1)));
  CHECK(t.find("-2") != std::string::npos);
  auto s = space_to_table(solve(sl2_module(1), Rational(-2)), sl2_module(1));
  CHECK(s.find("dimension = 4") != std::string::npos);
  auto v = verify_to_table(verify_all(1));
  CHECK(v.find("0 failure(s)") != std::string::npos);
  CHECK(verify_to_json(verify_all(1)).at("failures") == 0);
}
