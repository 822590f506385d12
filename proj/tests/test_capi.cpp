// Exercises the shared library strictly through its C interface.

#include <cstring>
#include <string>

#include "deltader/deltader.h"
#include "doctest.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  dd_string_free(s);
  return out;
}

dd_module* module_for(dd_algebra* algebra, const char* descriptor) {
  dd_module* m = nullptr;
  REQUIRE(dd_module_parse(algebra, descriptor, &m) == DD_OK);
  return m;
}

}  // namespace

TEST_CASE("C API: solve and render") {
  dd_algebra* g = nullptr;
  REQUIRE(dd_algebra_parse("sl2", &g) == DD_OK);
  CHECK(dd_algebra_dim(g) == 3);
  dd_module* v = module_for(g, "V(3)");
  CHECK(dd_module_dim(v) == 4);
  dd_space* s = nullptr;
  REQUIRE(dd_solve(v, "-2/3", -1, &s) == DD_OK);
  CHECK(dd_space_dimension(s) == 6);
  char* json = nullptr;
  REQUIRE(dd_space_render(s, DD_FORMAT_JSON, &json) == DD_OK);
  CHECK(take(json).find("\"dimension\": 6") != std::string::npos);
  dd_space_free(s);

  dd_space* graded = nullptr;
  REQUIRE(dd_solve(v, "-2/3", 1, &graded) == DD_OK);
  CHECK(dd_space_dimension(graded) == 6);
  dd_space_free(graded);

  dd_module_free(v);
  dd_algebra_free(g);
}

TEST_CASE("C API: scan") {
  dd_algebra* g = nullptr;
  REQUIRE(dd_algebra_parse("sl2", &g) == DD_OK);
  dd_module* v = module_for(g, "adjoint");
  dd_scan_report* r = nullptr;
  REQUIRE(dd_scan(v, 0, &r) == DD_OK);
  REQUIRE(dd_scan_finding_count(r) == 3);
  CHECK(dd_scan_generic_rank(r) == 9);
  CHECK(dd_scan_nonrational_count(r) == 0);
  const char* want_delta[] = {"-1", "1", "1/2"};
  const size_t want_dim[] = {5, 3, 1};
  for (size_t i = 0; i < 3; ++i) {
    char* d = nullptr;
    size_t dim = 0;
    REQUIRE(dd_scan_finding(r, i, &d, &dim) == DD_OK);
    CHECK(take(d) == want_delta[i]);
    CHECK(dim == want_dim[i]);
  }
  char* d = nullptr;
  size_t dim = 0;
  CHECK(dd_scan_finding(r, 3, &d, &dim) == DD_ERR_INDEX_OUT_OF_RANGE);
  char* table = nullptr;
  REQUIRE(dd_scan_render(r, DD_FORMAT_TABLE, &table) == DD_OK);
  CHECK(take(table).find("1/2") != std::string::npos);
  dd_scan_free(r);
  dd_module_free(v);
  dd_algebra_free(g);
}

TEST_CASE("C API: error codes") {
  dd_algebra* g = nullptr;
  CHECK(dd_algebra_parse("sl2 (x) sl2", &g) == DD_ERR_SEMANTIC);
  CHECK(g == nullptr);
  CHECK(std::strstr(dd_last_error(), "tensor") != nullptr);
  CHECK(dd_algebra_parse("so(3)", &g) == DD_ERR_PARSE);
  CHECK(dd_algebra_parse(nullptr, &g) == DD_ERR_INVALID_ARGUMENT);

  REQUIRE(dd_algebra_parse("sl2", &g) == DD_OK);
  dd_module* m = nullptr;
  CHECK(dd_module_parse(g, "V(2", &m) == DD_ERR_PARSE);
  m = module_for(g, "V(2)");
  dd_space* s = nullptr;
  CHECK(dd_solve(m, "0.5", -1, &s) == DD_ERR_INVALID_ARGUMENT);
  CHECK(dd_solve(m, "1", 0, &s) == DD_ERR_NOT_DIAGONAL);
  CHECK(dd_solve(m, "1", 9, &s) == DD_ERR_INDEX_OUT_OF_RANGE);
  CHECK(s == nullptr);
  CHECK(std::string(dd_status_name(DD_ERR_JACOBI)) == "Jacobi violation");

  dd_algebra* bad = nullptr;
  CHECK(dd_algebra_from_json(R"({"dim": 3, "brackets": [[0, 1, 0, "1"], [0, 1, 1, "1"], [0, 2, 2, "1"], [1, 2, 0, "1"]]})",
                             &bad) == DD_ERR_JACOBI);
  CHECK(dd_module_from_json(g, R"({"dim": 1, "action": [[["1"]], [["0"]], [["0"]]]})", &m) ==
        DD_ERR_NOT_A_REPRESENTATION);
  dd_module_free(m);
  dd_algebra_free(g);
}

TEST_CASE("C API: describe round trip through JSON") {
  dd_algebra* g = nullptr;
  REQUIRE(dd_algebra_parse("sl2 ⊕ sl2", &g) == DD_OK);
  dd_module* m = module_for(g, "V(1)⊗V(0) ⊕ V(0)⊗V(2)");
  char* name = nullptr;
  REQUIRE(dd_module_describe(m, &name) == DD_OK);
  CHECK(take(name) == "V(1) (x) V(0) o+ V(0) (x) V(2)");
  char* doc = nullptr;
  REQUIRE(dd_describe_render(g, m, DD_FORMAT_JSON, &doc) == DD_OK);
  const std::string text = take(doc);

  dd_algebra* g2 = nullptr;
  dd_module* m2 = nullptr;
  REQUIRE(dd_load_json(text.c_str(), &g2, &m2) == DD_OK);
  REQUIRE(m2 != nullptr);
  CHECK(dd_algebra_dim(g2) == 6);
  char* custom = nullptr;
  REQUIRE(dd_algebra_describe(g2, &custom) == DD_OK);
  CHECK(take(custom) == "custom");

  for (const char* delta : {"1", "-2", "-1", "1/2"}) {
    dd_space *a = nullptr, *b = nullptr;
    REQUIRE(dd_solve(m, delta, -1, &a) == DD_OK);
    REQUIRE(dd_solve(m2, delta, -1, &b) == DD_OK);
    char *ja = nullptr, *jb = nullptr;
    REQUIRE(dd_space_render(a, DD_FORMAT_JSON, &ja) == DD_OK);
    REQUIRE(dd_space_render(b, DD_FORMAT_JSON, &jb) == DD_OK);
    CHECK(take(ja) == take(jb));
    dd_space_free(a);
    dd_space_free(b);
  }
  dd_module_free(m2);
  dd_algebra_free(g2);
  dd_module_free(m);
  dd_algebra_free(g);
}

TEST_CASE("C API: verify") {
  dd_verify_report* r = nullptr;
  REQUIRE(dd_verify_all(2, &r) == DD_OK);
  CHECK(dd_verify_failures(r) == 0);
  char* json = nullptr;
  REQUIRE(dd_verify_render(r, DD_FORMAT_JSON, &json) == DD_OK);
  CHECK(take(json).find("\"failures\": 0") != std::string::npos);
  dd_verify_free(r);
  CHECK(dd_verify_all(0, &r) == DD_ERR_INVALID_ARGUMENT);
}

TEST_CASE("C API: free functions accept null") {
  dd_algebra_free(nullptr);
  dd_module_free(nullptr);
  dd_space_free(nullptr);
  dd_scan_free(nullptr);
  dd_verify_free(nullptr);
  dd_string_free(nullptr);
  CHECK(dd_space_dimension(nullptr) == 0);
}
