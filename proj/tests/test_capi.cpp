#include <gtest/gtest.h>

#include <string>

#include <json.hpp>

#include "eqres/eqres.h"

namespace {

const char* kLinear =
    "n=3 d=1 params=a,b\n"
    "a*x1 + b*(x1 + x2 + x3)\n"
    "a*x2 + b*(x1 + x2 + x3)\n"
    "a*x3 + b*(x1 + x2 + x3)\n";

// Takes ownership of a string returned by the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  eqres_string_free(s);
  return out;
}

struct SystemHandle {
  eqres_system* ptr = nullptr;
  ~SystemHandle() { eqres_system_free(ptr); }
};

struct SymmetricHandle {
  eqres_symmetric* ptr = nullptr;
  ~SymmetricHandle() { eqres_symmetric_free(ptr); }
};

}  // namespace

TEST(CApi, StatusNames) {
  EXPECT_STREQ(eqres_status_name(EQRES_OK), "ok");
  EXPECT_STREQ(eqres_status_name(EQRES_ERR_PARSE), "parse error");
  EXPECT_STREQ(eqres_status_name(EQRES_ERR_NOT_EQUIVARIANT), "not equivariant");
  EXPECT_STREQ(eqres_status_name(static_cast<eqres_status>(42)), "unknown status");
}

TEST(CApi, ParseAndInspect) {
  SystemHandle s;
  ASSERT_EQ(eqres_system_parse(kLinear, &s.ptr), EQRES_OK);
  EXPECT_EQ(eqres_system_n(s.ptr), 3);
  EXPECT_EQ(eqres_system_d(s.ptr), 1);
  EXPECT_EQ(eqres_system_n(nullptr), -1);
  char* text = nullptr;
  ASSERT_EQ(eqres_system_print(s.ptr, &text), EQRES_OK);
  EXPECT_EQ(take(text).substr(0, 20), "n=3 d=1 params=a,b\n(");
  int ok = -1;
  char* detail = nullptr;
  ASSERT_EQ(eqres_system_check_equivariance(s.ptr, &ok, &detail), EQRES_OK);
  EXPECT_EQ(ok, 1);
  EXPECT_EQ(take(detail), "equivariant");
  EXPECT_STREQ(eqres_last_error(), "");
}

TEST(CApi, ParseErrors) {
  SystemHandle s;
  EXPECT_EQ(eqres_system_parse("n=2 d=1\nx1\n2x2\n", &s.ptr), EQRES_ERR_PARSE);
  EXPECT_EQ(s.ptr, nullptr);
  EXPECT_NE(std::string(eqres_last_error()).find("line 3"), std::string::npos) << eqres_last_error();
  EXPECT_EQ(eqres_system_parse(nullptr, &s.ptr), EQRES_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(eqres_system_parse(kLinear, nullptr), EQRES_ERR_INVALID_ARGUMENT);
  // A successful call clears the message.
  ASSERT_EQ(eqres_system_parse(kLinear, &s.ptr), EQRES_OK);
  EXPECT_STREQ(eqres_last_error(), "");
}

TEST(CApi, ResultantAndDecomposition) {
  SystemHandle s;
  ASSERT_EQ(eqres_system_parse(kLinear, &s.ptr), EQRES_OK);
  char* out = nullptr;
  ASSERT_EQ(eqres_resultant(s.ptr, EQRES_FORMAT_TEXT, &out), EQRES_OK);
  EXPECT_EQ(take(out), "a^3 + 3*a^2*b\n");
  ASSERT_EQ(eqres_resultant(s.ptr, EQRES_FORMAT_JSON, &out), EQRES_OK);
  EXPECT_EQ(take(out), R"({"resultant":"a^3 + 3*a^2*b"})");
  ASSERT_EQ(eqres_decompose(s.ptr, EQRES_FORMAT_JSON, 1, &out), EQRES_OK);
  EXPECT_EQ(take(out), R"({"prefactor":"a^2","factors":[{"expr":"a + 3*b","multiplicity":1}]})");
  ASSERT_EQ(eqres_decompose(s.ptr, EQRES_FORMAT_TEXT, 2, &out), EQRES_OK);
  EXPECT_EQ(take(out), "prefactor: a^2  [base a, exponent 2]\nfactor (3) ^1: a + 3*b\n");
}

TEST(CApi, NotEquivariant) {
  SystemHandle s;
  ASSERT_EQ(eqres_system_parse("n=2 d=1\nx1\n2*x2\n", &s.ptr), EQRES_OK);
  int ok = -1;
  char* detail = nullptr;
  ASSERT_EQ(eqres_system_check_equivariance(s.ptr, &ok, &detail), EQRES_OK);
  EXPECT_EQ(ok, 0);
  EXPECT_EQ(take(detail), "swapping x1 and x2 breaks F^{1}");
  char* out = nullptr;
  EXPECT_EQ(eqres_decompose(s.ptr, EQRES_FORMAT_JSON, 1, &out), EQRES_ERR_NOT_EQUIVARIANT);
  EXPECT_EQ(out, nullptr);
  EXPECT_NE(std::string(eqres_last_error()).find("not S_n-equivariant"), std::string::npos);
  // The direct resultant does not need equivariance.
  ASSERT_EQ(eqres_resultant(s.ptr, EQRES_FORMAT_TEXT, &out), EQRES_OK);
  EXPECT_EQ(take(out), "2\n");
}

TEST(CApi, Verify) {
  SystemHandle s;
  ASSERT_EQ(eqres_system_parse(kLinear, &s.ptr), EQRES_OK);
  auto opts = eqres_verify_options_default();
  EXPECT_EQ(opts.mode, EQRES_VERIFY_AUTO);
  int equal = -1;
  char* out = nullptr;
  ASSERT_EQ(eqres_verify(s.ptr, &opts, EQRES_FORMAT_JSON, &equal, &out), EQRES_OK);
  EXPECT_EQ(equal, 1);
  auto j = nlohmann::json::parse(take(out));
  EXPECT_EQ(j["mode"], "symbolic");
  EXPECT_EQ(j["decomposition"], j["direct"]);

  opts.mode = EQRES_VERIFY_SAMPLED;
  opts.samples = 2;
  opts.seed = 5;
  ASSERT_EQ(eqres_verify(s.ptr, &opts, EQRES_FORMAT_JSON, &equal, &out), EQRES_OK);
  EXPECT_EQ(equal, 1);
  j = nlohmann::json::parse(take(out));
  EXPECT_EQ(j["mode"], "sampled");
  ASSERT_EQ(j["samples"].size(), 2u);
  EXPECT_TRUE(j["samples"][0]["point"].contains("a"));
  EXPECT_EQ(j["samples"][1]["decomposition"], j["samples"][1]["direct"]);

  ASSERT_EQ(eqres_verify(s.ptr, nullptr, EQRES_FORMAT_TEXT, &equal, nullptr), EQRES_OK);
  EXPECT_EQ(equal, 1);
  opts.samples = 0;
  EXPECT_EQ(eqres_verify(s.ptr, &opts, EQRES_FORMAT_TEXT, &equal, &out), EQRES_ERR_INVALID_ARGUMENT);
}

TEST(CApi, Discriminant) {
  SymmetricHandle f;
  ASSERT_EQ(eqres_symmetric_create(4, 3, "c3=1, c21=-1", &f.ptr), EQRES_OK);
  char* out = nullptr;
  ASSERT_EQ(eqres_symmetric_print(f.ptr, &out), EQRES_OK);
  EXPECT_EQ(take(out), "c3=1, c21=-1, c111=0");
  ASSERT_EQ(eqres_discriminant(f.ptr, EQRES_FORMAT_JSON, 1, &out), EQRES_OK);
  auto j = nlohmann::json::parse(take(out));
  EXPECT_EQ(j["n"], 4);
  EXPECT_EQ(j["a"], "5");
  EXPECT_EQ(j["sign"], 1);
  EXPECT_EQ(j["value"], "-5");
  EXPECT_TRUE(j.contains("factors"));
  ASSERT_EQ(eqres_discriminant_direct(f.ptr, &out), EQRES_OK);
  EXPECT_EQ(take(out), "-5");

  SymmetricHandle g;
  ASSERT_EQ(eqres_symmetric_create(3, 2, "generic", &g.ptr), EQRES_OK);
  ASSERT_EQ(eqres_discriminant(g.ptr, EQRES_FORMAT_JSON, 1, &out), EQRES_OK);
  j = nlohmann::json::parse(take(out));
  EXPECT_FALSE(j.contains("value"));
  EXPECT_EQ(j["prefactor"], "c2^2");
  EXPECT_EQ(j["sign"], 1);

  SymmetricHandle bad;
  EXPECT_EQ(eqres_symmetric_create(4, 3, "c5=1", &bad.ptr), EQRES_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(eqres_symmetric_create(4, 3, "c3=", &bad.ptr), EQRES_ERR_PARSE);
  EXPECT_EQ(eqres_symmetric_create(1, 3, "c3=1", &bad.ptr), EQRES_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(bad.ptr, nullptr);
}

TEST(CApi, CoefficientFile) {
  SymmetricHandle f;
  ASSERT_EQ(eqres_symmetric_create(4, 3, EQRES_DATA_DIR "/clebsch.coeffs", &f.ptr), EQRES_OK);
  char* out = nullptr;
  ASSERT_EQ(eqres_discriminant_direct(f.ptr, &out), EQRES_OK);
  EXPECT_EQ(take(out), "-5");
}

TEST(CApi, Selfcheck) {
  int passed = -1;
  char* out = nullptr;
  ASSERT_EQ(eqres_selfcheck(EQRES_FORMAT_JSON, &passed, &out), EQRES_OK);
  EXPECT_EQ(passed, 1);
  auto j = nlohmann::json::parse(take(out));
  EXPECT_EQ(j["passed"], true);
  EXPECT_GE(j["checks"].size(), 20u);
  EXPECT_EQ(eqres_selfcheck(EQRES_FORMAT_TEXT, nullptr, &out), EQRES_ERR_INVALID_ARGUMENT);
}
