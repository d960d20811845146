// Copyright 2026 The cxprob Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exercises the shared library through its public header only.

#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <string>

#include "cxprob/cxprob.h"

namespace {

// Takes ownership of a library-allocated string.
std::string take(char* text) {
  std::string copy = text == nullptr ? "" : text;
  cxp_string_free(text);
  return copy;
}

cxp_family* make_family(const char* poly, const char* exp) {
  cxp_family* family = nullptr;
  REQUIRE(cxp_family_create(poly, exp, &family) == CXP_OK);
  return family;
}

}  // namespace

TEST_CASE("status helpers", "[capi]") {
  CHECK(cxp_exit_code(CXP_OK) == 0);
  CHECK(cxp_exit_code(CXP_ERR_CONFIG) == 2);
  CHECK(cxp_exit_code(CXP_ERR_INVALID_ARGUMENT) == 2);
  CHECK(cxp_exit_code(CXP_ERR_EMPTY_SPACE) == 3);
  CHECK(cxp_exit_code(CXP_ERR_DEGENERATE_SPACE) == 3);
  CHECK(cxp_exit_code(CXP_ERR_INSUFFICIENT_RESOURCES) == 3);
  CHECK(cxp_exit_code(CXP_ERR_IO) == 4);
  CHECK(std::string(cxp_status_name(CXP_ERR_IO)) == "I/O error");
  CHECK(std::string(cxp_version()).size() > 0);
}

TEST_CASE("families through the C interface", "[capi]") {
  cxp_family* family = make_family("1:2:1/2", "2");
  CHECK(cxp_family_size(family) == 4);
  char* label = nullptr;
  REQUIRE(cxp_family_member(family, 1, &label) == CXP_OK);
  CHECK(take(label) == "n^(3/2)");
  CHECK(cxp_family_member(family, 9, &label) == CXP_ERR_NOT_FOUND);

  char* json = nullptr;
  REQUIRE(cxp_family_to_json(family, &json) == CXP_OK);
  const std::string text = take(json);
  cxp_family* copy = nullptr;
  REQUIRE(cxp_family_from_json(text.c_str(), &copy) == CXP_OK);
  CHECK(cxp_family_size(copy) == 4);
  cxp_family_free(copy);
  cxp_family_free(family);

  cxp_family* bad = nullptr;
  CHECK(cxp_family_create("1:2:0", nullptr, &bad) == CXP_ERR_INVALID_ARGUMENT);
  CHECK(std::string(cxp_last_error()).find("step") != std::string::npos);
  CHECK(cxp_family_create(nullptr, nullptr, &bad) == CXP_ERR_INVALID_ARGUMENT);
  CHECK(cxp_family_from_json("{not json", &bad) == CXP_ERR_INVALID_ARGUMENT);
  cxp_family_free(nullptr);
}

TEST_CASE("evaluation through the C interface", "[capi]") {
  char* out = nullptr;
  REQUIRE(cxp_evaluate("2^n", 10, 20, &out) == CXP_OK);
  CHECK(take(out) == "1024");
  REQUIRE(cxp_derivative("n^2", 3, 20, &out) == CXP_OK);
  CHECK(take(out) == "6");
  CHECK(cxp_evaluate("sin n", 3, 20, &out) == CXP_ERR_INVALID_ARGUMENT);
  CHECK(cxp_evaluate("n^2", 3, 5, &out) == CXP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("weighted space through the C interface", "[capi]") {
  cxp_family* family = make_family("1,2", nullptr);
  cxp_model1* space = nullptr;
  REQUIRE(cxp_model1_build(family, "1/2", 1, 30, &space) == CXP_OK);
  char* out = nullptr;
  REQUIRE(cxp_model1_probability(space, "n", &out) == CXP_OK);
  CHECK(take(out).starts_with("0.53664052048697645058647285792"));
  REQUIRE(cxp_model1_normalization(space, &out) == CXP_OK);
  CHECK(take(out).starts_with("0.71552069398263526744863047722"));
  REQUIRE(cxp_model1_weight(space, "n^1", &out) == CXP_OK);
  CHECK(take(out) == "0.75");
  CHECK(cxp_model1_probability(space, "2^n", &out) == CXP_ERR_NOT_FOUND);

  int passed = 0;
  REQUIRE(cxp_model1_kolmogorov(space, "1e-12", &passed, &out) == CXP_OK);
  CHECK(passed == 1);
  CHECK(take(out).find("\"additivity\"") != std::string::npos);

  const std::uint64_t ns[] = {1, 5};
  REQUIRE(cxp_asymptotic_report(family, "1/2", ns, 2, 20, 0, &out) == CXP_OK);
  CHECK(take(out).starts_with("n,p_exp_total,p_poly_total,max_uniform_deviation\n1,0,1,"));

  cxp_model1_free(space);
  cxp_family_free(family);
}

TEST_CASE("evolution space through the C interface", "[capi]") {
  cxp_family* family = make_family("1,2", "2");
  char* out = nullptr;
  REQUIRE(cxp_step_budget(4, "63", "1", "1", "2", &out) == CXP_OK);
  CHECK(take(out) == "15");
  CHECK(cxp_step_budget(1, "1/2", "1", "1", "2", &out) == CXP_ERR_INSUFFICIENT_RESOURCES);

  cxp_space* space = nullptr;
  REQUIRE(cxp_space_build(family, 4, "64", "1", "1", "2", &space) == CXP_OK);
  CHECK(cxp_space_admissible_count(space) == 3);
  REQUIRE(cxp_space_probability(space, "*", &out) == CXP_OK);
  CHECK(take(out) == "1");
  REQUIRE(cxp_space_probability(space, "n, 2^n", &out) == CXP_OK);
  CHECK(take(out) == "2/3");
  REQUIRE(cxp_space_conditional(space, "n", "n,n^2", &out) == CXP_OK);
  CHECK(take(out) == "1/2");

  REQUIRE(cxp_space_to_json(space, &out) == CXP_OK);
  const std::string json = take(out);
  cxp_space* copy = nullptr;
  REQUIRE(cxp_space_from_json(json.c_str(), &copy) == CXP_OK);
  REQUIRE(cxp_space_step_budget(copy, &out) == CXP_OK);
  CHECK(take(out) == "16");
  cxp_space_free(copy);

  cxp_space* joint = nullptr;
  REQUIRE(cxp_space_combine_independent(space, space, nullptr, &joint) == CXP_OK);
  REQUIRE(cxp_space_admissible_fraction(joint, &out) == CXP_OK);
  CHECK(take(out) == "1/3");
  cxp_space_free(joint);
  REQUIRE(cxp_space_combine_dependent(space, space, "1/2", nullptr, &joint) == CXP_OK);
  cxp_space_free(joint);
  CHECK(cxp_space_combine_dependent(space, space, "5", nullptr, &joint) ==
        CXP_ERR_INVALID_ARGUMENT);

  cxp_space* empty = nullptr;
  CHECK(cxp_space_build(family, 4, "9/4", "1", "1", "2", &empty) == CXP_ERR_EMPTY_SPACE);
  CHECK(std::string(cxp_last_error()).find("3") != std::string::npos);

  cxp_space_free(space);
  cxp_family_free(family);
}

TEST_CASE("joint quantities through the C interface", "[capi]") {
  char* out = nullptr;
  REQUIRE(cxp_joint_power("1", "2", 1, 1, &out) == CXP_OK);
  CHECK(take(out) == "3/2");
  int satisfied = 0;
  REQUIRE(cxp_check_constraint("2", "2", "2", "1/2", 30, &satisfied, &out) == CXP_OK);
  CHECK(satisfied == 1);
  CHECK(take(out).starts_with("1.41503749927884381854626105605"));
  REQUIRE(cxp_interpret("0", &out) == CXP_OK);
  CHECK(take(out) == "unreachable");
  REQUIRE(cxp_interpret("1/2", &out) == CXP_OK);
  CHECK(take(out) == "P-distant");
}

TEST_CASE("quantum row through the C interface", "[capi]") {
  cxp_quantum_values row{};
  CHECK(cxp_quantum_row("1/10", "1/10 + pi/3", 30, &row) == CXP_ERR_INVALID_ARGUMENT);
  REQUIRE(cxp_quantum_row("pi/12", "5*pi/12", 30, &row) == CXP_OK);
  CHECK(row.distance_stated == Catch::Approx(1.0).epsilon(1e-14));
  CHECK(row.complexity_probability == Catch::Approx(0.5).epsilon(1e-14));
  CHECK(row.sqrt_quantum_probability == Catch::Approx(0.5).epsilon(1e-14));
  CHECK(cxp_quantum_row("pi/3", "pi/4", 30, &row) == CXP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("config parsing through the C interface", "[capi]") {
  cxp_config* config = nullptr;
  REQUIRE(cxp_config_parse("precision = 20\n[quantum]\ngrid_points = 3\n", &config) == CXP_OK);
  CHECK(cxp_config_precision(config) == 20);
  CHECK(cxp_run_command(config, "model1", "/tmp", nullptr, 0, nullptr, 0) ==
        CXP_ERR_CONFIG);
  CHECK(cxp_run_command(config, "bogus", "/tmp", nullptr, 0, nullptr, 0) ==
        CXP_ERR_INVALID_ARGUMENT);
  cxp_config_free(config);
  CHECK(cxp_config_parse("[family]\npoly_min=1\npoly_max=2\npoly_step=0\n", &config) ==
        CXP_ERR_CONFIG);
  CHECK(std::string(cxp_last_error()).find("family.poly_step") != std::string::npos);
  CHECK(cxp_config_load("/nonexistent.ini", &config) == CXP_ERR_IO);
}
