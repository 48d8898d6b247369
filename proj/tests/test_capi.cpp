// Copyright 2026 The thompson-density Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cstdlib>
#include <cstring>
#include <string>

#include "doctest.h"
#include "thompson/thompson.h"

namespace {

// Takes ownership of a string returned by the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  tf_string_free(s);
  return out;
}

tf_element* parse(const char* text) {
  tf_element* g = nullptr;
  REQUIRE(tf_element_parse(text, &g) == TF_OK);
  return g;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(tf_version()) == "1.0.0");
  CHECK(std::string(tf_status_name(TF_OK)) == "ok");
  CHECK(std::string(tf_status_name(TF_ERR_PARSE)) == "parse error");
}

TEST_CASE("elements") {
  tf_element* a = parse("X0 X1 x0 x1");
  char* s = nullptr;
  REQUIRE(tf_element_to_string(a, &s) == TF_OK);
  CHECK(take(s) == "x1 X3");

  const uint64_t *pos = nullptr, *neg = nullptr;
  size_t npos = 0, nneg = 0;
  REQUIRE(tf_element_parts(a, &pos, &npos, &neg, &nneg) == TF_OK);
  REQUIRE(npos == 1);
  REQUIRE(nneg == 1);
  CHECK(pos[0] == 1);
  CHECK(neg[0] == 3);

  const uint64_t p[] = {1}, n[] = {3};
  tf_element* b = nullptr;
  REQUIRE(tf_element_from_parts(p, 1, n, 1, &b) == TF_OK);
  CHECK(tf_element_equal(a, b) == 1);

  tf_element *inv = nullptr, *prod = nullptr;
  REQUIRE(tf_element_invert(a, &inv) == TF_OK);
  REQUIRE(tf_element_multiply(a, inv, &prod) == TF_OK);
  CHECK(tf_element_is_identity(prod) == 1);
  CHECK(tf_element_is_identity(a) == 0);

  tf_element* sym = nullptr;
  REQUIRE(tf_element_symmetry(parse("x0"), &sym) == TF_OK);
  REQUIRE(tf_element_to_string(sym, &s) == TF_OK);
  CHECK(take(s) == "X0");

  const uint64_t bad[] = {2, 1};
  tf_element* c = nullptr;
  CHECK(tf_element_from_parts(bad, 2, nullptr, 0, &c) ==
        TF_ERR_INVALID_ARGUMENT);
  CHECK(c == nullptr);

  for (tf_element* g : {a, b, inv, prod, sym}) tf_element_free(g);
}

TEST_CASE("relations") {
  int holds = -1;
  REQUIRE(tf_verify_relation("X0 x1 x0", "x2", &holds) == TF_OK);
  CHECK(holds == 1);
  REQUIRE(tf_verify_relation("X0 x1 x0", "x3", &holds) == TF_OK);
  CHECK(holds == 0);
}

TEST_CASE("errors carry a message") {
  tf_element* g = nullptr;
  CHECK(tf_element_parse("x0 q7", &g) == TF_ERR_PARSE);
  CHECK(g == nullptr);
  CHECK(std::strlen(tf_last_error()) > 0);
  CHECK(tf_element_parse(nullptr, &g) == TF_ERR_INVALID_ARGUMENT);
  CHECK(tf_element_to_string(nullptr, nullptr) == TF_ERR_INVALID_ARGUMENT);
  tf_genset* s = nullptr;
  CHECK(tf_genset_parse("custom:", &s) != TF_OK);
  CHECK(tf_genset_parse("sideways", &s) != TF_OK);
  tf_forest* f = nullptr;
  CHECK(tf_forest_parse("((.", &f) == TF_ERR_PARSE);
}

TEST_CASE("balls and boundary columns") {
  tf_genset* s = nullptr;
  REQUIRE(tf_genset_parse("standard", &s) == TF_OK);
  CHECK(tf_genset_rank(s) == 2);
  tf_element_list* ball = nullptr;
  REQUIRE(tf_ball(s, 2, &ball) == TF_OK);
  CHECK(tf_element_list_size(ball) == 17);
  CHECK(tf_element_list_get(ball, 17) == nullptr);

  tf_element_list* one = nullptr;
  REQUIRE(tf_ball(s, 0, &one) == TF_OK);
  REQUIRE(tf_element_list_size(one) == 1);
  CHECK(tf_element_is_identity(tf_element_list_get(one, 0)) == 1);
  uint64_t counts[4] = {};
  REQUIRE(tf_cheeger_per_label(one, s, counts, 4) == TF_OK);
  for (uint64_t c : counts) CHECK(c == 1);
  CHECK(tf_cheeger_per_label(one, s, counts, 3) == TF_ERR_INVALID_ARGUMENT);

  tf_element_list_free(one);
  tf_element_list_free(ball);
  tf_genset_free(s);
}

TEST_CASE("forests") {
  tf_forest* f = nullptr;
  REQUIRE(tf_forest_parse("*((..).)", &f) == TF_OK);
  tf_forest* g = nullptr;
  REQUIRE(tf_forest_apply(TF_X1BAR, f, &g) == TF_OK);
  REQUIRE(g != nullptr);
  char* s = nullptr;
  REQUIRE(tf_forest_encode(g, &s) == TF_OK);
  CHECK(take(s) == "(..) *.");

  tf_forest* h = nullptr;
  REQUIRE(tf_forest_apply(TF_X0, f, &h) == TF_OK);
  CHECK(h == nullptr);

  tf_forest* r = nullptr;
  REQUIRE(tf_forest_parse("*. (..)", &r) == TF_OK);
  REQUIRE(tf_forest_apply_within(TF_X1_INV, r, 1, &h) == TF_OK);
  CHECK(h == nullptr);
  REQUIRE(tf_forest_apply_within(TF_X1_INV, r, 2, &h) == TF_OK);
  REQUIRE(h != nullptr);
  tf_forest_free(h);

  REQUIRE(tf_bb_count(14, 4, &s) == TF_OK);
  CHECK(take(s) == "1433465");
  tf_forest_free(f);
  tf_forest_free(g);
  tf_forest_free(r);
}

TEST_CASE("series and xi") {
  char* s = nullptr;
  REQUIRE(tf_series_coefficient(TF_SERIES_ISOLATED, 4, 14, &s) == TF_OK);
  CHECK(take(s) == "52184");
  REQUIRE(tf_series_coefficient(TF_SERIES_TRIVIAL_MARKED, 4, 14, &s) == TF_OK);
  CHECK(take(s) == "611456");
  REQUIRE(tf_series_coefficient(TF_SERIES_MARKED_LEFTMOST, 4, 14, &s) ==
          TF_OK);
  CHECK(take(s) == "284860");

  tf_interval* iv = nullptr;
  REQUIRE(tf_xi(1, 1e-30, &iv) == TF_OK);
  REQUIRE(tf_interval_lo(iv, 20, &s) == TF_OK);
  CHECK(take(s).rfind("0.61803398874989484", 0) == 0);
  REQUIRE(tf_interval_hi(iv, 20, &s) == TF_OK);
  CHECK(take(s).rfind("0.61803398874989484", 0) == 0);
  CHECK(tf_interval_width(iv) <= 1e-30);
  tf_interval_free(iv);
  CHECK(tf_xi(1, 0.0, &iv) == TF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("runs and reports") {
  tf_run_config c;
  tf_run_config_init(&c);
  CHECK(c.n == -1);
  c.command = "density";
  c.n = 2;
  c.k = 1;
  c.genset = "symmetric";
  tf_report* r = nullptr;
  REQUIRE(tf_run(&c, &r) == TF_OK);
  CHECK(tf_report_status(r) == 0);
  REQUIRE(tf_report_table_count(r) >= 1);
  CHECK(std::string(tf_report_table_name(r, 0)) == "density");
  CHECK(tf_report_row_count(r, 0) == 1);
  std::string num, den;
  for (size_t j = 0; j < tf_report_column_count(r, 0); ++j) {
    const std::string col = tf_report_column(r, 0, j);
    if (col == "density_num") num = tf_report_cell(r, 0, 0, j);
    if (col == "density_den") den = tf_report_cell(r, 0, 0, j);
  }
  CHECK(num == "4");
  CHECK(den == "3");
  CHECK(tf_report_cell(r, 0, 5, 0) == nullptr);
  CHECK(tf_report_summary_lookup(r, "no such key") == nullptr);

  char* s = nullptr;
  REQUIRE(tf_report_render(r, "json", &s) == TF_OK);
  CHECK(take(s).find("\"command\"") != std::string::npos);
  REQUIRE(tf_report_render(r, "csv", &s) == TF_OK);
  CHECK(take(s).rfind("n,k,genset", 0) == 0);
  CHECK(tf_report_render(r, "yaml", &s) == TF_ERR_INVALID_ARGUMENT);
  tf_report_free(r);

  const char* checks[] = {"x0 x0 = x0"};
  tf_run_config g;
  tf_run_config_init(&g);
  g.command = "group-verify";
  g.checks = checks;
  g.nchecks = 1;
  REQUIRE(tf_run(&g, &r) == TF_OK);
  CHECK(tf_report_status(r) == 2);
  CHECK(std::strlen(tf_report_message(r)) > 0);
  tf_report_free(r);

  tf_run_config bad;
  tf_run_config_init(&bad);
  bad.command = "xi";
  bad.n = 3;
  REQUIRE(tf_run(&bad, &r) == TF_OK);
  CHECK(tf_report_status(r) == 3);
  tf_report_free(r);
  CHECK(tf_run(nullptr, &r) == TF_ERR_INVALID_ARGUMENT);
}
