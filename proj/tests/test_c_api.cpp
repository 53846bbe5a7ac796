// Copyright 2026 The uninorm Authors
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

// Exercises the shared library through its C interface only.

#include <gtest/gtest.h>

#include <string>

#include "uninorm/uninorm.h"

namespace {

std::string take(char* s) {
  std::string out(s);
  un_string_free(s);
  return out;
}

un_uninorm* family(const char* spec) {
  un_uninorm* u = nullptr;
  EXPECT_EQ(un_uninorm_from_family(spec, &u), UN_OK) << un_last_error();
  return u;
}

}  // namespace

TEST(CApi, Basics) {
  EXPECT_STREQ(un_status_name(UN_ERR_PARSE), "parse");
  un_uninorm* u = family("idemmin(e=2,n=4)");
  ASSERT_NE(u, nullptr);
  EXPECT_EQ(un_uninorm_scale(u), 4);
  EXPECT_EQ(un_uninorm_neutral(u), 2);
  EXPECT_EQ(un_uninorm_at(u, 1, 3), 1);
  EXPECT_EQ(un_uninorm_at(u, 9, 3), -1);
  EXPECT_EQ(un_is_idempotent(u), 1);
  int conj = -1;
  EXPECT_EQ(un_is_conjunctive(u, &conj), UN_OK);
  EXPECT_EQ(conj, 1);

  un_uninorm* d = nullptr;
  ASSERT_EQ(un_dual(u, &d), UN_OK);
  EXPECT_EQ(un_uninorm_neutral(d), 2);
  EXPECT_EQ(un_uninorm_equal(u, d), 0);
  un_uninorm_free(d);
  un_uninorm_free(u);
}

TEST(CApi, ErrorsLeaveOutputsUntouched) {
  un_uninorm* u = nullptr;
  EXPECT_EQ(un_uninorm_from_family("idemmin(e=2,n=4", &u), UN_ERR_PARSE);
  EXPECT_EQ(u, nullptr);
  EXPECT_EQ(un_last_error_line(), 1);
  EXPECT_EQ(un_last_error_column(), 16);
  EXPECT_NE(std::string(un_last_error()), "");

  un_table* t = nullptr;
  EXPECT_EQ(un_table_parse("scale 1\nneutral 1\n0 1\n0 1\n", &t), UN_ERR_PARSE);
  EXPECT_EQ(un_last_error_line(), 4);
  EXPECT_EQ(un_table_parse(nullptr, &t), UN_ERR_ARGUMENT);

  ASSERT_EQ(un_table_parse("scale 2\nneutral 1\n0 0 0\n0 1 1\n0 1 2\n", &t), UN_OK);
  EXPECT_EQ(un_uninorm_from_table(t, &u), UN_ERR_INVALID_UNINORM);
  un_report* r = nullptr;
  ASSERT_EQ(un_validate(t, 0, &r), UN_OK);
  EXPECT_EQ(un_report_verdict(r), 0);
  char* text = nullptr;
  ASSERT_EQ(un_report_render(r, UN_FORMAT_TEXT, &text), UN_OK);
  EXPECT_NE(take(text).find("neutrality"), std::string::npos);
  un_report_free(r);
  un_table_free(t);

  un_uninorm_list* list = nullptr;
  EXPECT_EQ(un_enumerate(9, 1, nullptr, &list), UN_ERR_RESOURCE);
  EXPECT_EQ(list, nullptr);
  EXPECT_EQ(un_certify(9, nullptr, &r), UN_ERR_RESOURCE);
}

TEST(CApi, CheckAndRender) {
  un_uninorm* a = family("idemmin(e=2,n=4)");
  un_uninorm* b = family("luk-upper(e=2,n=4)");
  un_report* r = nullptr;
  ASSERT_EQ(un_classify_and_check(a, a, 0, &r), UN_OK);
  EXPECT_EQ(un_report_verdict(r), 1);
  char* text = nullptr;
  ASSERT_EQ(un_report_render(r, UN_FORMAT_TEXT, &text), UN_OK);
  EXPECT_EQ(take(text).rfind("distributive: true; case: equal-neutral; theorem agrees", 0), 0u);
  char* json = nullptr;
  ASSERT_EQ(un_report_render(r, UN_FORMAT_STRUCTURED, &json), UN_OK);
  EXPECT_NE(take(json).find("\"format-version\": 1"), std::string::npos);
  EXPECT_EQ(un_report_render(r, 7, &json), UN_ERR_ARGUMENT);
  un_report_free(r);

  ASSERT_EQ(un_classify_and_check(b, b, 0, &r), UN_OK);
  EXPECT_EQ(un_report_verdict(r), 0);
  EXPECT_EQ(un_report_divergence(r), 0);
  un_report_free(r);
  un_uninorm_free(a);
  un_uninorm_free(b);
}

TEST(CApi, DecomposeComposeRoundTrip) {
  un_uninorm* a = family("idemmin(e=2,n=4)");
  un_uninorm* b = family("idemmin(e=1,n=4)");
  un_decomposition* d = nullptr;
  ASSERT_EQ(un_decompose(a, b, &d), UN_OK) << un_last_error();
  char* text = nullptr;
  ASSERT_EQ(un_decomposition_render(d, UN_FORMAT_TEXT, &text), UN_OK);
  un_decomposition* parsed = nullptr;
  ASSERT_EQ(un_decomposition_parse(text, &parsed), UN_OK) << un_last_error();
  un_string_free(text);
  un_uninorm *c1 = nullptr, *c2 = nullptr;
  ASSERT_EQ(un_compose(parsed, 4, 2, 1, &c1, &c2), UN_OK) << un_last_error();
  EXPECT_EQ(un_uninorm_equal(a, c1), 1);
  EXPECT_EQ(un_uninorm_equal(b, c2), 1);

  un_decomposition* refused = nullptr;
  un_uninorm* bad = family("luk-upper(e=1,n=4)");
  EXPECT_EQ(un_decompose(a, bad, &refused), UN_ERR_REFUSED);
  EXPECT_EQ(un_decompose(a, a, &refused), UN_ERR_WRONG_CASE);
  for (auto* u : {a, b, c1, c2, bad}) un_uninorm_free(u);
  un_decomposition_free(d);
  un_decomposition_free(parsed);
}

TEST(CApi, EnumerateAndCertify) {
  un_search_options o;
  un_search_options_init(&o);
  un_uninorm_list* list = nullptr;
  ASSERT_EQ(un_enumerate(2, 1, &o, &list), UN_OK);
  EXPECT_EQ(un_uninorm_list_size(list), 2u);
  EXPECT_NE(un_uninorm_list_get(list, 1), nullptr);
  EXPECT_EQ(un_uninorm_list_get(list, 2), nullptr);
  un_uninorm_list_free(list);

  un_report *serial = nullptr, *parallel = nullptr;
  ASSERT_EQ(un_certify(3, &o, &serial), UN_OK);
  o.workers = 4;
  ASSERT_EQ(un_certify(3, &o, &parallel), UN_OK);
  EXPECT_EQ(un_report_verdict(serial), 1);
  char *s1 = nullptr, *s2 = nullptr;
  ASSERT_EQ(un_report_render(serial, UN_FORMAT_STRUCTURED | UN_RENDER_OMIT_TIMING, &s1), UN_OK);
  ASSERT_EQ(un_report_render(parallel, UN_FORMAT_STRUCTURED | UN_RENDER_OMIT_TIMING, &s2), UN_OK);
  const std::string a = take(s1), b = take(s2);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.find("wall-seconds"), std::string::npos);
  un_report_free(serial);
  un_report_free(parallel);

  o.max_pairs = 10;
  un_report* partial = nullptr;
  ASSERT_EQ(un_certify(3, &o, &partial), UN_OK);
  EXPECT_EQ(un_report_partial(partial), 1);
  EXPECT_EQ(un_report_verdict(partial), 0);
  un_report_free(partial);

  un_report* scan = nullptr;
  ASSERT_EQ(un_scan_pairs(3, 2, 1, nullptr, &scan), UN_OK);
  EXPECT_EQ(un_report_verdict(scan), 1);
  un_report_free(scan);
}
