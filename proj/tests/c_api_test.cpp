// Copyright 2026 The Cascade Authors
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

#include "cascade/cascade_c.h"

#include <cstring>
#include <string>

#include "gtest/gtest.h"

namespace {

constexpr char kSession[] = R"(components L = [2: (0 1); 2: (0 1)]
cascade w over L
  level 1: (0 1)
  level 2: [1] -> (0 1)
end
components L48 = [3: (0 1 2), (0 1); 2: (0 1)]
)";

std::string take(char* s) {
  std::string out(s);
  cas_string_free(s);
  return out;
}

class CApiTest : public ::testing::Test {
 protected:
  void SetUp() override {
    ASSERT_EQ(cas_session_parse(kSession, std::strlen(kSession), nullptr, &session_), CAS_OK)
        << cas_last_error();
    ASSERT_EQ(cas_session_cascade(session_, "w", &w_), CAS_OK);
  }
  void TearDown() override {
    cas_cascade_free(w_);
    cas_session_free(session_);
  }
  cas_session* session_ = nullptr;
  cas_cascade* w_ = nullptr;
};

TEST(CApiBasicsTest, VersionAndDefaults) {
  EXPECT_STRNE(cas_version(), "");
  cas_options options;
  cas_options_default(&options);
  EXPECT_EQ(options.check_membership, 1);
  cas_string_free(nullptr);
  cas_session_free(nullptr);
}

TEST(CApiBasicsTest, ParseErrorsReportLines) {
  const char text[] = "components L = [2: (0 1)]\ncascade d over L\n  level 1: [0] -> (0 1)\nend\n";
  cas_session* session = nullptr;
  EXPECT_EQ(cas_session_parse(text, std::strlen(text), nullptr, &session), CAS_ERR_PARSE);
  EXPECT_EQ(session, nullptr);
  EXPECT_NE(std::string(cas_last_error()).find("line 3"), std::string::npos);
}

TEST_F(CApiTest, Act) {
  const uint32_t x[] = {1, 1};
  uint32_t y[2] = {9, 9};
  ASSERT_EQ(cas_cascade_act(w_, x, 2, y), CAS_OK);
  EXPECT_EQ(y[0], 0u);
  EXPECT_EQ(y[1], 0u);
  const uint32_t bad[] = {2, 0};
  EXPECT_EQ(cas_cascade_act(w_, bad, 2, y), CAS_ERR_OUT_OF_RANGE);
  EXPECT_EQ(cas_cascade_act(w_, x, 3, y), CAS_ERR_INVALID_ARGUMENT);
}

TEST_F(CApiTest, MultiplyInvertFlatten) {
  cas_cascade* inv = nullptr;
  ASSERT_EQ(cas_cascade_invert(w_, &inv), CAS_OK);
  cas_cascade* product = nullptr;
  ASSERT_EQ(cas_cascade_multiply(w_, inv, &product), CAS_OK);
  cas_components* list = nullptr;
  ASSERT_EQ(cas_cascade_components(w_, &list), CAS_OK);
  cas_cascade* id = nullptr;
  ASSERT_EQ(cas_components_identity(list, &id), CAS_OK);
  EXPECT_EQ(cas_cascade_equal(product, id), 1);
  EXPECT_EQ(cas_cascade_equal(w_, id), 0);

  char* cycles = nullptr;
  ASSERT_EQ(cas_cascade_flatten(w_, CAS_DEFAULT_CAP, &cycles), CAS_OK);
  EXPECT_EQ(take(cycles), "(0 2 1 3)");
  EXPECT_EQ(cas_cascade_flatten(w_, 2, &cycles), CAS_ERR_OVERFLOW);

  char* text = nullptr;
  ASSERT_EQ(cas_cascade_format(product, "e", "L", &text), CAS_OK);
  EXPECT_EQ(take(text), "cascade e over L\nend\n");
  ASSERT_EQ(cas_cascade_format(inv, "winv", "L", &text), CAS_OK);
  EXPECT_EQ(take(text), "cascade winv over L\n  level 1: (0 1)\n  level 2: [0] -> (0 1)\nend\n");

  cas_components* l48 = nullptr;
  ASSERT_EQ(cas_session_components(session_, "L48", &l48), CAS_OK);
  cas_cascade* other = nullptr;
  ASSERT_EQ(cas_components_identity(l48, &other), CAS_OK);
  cas_cascade* mismatch = nullptr;
  EXPECT_EQ(cas_cascade_multiply(w_, other, &mismatch), CAS_ERR_DEGREE_MISMATCH);
  EXPECT_EQ(mismatch, nullptr);

  cas_cascade_free(other);
  cas_components_free(l48);
  cas_cascade_free(id);
  cas_components_free(list);
  cas_cascade_free(product);
  cas_cascade_free(inv);
}

TEST_F(CApiTest, OrdersAndGroups) {
  cas_components* l48 = nullptr;
  ASSERT_EQ(cas_session_components(session_, "L48", &l48), CAS_OK);
  EXPECT_EQ(cas_components_levels(l48), 2u);
  EXPECT_EQ(cas_components_total_degree(l48), 6u);
  char* order = nullptr;
  ASSERT_EQ(cas_components_full_order(l48, CAS_DEFAULT_CAP, &order), CAS_OK);
  EXPECT_EQ(take(order), "48");
  int holds = 0;
  EXPECT_EQ(cas_components_check_associativity(l48, CAS_DEFAULT_CAP, &holds, nullptr, nullptr),
            CAS_ERR_INVALID_ARGUMENT);
  int matches = 0;
  ASSERT_EQ(cas_wreath_check(l48, CAS_DEFAULT_CAP, &matches), CAS_OK);
  EXPECT_EQ(matches, 1);

  cas_components* l4 = nullptr;
  ASSERT_EQ(cas_session_components(session_, "L", &l4), CAS_OK);
  const cas_cascade* gens[] = {w_};
  cas_group* group = nullptr;
  ASSERT_EQ(cas_generated_group(l4, gens, 1, CAS_DEFAULT_CAP, &group), CAS_OK);
  EXPECT_EQ(cas_group_order(group), 4u);
  EXPECT_EQ(cas_group_abelian(group), 1);
  ASSERT_EQ(cas_group_histogram_size(group), 3u);
  uint64_t k = 0;
  uint64_t count = 0;
  ASSERT_EQ(cas_group_histogram_entry(group, 2, &k, &count), CAS_OK);
  EXPECT_EQ(k, 4u);
  EXPECT_EQ(count, 2u);
  EXPECT_EQ(cas_group_histogram_entry(group, 3, &k, &count), CAS_ERR_OUT_OF_RANGE);
  char* fp = nullptr;
  ASSERT_EQ(cas_group_fingerprint(group, &fp), CAS_OK);
  EXPECT_EQ(take(fp), "(4, {1:1, 2:1, 4:2}, abelian)");
  cas_group_free(group);
  // The cap bounds both the flattened degree and the group order.
  EXPECT_EQ(cas_generated_group(l4, gens, 1, 2, &group), CAS_ERR_OVERFLOW);

  cas_cascade** direct = nullptr;
  size_t n = 0;
  ASSERT_EQ(cas_direct_product(l4, &direct, &n), CAS_OK);
  ASSERT_EQ(cas_generated_group(l4, direct, n, CAS_DEFAULT_CAP, &group), CAS_OK);
  ASSERT_EQ(cas_group_fingerprint(group, &fp), CAS_OK);
  EXPECT_EQ(take(fp), "(4, {1:1, 2:3}, abelian)");
  cas_group_free(group);
  cas_cascade_array_free(direct, n);
  ASSERT_EQ(cas_direct_product(l48, &direct, &n), CAS_OK);
  EXPECT_EQ(cas_generated_group(l48, direct, n, 8, &group), CAS_ERR_GROUP_TOO_LARGE);
  cas_cascade_array_free(direct, n);
  cas_components_free(l4);
  cas_components_free(l48);
}

TEST_F(CApiTest, LookupErrors) {
  cas_cascade* missing = nullptr;
  EXPECT_EQ(cas_session_cascade(session_, "nope", &missing), CAS_ERR_NOT_FOUND);
  EXPECT_NE(std::string(cas_last_error()).find("nope"), std::string::npos);
  const char* list = nullptr;
  ASSERT_EQ(cas_session_cascade_list(session_, "w", &list), CAS_OK);
  EXPECT_STREQ(list, "L");
}

TEST(CApiConstructionsTest, SemidirectAndExamples) {
  cas_components* list = nullptr;
  cas_cascade** gens = nullptr;
  size_t n = 0;
  ASSERT_EQ(cas_semidirect_cyclic(2, 3, 2, &list, &gens, &n), CAS_OK);
  cas_group* group = nullptr;
  ASSERT_EQ(cas_generated_group(list, gens, n, CAS_DEFAULT_CAP, &group), CAS_OK);
  char* fp = nullptr;
  ASSERT_EQ(cas_group_fingerprint(group, &fp), CAS_OK);
  EXPECT_EQ(take(fp), "(6, {1:1, 2:3, 3:2}, non-abelian)");
  cas_group_free(group);
  cas_cascade_array_free(gens, n);
  cas_components_free(list);

  EXPECT_EQ(cas_semidirect_cyclic(3, 3, 2, &list, &gens, &n), CAS_ERR_INVALID_ARGUMENT);

  ASSERT_EQ(cas_example_quaternion(&list, &gens, &n), CAS_OK);
  ASSERT_EQ(n, 2u);
  ASSERT_EQ(cas_generated_group(list, gens, n, CAS_DEFAULT_CAP, &group), CAS_OK);
  EXPECT_EQ(cas_group_order(group), 8u);
  cas_group_free(group);
  int holds = 0;
  char* left = nullptr;
  char* right = nullptr;
  ASSERT_EQ(cas_components_check_associativity(list, CAS_DEFAULT_CAP, &holds, &left, &right),
            CAS_OK);
  EXPECT_EQ(holds, 1);
  EXPECT_EQ(take(left), "128");
  EXPECT_EQ(take(right), "128");
  cas_cascade_array_free(gens, n);
  cas_components_free(list);

  ASSERT_EQ(cas_example_mod4(&list, &gens, &n), CAS_OK);
  EXPECT_EQ(n, 1u);
  cas_cascade_array_free(gens, n);
  cas_components_free(list);
}

TEST(CApiLamplighterTest, Act) {
  const char* lamps[] = {"-3", "2"};
  char* k = nullptr;
  char* lit = nullptr;
  ASSERT_EQ(cas_lamplighter_act("TL", "-5", lamps, 2, &k, &lit), CAS_OK);
  EXPECT_EQ(take(k), "-4");
  EXPECT_EQ(take(lit), "-4 -3 2");
  EXPECT_EQ(cas_lamplighter_act("TX", "0", nullptr, 0, &k, &lit), CAS_ERR_PARSE);
  EXPECT_EQ(cas_lamplighter_act("T", "zero", nullptr, 0, &k, &lit), CAS_ERR_PARSE);
}

TEST(CApiVerifyTest, RunsSuite) {
  cas_report* report = nullptr;
  ASSERT_EQ(cas_verify(nullptr, &report), CAS_OK);
  EXPECT_EQ(cas_report_size(report), 12u);
  for (size_t i = 0; i < cas_report_size(report); ++i) {
    EXPECT_EQ(cas_report_passed(report, i), 1) << cas_report_name(report, i);
  }
  cas_report_free(report);
  ASSERT_EQ(cas_verify("quaternion", &report), CAS_OK);
  ASSERT_EQ(cas_report_size(report), 1u);
  EXPECT_STREQ(cas_report_name(report, 0), "quaternion");
  cas_report_free(report);
  EXPECT_EQ(cas_verify("bogus", &report), CAS_ERR_NOT_FOUND);

  char* text = nullptr;
  ASSERT_EQ(cas_example_session(&text), CAS_OK);
  const std::string session_text = take(text);
  cas_session* session = nullptr;
  ASSERT_EQ(cas_session_parse(session_text.data(), session_text.size(), nullptr, &session),
            CAS_OK);
  ASSERT_EQ(cas_session_format(session, &text), CAS_OK);
  EXPECT_EQ(take(text), session_text);
  cas_session_free(session);
}

}  // namespace
