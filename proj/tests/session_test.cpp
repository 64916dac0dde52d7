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

#include "cascade/session.hpp"

#include "cascade/constructions.hpp"
#include "cascade/error.hpp"
#include "cascade/sample.hpp"
#include "gtest/gtest.h"

namespace cascade {
namespace {

constexpr char kMod4[] = R"(# two counters with a carry
components L = [2: (0 1); 2: (0 1)]

cascade w over L   # the generator
  level 1: (0 1)
  level 2: [1] -> (0 1)
end
)";

std::string parse_error(std::string_view text) {
  try {
    parse_session(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    return e.what();
  }
  return "";
}

TEST(SessionTest, ParsesMod4) {
  const Session s = parse_session(kMod4);
  ASSERT_EQ(s.all_components().size(), 1u);
  ASSERT_EQ(s.all_cascades().size(), 1u);
  EXPECT_EQ(s.cascade("w").list_name, "L");
  EXPECT_EQ(s.cascade("w").cascade, mod4_counter_generator().generators.front());
  EXPECT_EQ(format_session(s), R"(components L = [2: (0 1); 2: (0 1)]

cascade w over L
  level 1: (0 1)
  level 2: [1] -> (0 1)
end
)");
}

TEST(SessionTest, EmptyFile) {
  EXPECT_TRUE(parse_session("").empty());
  EXPECT_TRUE(parse_session("# only a comment\n\n").empty());
  EXPECT_EQ(format_session(parse_session("")), "");
}

TEST(SessionTest, BareValueIsDefaultForUnlistedPrefixes) {
  const Session s = parse_session(R"(components L = [2: (0 1); 3: (0 1 2)]
cascade d over L
  level 2: (0 1 2)
  level 2: [1] -> ()
end
)");
  const PermutationCascade& d = s.cascade("d").cascade;
  EXPECT_EQ(act(d, State{0, 0}), (State{0, 1}));
  EXPECT_EQ(act(d, State{1, 0}), (State{1, 0}));
  EXPECT_EQ(format_cascade(d, "d", "L"),
            "cascade d over L\n  level 2: [0] -> (0 1 2)\nend\n");
}

TEST(SessionTest, Errors) {
  const std::string list = "components L = [2: (0 1); 2: (0 1)]\n";
  EXPECT_NE(parse_error(list + "cascade d over L\n  level 2: [2] -> (0 1)\nend\n")
                .find("point 2 out of range"),
            std::string::npos);
  EXPECT_NE(parse_error(list + "cascade d over L\n  level 2: [0] -> (0 1)\n"
                               "  level 2: [0] -> (0 1)\nend\n")
                .find("duplicate"),
            std::string::npos);
  EXPECT_NE(parse_error(list + "cascade d over L\n  level 2: [0 1] -> (0 1)\nend\n").find("line 3"),
            std::string::npos);
  EXPECT_NE(parse_error(list + "cascade d over M\nend\n").find("M"), std::string::npos);
  EXPECT_NE(parse_error(list + "cascade d over L\n  level 1: (0 1)\n").find("end"),
            std::string::npos);
  EXPECT_NE(parse_error(list + list).find("line 2"), std::string::npos);
  EXPECT_NE(parse_error("components L = [2: (0 1 1)]\n").find("line 1"), std::string::npos);
  EXPECT_NE(parse_error("components L = [2: (0 2)]\n").find("out of range"), std::string::npos);
  EXPECT_FALSE(parse_error("frobnicate\n").empty());
  EXPECT_FALSE(parse_error(list + "cascade d over L\n  level 3: (0 1)\nend\n").empty());
}

TEST(SessionTest, MembershipCheckCanBeDisabled) {
  const std::string text = "components L = [3: (0 1 2)]\ncascade d over L\n  level 1: (0 1)\nend\n";
  EXPECT_THROW(parse_session(text), Error);
  EXPECT_NO_THROW(parse_session(text, SessionOptions{.check_membership = false}));
}

TEST(SessionTest, States) {
  EXPECT_EQ(parse_state("(1,1)"), (State{1, 1}));
  EXPECT_EQ(parse_state("(1, 0, 2)"), (State{1, 0, 2}));
  EXPECT_EQ(parse_state("1 1"), (State{1, 1}));
  EXPECT_EQ(parse_state("0,1"), (State{0, 1}));
  EXPECT_EQ(format_state(State{0, 1, 1}), "(0,1,1)");
  EXPECT_THROW(parse_state("(a)"), Error);
  EXPECT_THROW(parse_state(""), Error);
}

TEST(SessionTest, RandomRoundTrip) {
  sample::Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    Session s;
    const auto list = sample::component_list(rng);
    s.add_components("L", list);
    for (int c = 0; c < 3; ++c) {
      s.add_cascade("d" + std::to_string(c), "L", sample::cascade(rng, list, 0.5));
    }
    const std::string text = format_session(s);
    const Session parsed = parse_session(text);
    ASSERT_TRUE(parsed == s) << text;
    ASSERT_EQ(format_session(parsed), text);
  }
}

TEST(SessionTest, Names) {
  EXPECT_TRUE(is_valid_name("w4inv"));
  EXPECT_TRUE(is_valid_name("L_48"));
  EXPECT_FALSE(is_valid_name("4w"));
  EXPECT_FALSE(is_valid_name(""));
  Session s;
  const auto list = mod4_counter_generator().components;
  s.add_components("L", list);
  EXPECT_THROW(s.add_components("L", list), Error);
  EXPECT_THROW(s.add_cascade("d", "M", identity_cascade(list)), Error);
  EXPECT_THROW(s.cascade("nope"), Error);
}

}  // namespace
}  // namespace cascade
