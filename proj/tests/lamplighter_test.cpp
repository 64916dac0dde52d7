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

#include "cascade/lamplighter.hpp"

#include "cascade/error.hpp"
#include "cascade/sample.hpp"
#include "gtest/gtest.h"

namespace cascade::lamplighter {
namespace {

State state(long k, std::set<Integer> lit) { return State{Integer(k), std::move(lit)}; }

// t^m l t^-m.
Word conjugated_toggle(int m) {
  Word w(m, Letter::kMove);
  w.push_back(Letter::kToggle);
  w.insert(w.end(), m, Letter::kMoveInverse);
  return w;
}

TEST(LamplighterTest, ParseAndFormat) {
  EXPECT_EQ(parse_word("Lt T l"),
            (Word{Letter::kToggle, Letter::kMoveInverse, Letter::kMove, Letter::kToggleInverse}));
  EXPECT_EQ(format_word(parse_word("LtTl")), "LtTl");
  EXPECT_TRUE(parse_word("").empty());
  EXPECT_THROW(parse_word("LX"), Error);
}

TEST(LamplighterTest, Examples) {
  EXPECT_EQ(act(parse_word("L"), state(0, {})), state(0, {0}));
  EXPECT_EQ(act(parse_word("TLt"), state(0, {})), state(0, {1}));
  EXPECT_EQ(act(parse_word("LL"), state(3, {-2, 3})), state(3, {-2, 3}));
  EXPECT_EQ(act(parse_word("Tl"), state(-1, {0})), state(0, {}));
  EXPECT_EQ(to_string(state(-7, {2, -3})), "(-7, [-3, 2])");
  EXPECT_EQ(to_string(state(0, {})), "(0, [])");
}

TEST(LamplighterTest, ToggleReadsPositionBeforeMove) {
  // l t: toggle at k, then move; t l: move, then toggle at k+1.
  EXPECT_EQ(act(parse_word("LT"), state(5, {})), state(6, {5}));
  EXPECT_EQ(act(parse_word("TL"), state(5, {})), state(6, {6}));
}

TEST(LamplighterTest, Relations) {
  sample::Rng rng(31);
  std::vector<State> states;
  for (int i = 0; i < 100; ++i) states.push_back(sample::lamplighter_state(rng));
  EXPECT_TRUE(relation_check(parse_word("LL"), states));
  EXPECT_TRUE(relation_check(parse_word("Ll"), states));
  EXPECT_TRUE(relation_check(parse_word("Tt"), states));
  EXPECT_TRUE(relation_check(parse_word("tT"), states));
  EXPECT_TRUE(relation_check(parse_word("TLtLTltl"), states));
  EXPECT_FALSE(relation_check(parse_word("L"), states));
  EXPECT_FALSE(relation_check(parse_word("TLtL"), states));
}

TEST(LamplighterTest, ConjugationTogglesShiftedLamp) {
  sample::Rng rng(32);
  for (int m = 0; m <= 10; ++m) {
    const Word w = conjugated_toggle(m);
    for (int i = 0; i < 100; ++i) {
      const State s = sample::lamplighter_state(rng);
      State expected = s;
      const Integer lamp = s.position + m;
      if (!expected.lit.erase(lamp)) expected.lit.insert(lamp);
      ASSERT_EQ(act(w, s), expected);
    }
  }
}

TEST(LamplighterTest, MoveHasInfiniteOrder) {
  const State s = state(0, {1, 2});
  State x = s;
  for (int m = 1; m <= 1000; ++m) {
    x = act(Word{Letter::kMove}, x);
    ASSERT_EQ(x.position, Integer(m));
    ASSERT_EQ(x.lit, s.lit);
  }
}

TEST(LamplighterTest, PositionsDoNotWrap) {
  const Integer big = Integer(1) << 100;
  const State s{big, {big}};
  EXPECT_EQ(act(parse_word("TL"), s), (State{big + 1, {big, big + 1}}));
}

}  // namespace
}  // namespace cascade::lamplighter
