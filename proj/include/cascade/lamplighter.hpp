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

// The lamplighter group as a two-level cascade with infinite state sets: the
// top level is the lamplighter's position k in Z, the bottom level the finite
// set S of lit lamps. The toggle generator's bottom dependency function is a
// rule of k rather than a table, so this module evaluates words symbolically.

#ifndef CASCADE_LAMPLIGHTER_HPP_
#define CASCADE_LAMPLIGHTER_HPP_

#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cascade::lamplighter {

using Integer = boost::multiprecision::cpp_int;

struct State {
  Integer position;
  std::set<Integer> lit;

  friend bool operator==(const State&, const State&) = default;
};

enum class Letter {
  kToggle,         // l = (+0, k -> toggle lamp k)
  kToggleInverse,  // l^-1, equal to l since every lamp has two states
  kMove,           // t = (+1, identity)
  kMoveInverse,    // t^-1 = (-1, identity)
};

using Word = std::vector<Letter>;

// 'L' = l, 'l' = l^-1, 'T' = t, 't' = t^-1. Whitespace is ignored. Throws
// cascade::Error(kParse) on any other character.
Word parse_word(std::string_view text);
std::string format_word(const Word& word);

// Letters act left to right. Each letter reads the position before it moves.
State act(const Word& word, const State& state);

// True iff the word fixes every given state.
bool relation_check(const Word& word, std::span<const State> states);

// "(k, [a, b, c])" with lamps in increasing order.
std::string to_string(const State& state);

}  // namespace cascade::lamplighter

#endif  // CASCADE_LAMPLIGHTER_HPP_
