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

#include <cctype>

#include "cascade/error.hpp"

namespace cascade::lamplighter {

namespace {

// A generator as a cascade: a top-level shift plus the bottom-level rule.
struct Generator {
  int shift;
  bool toggles_current_lamp;
};

Generator generator_of(Letter letter) {
  switch (letter) {
    case Letter::kToggle:
    case Letter::kToggleInverse:
      return {0, true};
    case Letter::kMove:
      return {+1, false};
    case Letter::kMoveInverse:
      return {-1, false};
  }
  return {0, false};
}

}  // namespace

Word parse_word(std::string_view text) {
  Word word;
  for (char c : text) {
    switch (c) {
      case 'L': word.push_back(Letter::kToggle); break;
      case 'l': word.push_back(Letter::kToggleInverse); break;
      case 'T': word.push_back(Letter::kMove); break;
      case 't': word.push_back(Letter::kMoveInverse); break;
      default:
        if (std::isspace(static_cast<unsigned char>(c))) break;
        throw Error(ErrorCode::kParse,
                    std::string("unknown lamplighter letter '") + c + "'");
    }
  }
  return word;
}

std::string format_word(const Word& word) {
  std::string out;
  for (Letter letter : word) {
    switch (letter) {
      case Letter::kToggle: out += 'L'; break;
      case Letter::kToggleInverse: out += 'l'; break;
      case Letter::kMove: out += 'T'; break;
      case Letter::kMoveInverse: out += 't'; break;
    }
  }
  return out;
}

State act(const Word& word, const State& state) {
  State current = state;
  for (Letter letter : word) {
    const Generator g = generator_of(letter);
    // Both levels are evaluated against the incoming position.
    if (g.toggles_current_lamp) {
      auto it = current.lit.find(current.position);
      if (it == current.lit.end()) {
        current.lit.insert(current.position);
      } else {
        current.lit.erase(it);
      }
    }
    current.position += g.shift;
  }
  return current;
}

bool relation_check(const Word& word, std::span<const State> states) {
  for (const State& s : states) {
    if (act(word, s) != s) return false;
  }
  return true;
}

std::string to_string(const State& state) {
  std::string out = "(" + state.position.str() + ", [";
  bool first = true;
  for (const Integer& lamp : state.lit) {
    if (!first) out += ", ";
    first = false;
    out += lamp.str();
  }
  return out + "])";
}

}  // namespace cascade::lamplighter
