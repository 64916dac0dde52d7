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

// The built-in verification suite: every worked example of the cascade
// construction, checked exactly, plus the randomized algebraic-law suites.
// Each check reports rather than throws.

#ifndef CASCADE_CHECKS_HPP_
#define CASCADE_CHECKS_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cascade/constructions.hpp"

namespace cascade::checks {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

inline constexpr std::uint64_t kDefaultSeed = 20140509;

CheckResult order_formula();
// The example argument lets a harness inject a broken generator.
CheckResult mod4_counter(const CascadeExample& example = mod4_counter_generator());
CheckResult direct_product_contrast();
CheckResult d4_full_cascade();
CheckResult quaternion(const CascadeExample& example = quaternion_generators());
CheckResult z2_x_s4();
CheckResult inverse_suite(std::uint64_t seed = kDefaultSeed, int cascades = 1000);
CheckResult homomorphism_suite(std::uint64_t seed = kDefaultSeed, int pairs = 1000,
                               int triples = 200);
CheckResult semidirect_oracle();
CheckResult order_associativity(std::uint64_t seed = kDefaultSeed, int lists = 50);
CheckResult lamplighter_relations(std::uint64_t seed = kDefaultSeed, int states = 100);
CheckResult session_roundtrip();

// Names accepted by run(), in run order.
std::vector<std::string> names();

// Runs every check, or only the one named `only` when non-empty. Throws
// Error(kNotFound) for an unknown name.
std::vector<CheckResult> run(std::string_view only = {});

// The session text of the built-in examples (mod-4 counter, quaternion
// generators, and the component lists of the order examples).
std::string example_session_text();

}  // namespace cascade::checks

#endif  // CASCADE_CHECKS_HPP_
