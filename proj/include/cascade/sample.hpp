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

// Seeded random generators for property checks.

#ifndef CASCADE_SAMPLE_HPP_
#define CASCADE_SAMPLE_HPP_

#include <memory>
#include <random>

#include "cascade/cascade.hpp"
#include "cascade/lamplighter.hpp"

namespace cascade::sample {

using Rng = std::mt19937_64;

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi);  // inclusive

// One of Z2, Z3, S3 (degree 3), Z4.
Component small_component(Rng& rng);

// 1..max_levels components drawn by small_component.
std::shared_ptr<const ComponentList> component_list(Rng& rng, std::size_t max_levels = 4);

// Each prefix gets a uniformly random group element with probability
// 1 - identity_bias, the identity otherwise.
PermutationCascade cascade(Rng& rng, const std::shared_ptr<const ComponentList>& components,
                           double identity_bias = 0.3);

Permutation permutation(Rng& rng, std::size_t degree);

// |position| <= max_abs, at most max_lamps lamps in [-max_abs, max_abs].
lamplighter::State lamplighter_state(Rng& rng, int max_abs = 10, std::size_t max_lamps = 10);

}  // namespace cascade::sample

#endif  // CASCADE_SAMPLE_HPP_
