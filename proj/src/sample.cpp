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

#include "cascade/sample.hpp"

#include <algorithm>
#include <numeric>

namespace cascade::sample {

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

Component small_component(Rng& rng) {
  switch (uniform(rng, 0, 3)) {
    case 0: return Component::Counter(2);
    case 1: return Component::Counter(3);
    case 2: return Component::Symmetric(3);
    default: return Component::Counter(4);
  }
}

std::shared_ptr<const ComponentList> component_list(Rng& rng, std::size_t max_levels) {
  std::vector<Component> components;
  const std::uint64_t levels = uniform(rng, 1, max_levels);
  for (std::uint64_t i = 0; i < levels; ++i) components.push_back(small_component(rng));
  return std::make_shared<const ComponentList>(std::move(components));
}

PermutationCascade cascade(Rng& rng, const std::shared_ptr<const ComponentList>& components,
                           double identity_bias) {
  const ComponentList& list = *components;
  std::bernoulli_distribution keep_identity(identity_bias);
  std::vector<DependencyFunction> levels;
  for (std::size_t level = 1; level <= list.levels(); ++level) {
    const std::vector<Permutation> group = enumerate_group(list.component(level));
    std::vector<Permutation> values;
    for (std::uint64_t p = 0; p < list.prefix_count(level); ++p) {
      values.push_back(keep_identity(rng) ? group.front()
                                          : group[uniform(rng, 0, group.size() - 1)]);
    }
    levels.push_back(DependencyFunction::FromValues(list, level, std::move(values)));
  }
  return PermutationCascade(components, std::move(levels));
}

Permutation permutation(Rng& rng, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

lamplighter::State lamplighter_state(Rng& rng, int max_abs, std::size_t max_lamps) {
  auto coordinate = [&] {
    return static_cast<long>(uniform(rng, 0, 2 * static_cast<std::uint64_t>(max_abs))) - max_abs;
  };
  lamplighter::State state;
  state.position = coordinate();
  const std::uint64_t lamps = uniform(rng, 0, max_lamps);
  for (std::uint64_t i = 0; i < lamps; ++i) state.lit.insert(coordinate());
  return state;
}

}  // namespace cascade::sample
