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

#include "cascade/constructions.hpp"

#include <set>
#include <string>

#include "cascade/error.hpp"

namespace cascade {

std::vector<PermutationCascade> direct_product_cascades(
    const std::shared_ptr<const ComponentList>& components) {
  const ComponentList& list = *components;
  std::vector<PermutationCascade> result;
  for (std::size_t level = 1; level <= list.levels(); ++level) {
    for (const Permutation& g : list.component(level).generators()) {
      if (g.is_identity()) continue;
      std::vector<DependencyFunction> levels;
      for (std::size_t other = 1; other <= list.levels(); ++other) {
        levels.push_back(other == level ? DependencyFunction::Constant(list, level, g)
                                        : DependencyFunction(list, other));
      }
      result.emplace_back(components, std::move(levels), false);
    }
  }
  return result;
}

// RegularRepresentation ------------------------------------------------------

namespace {

Component right_regular_component(const std::vector<Permutation>& elements,
                                  const std::unordered_map<Permutation, Point, PermutationHash>& index,
                                  const std::vector<Point>& generator_indices) {
  std::vector<Permutation> generators;
  for (Point g : generator_indices) {
    std::vector<Point> images(elements.size());
    for (Point x = 0; x < elements.size(); ++x) {
      images[x] = index.at(compose(elements[x], elements[g]));
    }
    generators.emplace_back(std::move(images));
  }
  return Component(elements.size(), std::move(generators));
}

}  // namespace

RegularRepresentation::RegularRepresentation(const Component& group, std::uint64_t cap)
    : elements_(enumerate_group(group, cap)),
      index_([this] {
        std::unordered_map<Permutation, Point, PermutationHash> index;
        for (Point i = 0; i < elements_.size(); ++i) index.emplace(elements_[i], i);
        return index;
      }()),
      generator_indices_([&] {
        std::vector<Point> indices;
        for (const Permutation& g : group.generators()) indices.push_back(index_.at(g));
        return indices;
      }()),
      component_(right_regular_component(elements_, index_, generator_indices_)) {}

Point RegularRepresentation::index_of(const Permutation& element) const {
  auto it = index_.find(element);
  if (it == index_.end()) {
    throw Error(ErrorCode::kNotFound, format_cycles(element) + " is not a group element");
  }
  return it->second;
}

Point RegularRepresentation::multiply(Point a, Point b) const {
  return index_.at(compose(elements_.at(a), elements_.at(b)));
}

Permutation RegularRepresentation::right_multiplication(Point g) const {
  std::vector<Point> images(elements_.size());
  for (Point x = 0; x < elements_.size(); ++x) images[x] = multiply(x, g);
  return Permutation(std::move(images));
}

// Semidirect products --------------------------------------------------------

SemidirectSpec::SemidirectSpec(RegularRepresentation top, RegularRepresentation bottom,
                               std::vector<Permutation> theta)
    : top_(std::move(top)), bottom_(std::move(bottom)), theta_(std::move(theta)) {
  const std::size_t h_order = top_.order();
  const std::size_t n_order = bottom_.order();
  if (theta_.size() != h_order) {
    throw Error(ErrorCode::kInvalidArgument, "theta must have one entry per element of H");
  }
  for (const Permutation& t : theta_) {
    if (t.degree() != n_order) {
      throw Error(ErrorCode::kInvalidArgument, "theta values must permute the elements of N");
    }
  }
  if (!theta_[0].is_identity()) {
    throw Error(ErrorCode::kInvalidArgument, "theta does not map 1 to the identity");
  }
  for (Point h1 = 0; h1 < h_order; ++h1) {
    for (Point h2 = 0; h2 < h_order; ++h2) {
      const Permutation& t12 = theta_[top_.multiply(h1, h2)];
      for (Point n = 0; n < n_order; ++n) {
        if (t12[n] != theta_[h1][theta_[h2][n]]) {
          throw Error(ErrorCode::kInvalidArgument, "theta is not a homomorphism");
        }
      }
    }
  }
  for (Point h = 0; h < h_order; ++h) {
    for (Point n1 = 0; n1 < n_order; ++n1) {
      for (Point n2 = 0; n2 < n_order; ++n2) {
        if (theta_[h][bottom_.multiply(n1, n2)] !=
            bottom_.multiply(theta_[h][n1], theta_[h][n2])) {
          throw Error(ErrorCode::kInvalidArgument,
                      "theta(" + std::to_string(h) + ") is not an automorphism");
        }
      }
    }
  }
  components_ = std::make_shared<const ComponentList>(
      std::vector<Component>{top_.component(), bottom_.component()});
}

std::pair<Point, Point> SemidirectSpec::product(std::pair<Point, Point> a,
                                                std::pair<Point, Point> b) const {
  return {top_.multiply(a.first, b.first),
          bottom_.multiply(a.second, theta_[a.first][b.second])};
}

SemidirectSpec cyclic_semidirect(std::size_t m, std::size_t n, std::size_t k) {
  RegularRepresentation top(Component::Counter(m));
  RegularRepresentation bottom(Component::Counter(n));
  // A rotation is determined by the image of 0, which is its exponent.
  std::vector<Point> index_of_power(n);
  for (Point i = 0; i < n; ++i) index_of_power[bottom.elements()[i][0]] = i;

  std::vector<Permutation> theta;
  for (Point h = 0; h < m; ++h) {
    const std::uint64_t j = top.elements()[h][0];
    std::uint64_t multiplier = 1;
    for (std::uint64_t step = 0; step < j; ++step) multiplier = multiplier * k % n;
    std::vector<Point> images(n);
    for (Point x = 0; x < n; ++x) {
      const std::uint64_t exponent = bottom.elements()[x][0];
      images[x] = index_of_power[exponent * multiplier % n];
    }
    try {
      theta.emplace_back(std::move(images));
    } catch (const Error&) {
      throw Error(ErrorCode::kInvalidArgument,
                  "x -> x^" + std::to_string(k) + " is not an automorphism of Z_" +
                      std::to_string(n));
    }
  }
  return SemidirectSpec(std::move(top), std::move(bottom), std::move(theta));
}

PermutationCascade semidirect_element_cascade(const SemidirectSpec& spec, Point h, Point n) {
  const ComponentList& list = *spec.components();
  std::vector<Permutation> bottom_values;
  for (Point top_state = 0; top_state < spec.top().order(); ++top_state) {
    bottom_values.push_back(spec.bottom().right_multiplication(spec.theta(top_state, n)));
  }
  std::vector<DependencyFunction> levels;
  levels.push_back(DependencyFunction::Constant(list, 1, spec.top().right_multiplication(h)));
  levels.push_back(DependencyFunction::FromValues(list, 2, std::move(bottom_values)));
  return PermutationCascade(spec.components(), std::move(levels));
}

std::vector<PermutationCascade> semidirect_cascades(const SemidirectSpec& spec) {
  std::vector<PermutationCascade> result;
  for (Point h : spec.top().generator_indices()) {
    result.push_back(semidirect_element_cascade(spec, h, 0));
  }
  for (Point n : spec.bottom().generator_indices()) {
    result.push_back(semidirect_element_cascade(spec, 0, n));
  }
  return result;
}

// Wreath product -------------------------------------------------------------

namespace {

// An element (h, f) of H x| G^n: h an index into H, f[x] an index into G.
struct WreathElement {
  Point h;
  std::vector<Point> f;
};

}  // namespace

bool wreath_full_cascade_check(const Component& top, const Component& bottom,
                               std::uint64_t cap) {
  const std::vector<Permutation> h_elements = enumerate_group(top, cap);
  const std::vector<Permutation> g_elements = enumerate_group(bottom, cap);
  const std::size_t x_size = top.degree();
  const std::size_t y_size = bottom.degree();

  BigInt wreath_order = h_elements.size();
  for (std::size_t x = 0; x < x_size; ++x) wreath_order *= g_elements.size();
  if (wreath_order > cap) {
    throw Error(ErrorCode::kGroupTooLarge,
                "wreath product has more than " + std::to_string(cap) + " elements");
  }

  std::unordered_map<Permutation, Point, PermutationHash> g_index;
  for (Point i = 0; i < g_elements.size(); ++i) g_index.emplace(g_elements[i], i);
  std::unordered_map<Permutation, Point, PermutationHash> h_index;
  for (Point i = 0; i < h_elements.size(); ++i) h_index.emplace(h_elements[i], i);

  // (h, f) moves (x, y) to (x^h, y^f(x)); states are encoded as x*|Y| + y.
  auto as_permutation = [&](const WreathElement& e) {
    std::vector<Point> images(x_size * y_size);
    for (Point x = 0; x < x_size; ++x) {
      for (Point y = 0; y < y_size; ++y) {
        images[x * y_size + y] =
            static_cast<Point>(h_elements[e.h][x] * y_size + g_elements[e.f[x]][y]);
      }
    }
    return Permutation(std::move(images));
  };
  // (h, f)(h', f') = (hh', f theta_h(f')), theta_h(f')(x) = f'(x^h).
  auto product = [&](const WreathElement& a, const WreathElement& b) {
    WreathElement c{h_index.at(compose(h_elements[a.h], h_elements[b.h])),
                    std::vector<Point>(x_size)};
    for (Point x = 0; x < x_size; ++x) {
      const Point shuffled = b.f[h_elements[a.h][x]];
      c.f[x] = g_index.at(compose(g_elements[a.f[x]], g_elements[shuffled]));
    }
    return c;
  };

  std::vector<WreathElement> wreath;
  for (Point h = 0; h < h_elements.size(); ++h) {
    std::vector<Point> f(x_size, 0);
    while (true) {
      wreath.push_back({h, f});
      std::size_t i = 0;
      while (i < x_size && ++f[i] == g_elements.size()) f[i++] = 0;
      if (i == x_size) break;
    }
  }

  std::set<Permutation> wreath_perms;
  std::vector<Permutation> wreath_list;
  for (const WreathElement& e : wreath) {
    wreath_list.push_back(as_permutation(e));
    wreath_perms.insert(wreath_list.back());
  }
  if (wreath_perms.size() != wreath.size()) return false;  // not faithful

  // The semidirect multiplication must match composition of the actions.
  const std::size_t stride = wreath.size() <= 64 ? 1 : wreath.size() / 64;
  for (std::size_t a = 0; a < wreath.size(); ++a) {
    for (std::size_t b = 0; b < wreath.size(); b += stride) {
      if (as_permutation(product(wreath[a], wreath[b])) !=
          compose(wreath_list[a], wreath_list[b])) {
        return false;
      }
    }
  }

  auto components = std::make_shared<const ComponentList>(std::vector<Component>{top, bottom});
  if (full_cascade_order(*components, cap) != wreath_order) return false;
  std::set<Permutation> cascade_perms;
  for (const PermutationCascade& d : all_cascades(components, cap)) {
    cascade_perms.insert(flatten(d, cap));
  }
  return cascade_perms == wreath_perms;
}

// Named examples -------------------------------------------------------------

CascadeExample mod4_counter_generator() {
  auto components = std::make_shared<const ComponentList>(
      std::vector<Component>{Component::Counter(2), Component::Counter(2)});
  const ComponentList& list = *components;
  const Permutation plus_one = Permutation::Rotation(2);
  // The carry: the bottom counter moves only when the top one is at 1.
  std::vector<DependencyFunction> levels{
      DependencyFunction::Constant(list, 1, plus_one),
      DependencyFunction::FromEntries(list, 2, {{list.encode(State{1}), plus_one}})};
  CascadeExample example{components, {}};
  example.generators.emplace_back(components, std::move(levels));
  return example;
}

CascadeExample quaternion_generators() {
  auto components = std::make_shared<const ComponentList>(std::vector<Component>{
      Component::Counter(2), Component::Counter(2), Component::Counter(2)});
  const ComponentList& list = *components;
  const Permutation plus_one = Permutation::Rotation(2);
  auto key = [&](std::initializer_list<Point> prefix) {
    return list.encode(State(prefix));
  };

  // i: d_2(0) = d_2(1) = d_3(0,0) = d_3(1,1) = +1.
  std::vector<DependencyFunction> i_levels{
      DependencyFunction(list, 1),
      DependencyFunction::FromEntries(list, 2, {{key({0}), plus_one}, {key({1}), plus_one}}),
      DependencyFunction::FromEntries(list, 3,
                                      {{key({0, 0}), plus_one}, {key({1, 1}), plus_one}})};
  // j: d'_1 = d'_3(0,0) = d'_3(0,1) = +1.
  std::vector<DependencyFunction> j_levels{
      DependencyFunction::Constant(list, 1, plus_one),
      DependencyFunction(list, 2),
      DependencyFunction::FromEntries(list, 3,
                                      {{key({0, 0}), plus_one}, {key({0, 1}), plus_one}})};

  CascadeExample example{components, {}};
  example.generators.emplace_back(components, std::move(i_levels));
  example.generators.emplace_back(components, std::move(j_levels));
  return example;
}

}  // namespace cascade
