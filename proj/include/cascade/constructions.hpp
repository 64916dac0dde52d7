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

// Direct, semidirect and wreath products realized as cascade products, and
// the two named generator sets (mod-4 counter, quaternion group).

#ifndef CASCADE_CONSTRUCTIONS_HPP_
#define CASCADE_CONSTRUCTIONS_HPP_

#include <memory>
#include <unordered_map>
#include <vector>

#include "cascade/cascade.hpp"
#include "cascade/perm.hpp"

namespace cascade {

// One generator cascade per (level, non-identity generator): the generator as
// a constant function on its level, identity elsewhere.
std::vector<PermutationCascade> direct_product_cascades(
    const std::shared_ptr<const ComponentList>& components);

// A group acting on its own elements by right multiplication. Elements are
// numbered in breadth-first discovery order from the source generators, so
// the identity is always index 0.
class RegularRepresentation {
 public:
  explicit RegularRepresentation(const Component& group, std::uint64_t cap = kDefaultCap);

  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Component& component() const { return component_; }

  // Throws Error(kNotFound) for permutations outside the group.
  Point index_of(const Permutation& element) const;
  // Index of elements()[a] * elements()[b].
  Point multiply(Point a, Point b) const;
  // x -> x * elements()[g], as a permutation of element indices.
  Permutation right_multiplication(Point g) const;
  // Indices of the source generators.
  const std::vector<Point>& generator_indices() const { return generator_indices_; }

 private:
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, Point, PermutationHash> index_;
  std::vector<Point> generator_indices_;
  Component component_;
};

// H acting on N by automorphisms, both in regular representation.
// theta[h][n] is the index of theta_h(elements[n]), for h, n element indices.
class SemidirectSpec {
 public:
  // Validates theta_1 = 1, theta_{h1 h2} = theta_{h1} o theta_{h2} and that
  // each theta_h is an automorphism; throws Error(kInvalidArgument) otherwise.
  SemidirectSpec(RegularRepresentation top, RegularRepresentation bottom,
                 std::vector<Permutation> theta);

  const RegularRepresentation& top() const { return top_; }
  const RegularRepresentation& bottom() const { return bottom_; }
  Point theta(Point h, Point n) const { return theta_[h][n]; }
  // [(H, H), (N, N)].
  const std::shared_ptr<const ComponentList>& components() const { return components_; }

  // (h1, n1)(h2, n2) = (h1 h2, n1 theta_{h1}(n2)), on element indices.
  std::pair<Point, Point> product(std::pair<Point, Point> a, std::pair<Point, Point> b) const;

 private:
  RegularRepresentation top_;
  RegularRepresentation bottom_;
  std::vector<Permutation> theta_;
  std::shared_ptr<const ComponentList> components_;
};

// Z_m acting on Z_n with the generator of Z_m mapping x -> x^k. Fails
// validation unless gcd(k, n) = 1 and k^m = 1 mod n.
SemidirectSpec cyclic_semidirect(std::size_t m, std::size_t n, std::size_t k);

// The cascade (h const, p -> theta_p(n)) realizing the pair (h, n).
PermutationCascade semidirect_element_cascade(const SemidirectSpec& spec, Point h, Point n);
// Cascades for (h, 1) over the generators h of H, then (1, n) over those of N.
std::vector<PermutationCascade> semidirect_cascades(const SemidirectSpec& spec);

// Compares the full cascade product over [top, bottom] with the permutation
// wreath product H x| G^|X|, built directly from its semidirect definition and
// acting on X x Y. True iff both give the same set of permutations of the
// encoded product states. Throws Error(kGroupTooLarge) past `cap` elements.
bool wreath_full_cascade_check(const Component& top, const Component& bottom,
                               std::uint64_t cap = kDefaultCap);

struct CascadeExample {
  std::shared_ptr<const ComponentList> components;
  std::vector<PermutationCascade> generators;
};

// Two mod-2 counters; one generator (+1, c) with c: 0 -> 1, 1 -> +1.
CascadeExample mod4_counter_generator();
// Three mod-2 counters; the two cascades realizing i and j.
CascadeExample quaternion_generators();

}  // namespace cascade

#endif  // CASCADE_CONSTRUCTIONS_HPP_
