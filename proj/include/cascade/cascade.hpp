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

// Permutation cascades over an ordered list of components.
//
// Level 1 is the top (independent) component and level n the bottom one. A
// dependency function of level i maps the states of levels 1..i-1 (the
// "prefix") to an element of the level-i group; a cascade is one dependency
// function per level and acts on X_1 x ... x X_n coordinatewise, every level
// reading the *original* prefix.
//
// Prefixes and states are encoded as mixed-radix integers with level 1 most
// significant: (x_1, ..., x_k) -> ((x_1 * |X_2| + x_2) * |X_3| + ...) + x_k.
// The empty prefix encodes to 0.

#ifndef CASCADE_CASCADE_HPP_
#define CASCADE_CASCADE_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cascade/perm.hpp"

namespace cascade {

using BigInt = boost::multiprecision::cpp_int;
using State = std::vector<Point>;

// Component groups up to this order are enumerated when a ComponentList is
// built, so dependency-function values can be checked for membership.
inline constexpr std::uint64_t kMembershipCap = 1 << 16;

class ComponentList {
 public:
  // Throws Error(kInvalidArgument) when empty and Error(kOverflow) when the
  // product of the degrees does not fit in 64 bits.
  explicit ComponentList(std::vector<Component> components);

  std::size_t levels() const { return components_.size(); }
  // Levels are 1-based throughout.
  const Component& component(std::size_t level) const { return components_.at(level - 1); }
  const std::vector<Component>& components() const { return components_; }
  std::size_t degree(std::size_t level) const { return component(level).degree(); }

  // |X_1| * ... * |X_{level-1}|: the domain size of a level-`level`
  // dependency function. prefix_count(1) == 1.
  std::uint64_t prefix_count(std::size_t level) const { return prefix_counts_.at(level - 1); }
  std::uint64_t total_degree() const { return prefix_counts_.back(); }

  // Elements of <G_level>, or nullptr when that group exceeds kMembershipCap.
  const std::unordered_set<Permutation, PermutationHash>* group_elements(
      std::size_t level) const;

  // Encodes the leading coords.size() coordinates. Coordinates must be in range.
  std::uint64_t encode(std::span<const Point> coords) const;
  State decode(std::uint64_t code, std::size_t length) const;
  // Throws Error(kInvalidArgument) on a wrong length and Error(kOutOfRange) on
  // an out-of-range coordinate. check_state expects all levels().
  void check_state(std::span<const Point> coords) const;
  void check_prefix(std::span<const Point> coords, std::size_t length) const;

  friend bool operator==(const ComponentList& a, const ComponentList& b) {
    return a.components_ == b.components_;
  }

 private:
  std::vector<Component> components_;
  // prefix_counts_[i] = product of the first i degrees; size levels()+1.
  std::vector<std::uint64_t> prefix_counts_;
  std::vector<std::optional<std::unordered_set<Permutation, PermutationHash>>> groups_;
};

// A total function from prefix codes of one level to permutations of that
// level's points. Stored canonically: either a single constant value (for
// functions constant over the whole domain), or a sparse table of the
// non-identity values with identity everywhere else. Equality of the stored
// form is therefore equality of functions.
class DependencyFunction {
 public:
  // The identity function of `level`.
  DependencyFunction(const ComponentList& components, std::size_t level);

  // `fallback` (identity when absent) on every prefix missing from `entries`.
  // Throws Error(kOutOfRange) for keys >= prefix_count(level) and
  // Error(kDegreeMismatch) for values of the wrong degree.
  static DependencyFunction FromEntries(const ComponentList& components,
                                        std::size_t level,
                                        std::map<std::uint64_t, Permutation> entries,
                                        std::optional<Permutation> fallback = {});
  static DependencyFunction Constant(const ComponentList& components,
                                     std::size_t level, Permutation value);
  // values[p] is the value at prefix code p; size must be prefix_count(level).
  static DependencyFunction FromValues(const ComponentList& components,
                                       std::size_t level,
                                       std::vector<Permutation> values);

  std::size_t level() const { return level_; }
  std::uint64_t domain_size() const { return domain_size_; }
  std::size_t degree() const { return identity_.degree(); }

  const Permutation& operator()(std::uint64_t prefix_code) const;

  bool is_identity() const { return !constant_ && table_.empty(); }
  const std::optional<Permutation>& constant() const { return constant_; }
  // Non-identity values keyed by prefix code; empty when constant() is set.
  const std::map<std::uint64_t, Permutation>& entries() const { return table_; }

  friend bool operator==(const DependencyFunction&, const DependencyFunction&) = default;

 private:
  DependencyFunction(std::size_t level, std::uint64_t domain_size, std::size_t degree)
      : level_(level), domain_size_(domain_size), identity_(Permutation::Identity(degree)) {}

  std::size_t level_;
  std::uint64_t domain_size_;
  Permutation identity_;
  std::optional<Permutation> constant_;
  std::map<std::uint64_t, Permutation> table_;
};

class PermutationCascade {
 public:
  // levels[i] must be the level-(i+1) function over `components`. With
  // `check_membership`, every stored value must lie in its component group
  // (when that group is small enough to have been enumerated).
  PermutationCascade(std::shared_ptr<const ComponentList> components,
                     std::vector<DependencyFunction> levels,
                     bool check_membership = true);

  const ComponentList& components() const { return *components_; }
  const std::shared_ptr<const ComponentList>& shared_components() const { return components_; }
  std::size_t levels() const { return levels_.size(); }
  const DependencyFunction& level(std::size_t level) const { return levels_.at(level - 1); }

  friend bool operator==(const PermutationCascade& a, const PermutationCascade& b) {
    return (a.components_ == b.components_ || *a.components_ == *b.components_) &&
           a.levels_ == b.levels_;
  }

 private:
  std::shared_ptr<const ComponentList> components_;
  std::vector<DependencyFunction> levels_;
};

PermutationCascade identity_cascade(std::shared_ptr<const ComponentList> components);

// Throws Error(kOutOfRange) / Error(kInvalidArgument) when x does not conform.
State act(const PermutationCascade& d, std::span<const Point> x);

// (df)_i(p) = d_i(p) f_i(p^d). Throws Error(kDegreeMismatch) when d and f are
// over different component lists.
PermutationCascade multiply(const PermutationCascade& d, const PermutationCascade& f);

// f_i(p^d) = d_i(p)^-1 for every prefix p.
PermutationCascade invert(const PermutationCascade& d);

// The action of d on all encoded states. Throws Error(kOverflow) when the
// total degree exceeds `cap`.
Permutation flatten(const PermutationCascade& d, std::uint64_t cap = kDefaultCap);

// |G_1| * prod_{i>=2} |G_i|^(|X_1|...|X_{i-1}|), exactly.
BigInt full_cascade_order(const ComponentList& components, std::uint64_t cap = kDefaultCap);

struct GeneratedGroup {
  std::uint64_t order = 0;
  std::vector<Permutation> generators;  // flattened
  std::vector<Permutation> elements;    // flattened, breadth-first order
};

// <W> as a group of permutations of the encoded product state set.
GeneratedGroup generated_order(const ComponentList& components,
                               std::span<const PermutationCascade> generators,
                               std::uint64_t cap = kDefaultCap);

struct AssociativityOrders {
  BigInt left_grouped;   // |C_[1,2]| * o_3^(n_1 n_2)
  BigInt right_grouped;  // o_1 * |C_[2,3]|^(n_1)
  bool holds() const { return left_grouped == right_grouped; }
};

// Requires exactly three components.
AssociativityOrders associativity_orders(const ComponentList& components,
                                         std::uint64_t cap = kDefaultCap);
bool verify_associativity_orders(const ComponentList& components,
                                 std::uint64_t cap = kDefaultCap);

// Every cascade of the full cascade product. Only for small lists: throws
// Error(kGroupTooLarge) when the full order exceeds `cap`.
std::vector<PermutationCascade> all_cascades(
    const std::shared_ptr<const ComponentList>& components,
    std::uint64_t cap = kDefaultCap);

}  // namespace cascade

#endif  // CASCADE_CASCADE_HPP_
