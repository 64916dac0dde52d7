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

// Finite permutations acting on the right of {0, ..., degree-1}, permutation
// groups given by generators, breadth-first group enumeration and the
// fingerprints used as evidence for isomorphism-class claims.
//
// Convention: x^(pq) = (x^p)^q, so compose(p, q) means "p then q".

#ifndef CASCADE_PERM_HPP_
#define CASCADE_PERM_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cascade {

using Point = std::uint32_t;

inline constexpr std::uint64_t kDefaultCap = 1'000'000;

class Permutation {
 public:
  // Identity of degree 1.
  Permutation() : images_{0} {}

  // Throws Error(kInvalidArgument) unless `images` is a bijection of
  // {0, ..., images.size()-1} with images.size() >= 1.
  explicit Permutation(std::vector<Point> images);

  static Permutation Identity(std::size_t degree);
  // The cyclic shift x -> x+1 mod degree, the "+1" of a mod-n counter.
  static Permutation Rotation(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

// Point i goes to q[p[i]]. Throws Error(kDegreeMismatch).
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
// Smallest k >= 1 with p^k = 1 (lcm of the cycle lengths).
std::uint64_t element_order(const Permutation& p);

// Cycle notation with 0-based points: "(0 1 2)(3 4)", "()" for the identity.
// Cycles are sorted by their minimum point, which is written first.
std::string format_cycles(const Permutation& p);
// Throws Error(kParse) on malformed text and Error(kOutOfRange) on points
// >= degree. Repeated points are rejected.
Permutation parse_cycles(std::string_view text, std::size_t degree);

// One (X_i, G_i): a point count and a generating set of its group.
class Component {
 public:
  Component(std::size_t degree, std::vector<Permutation> generators);

  // Convenience for tests and the built-in examples: cycle-notation generators.
  static Component FromCycles(std::size_t degree,
                              std::initializer_list<std::string_view> gens);
  // The mod-n counter (n, Z_n).
  static Component Counter(std::size_t n);
  // (n, S_n) generated by an n-cycle and a transposition.
  static Component Symmetric(std::size_t n);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  friend bool operator==(const Component&, const Component&) = default;

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
};

// All elements of <generators>, identity first, in breadth-first discovery
// order (deterministic). Throws Error(kGroupTooLarge) once more than `cap`
// elements have been found; the result is never truncated.
std::vector<Permutation> enumerate_group(std::span<const Permutation> generators,
                                         std::size_t degree,
                                         std::uint64_t cap = kDefaultCap);
std::vector<Permutation> enumerate_group(const Component& c,
                                         std::uint64_t cap = kDefaultCap);

struct GroupFingerprint {
  std::uint64_t order = 0;
  std::map<std::uint64_t, std::uint64_t> element_order_histogram;
  bool abelian = true;

  friend bool operator==(const GroupFingerprint&,
                         const GroupFingerprint&) = default;
};

// `elements` must be a closed group; this is not re-verified. The abelian
// test compares all pairs, stopping at the first pair that does not commute.
GroupFingerprint fingerprint(std::span<const Permutation> elements);
// Same, but decides commutativity from a generating set.
GroupFingerprint fingerprint(std::span<const Permutation> elements,
                             std::span<const Permutation> generators);

// "(8, {1:1, 2:5, 4:2}, non-abelian)"
std::string to_string(const GroupFingerprint& fp);

}  // namespace cascade

#endif  // CASCADE_PERM_HPP_
