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

#include "cascade/cascade.hpp"

#include <limits>
#include <string>
#include <utility>

#include "cascade/error.hpp"

namespace cascade {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, const char* what) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw Error(ErrorCode::kOverflow, std::string(what) + " overflows 64 bits");
  }
  return a * b;
}

std::uint64_t group_order(const ComponentList& list, std::size_t level, std::uint64_t cap) {
  if (const auto* elements = list.group_elements(level)) {
    if (elements->size() > cap) {
      throw Error(ErrorCode::kGroupTooLarge,
                  "group too large: more than " + std::to_string(cap) + " elements");
    }
    return elements->size();
  }
  return enumerate_group(list.component(level), cap).size();
}

// Given images[p] = code of p^d for all prefixes p of length level-1, returns
// the same table for prefixes of length `level`.
std::vector<std::uint64_t> extend_prefix_images(const ComponentList& list,
                                                const DependencyFunction& fn,
                                                const std::vector<std::uint64_t>& images) {
  const std::uint64_t degree = list.degree(fn.level());
  std::vector<std::uint64_t> next(images.size() * degree);
  for (std::uint64_t p = 0; p < images.size(); ++p) {
    const Permutation& g = fn(p);
    for (Point x = 0; x < degree; ++x) {
      next[p * degree + x] = images[p] * degree + g[x];
    }
  }
  return next;
}

void require_same_components(const PermutationCascade& d, const PermutationCascade& f) {
  if (d.shared_components() != f.shared_components() && d.components() != f.components()) {
    throw Error(ErrorCode::kDegreeMismatch, "cascades are over different component lists");
  }
}

}  // namespace

// ComponentList --------------------------------------------------------------

ComponentList::ComponentList(std::vector<Component> components)
    : components_(std::move(components)) {
  if (components_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "component list must not be empty");
  }
  prefix_counts_.push_back(1);
  for (const Component& c : components_) {
    prefix_counts_.push_back(checked_mul(prefix_counts_.back(), c.degree(), "total degree"));
  }
  for (const Component& c : components_) {
    try {
      auto elements = enumerate_group(c, kMembershipCap);
      groups_.emplace_back(std::in_place, std::make_move_iterator(elements.begin()),
                           std::make_move_iterator(elements.end()));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kGroupTooLarge) throw;
      groups_.emplace_back(std::nullopt);
    }
  }
}

const std::unordered_set<Permutation, PermutationHash>* ComponentList::group_elements(
    std::size_t level) const {
  const auto& group = groups_.at(level - 1);
  return group ? &*group : nullptr;
}

std::uint64_t ComponentList::encode(std::span<const Point> coords) const {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    code = code * components_[i].degree() + coords[i];
  }
  return code;
}

State ComponentList::decode(std::uint64_t code, std::size_t length) const {
  State coords(length);
  for (std::size_t i = length; i-- > 0;) {
    const std::uint64_t degree = components_[i].degree();
    coords[i] = static_cast<Point>(code % degree);
    code /= degree;
  }
  return coords;
}

void ComponentList::check_prefix(std::span<const Point> coords, std::size_t length) const {
  if (coords.size() != length || length > levels()) {
    throw Error(ErrorCode::kInvalidArgument,
                "expected " + std::to_string(length) + " coordinates, got " +
                    std::to_string(coords.size()));
  }
  for (std::size_t i = 0; i < length; ++i) {
    if (coords[i] >= components_[i].degree()) {
      throw Error(ErrorCode::kOutOfRange,
                  "point " + std::to_string(coords[i]) + " out of range at level " +
                      std::to_string(i + 1));
    }
  }
}

void ComponentList::check_state(std::span<const Point> coords) const {
  check_prefix(coords, levels());
}

// DependencyFunction ---------------------------------------------------------

DependencyFunction::DependencyFunction(const ComponentList& components, std::size_t level)
    : DependencyFunction(level, components.prefix_count(level), components.degree(level)) {}

const Permutation& DependencyFunction::operator()(std::uint64_t prefix_code) const {
  if (constant_) return *constant_;
  auto it = table_.find(prefix_code);
  return it == table_.end() ? identity_ : it->second;
}

DependencyFunction DependencyFunction::Constant(const ComponentList& components,
                                                std::size_t level, Permutation value) {
  DependencyFunction fn(components, level);
  if (value.degree() != fn.degree()) {
    throw Error(ErrorCode::kDegreeMismatch,
                "value " + format_cycles(value) + " does not act on level " +
                    std::to_string(level));
  }
  if (!value.is_identity()) fn.constant_ = std::move(value);
  return fn;
}

DependencyFunction DependencyFunction::FromValues(const ComponentList& components,
                                                  std::size_t level,
                                                  std::vector<Permutation> values) {
  DependencyFunction fn(components, level);
  if (values.size() != fn.domain_size()) {
    throw Error(ErrorCode::kInvalidArgument, "value table has the wrong size");
  }
  bool constant = true;
  for (const Permutation& v : values) {
    if (v.degree() != fn.degree()) {
      throw Error(ErrorCode::kDegreeMismatch,
                  "value " + format_cycles(v) + " does not act on level " +
                      std::to_string(level));
    }
    constant = constant && v == values.front();
  }
  if (constant) return Constant(components, level, std::move(values.front()));
  for (std::uint64_t p = 0; p < values.size(); ++p) {
    if (!values[p].is_identity()) fn.table_.emplace(p, std::move(values[p]));
  }
  return fn;
}

DependencyFunction DependencyFunction::FromEntries(const ComponentList& components,
                                                   std::size_t level,
                                                   std::map<std::uint64_t, Permutation> entries,
                                                   std::optional<Permutation> fallback) {
  DependencyFunction fn(components, level);
  Permutation base = fallback ? std::move(*fallback) : fn.identity_;
  if (base.degree() != fn.degree()) {
    throw Error(ErrorCode::kDegreeMismatch, "fallback value has the wrong degree");
  }
  for (const auto& [key, value] : entries) {
    if (key >= fn.domain_size()) {
      throw Error(ErrorCode::kOutOfRange, "prefix code " + std::to_string(key) +
                                              " out of range at level " +
                                              std::to_string(level));
    }
    if (value.degree() != fn.degree()) {
      throw Error(ErrorCode::kDegreeMismatch,
                  "value " + format_cycles(value) + " does not act on level " +
                      std::to_string(level));
    }
  }

  const bool covers_domain = entries.size() == fn.domain_size();
  if (!covers_domain && !base.is_identity()) {
    // Non-identity default with exceptions: canonical form is a full table.
    std::vector<Permutation> values(fn.domain_size(), base);
    for (auto& [key, value] : entries) values[key] = std::move(value);
    return FromValues(components, level, std::move(values));
  }
  if (covers_domain) {
    bool constant = true;
    for (const auto& [key, value] : entries) constant = constant && value == entries.begin()->second;
    if (constant) return Constant(components, level, entries.begin()->second);
  }
  // Identity default (or a full non-constant table): keep the non-identity entries.
  for (auto& [key, value] : entries) {
    if (!value.is_identity()) fn.table_.emplace(key, std::move(value));
  }
  return fn;
}

// PermutationCascade ---------------------------------------------------------

PermutationCascade::PermutationCascade(std::shared_ptr<const ComponentList> components,
                                       std::vector<DependencyFunction> levels,
                                       bool check_membership)
    : components_(std::move(components)), levels_(std::move(levels)) {
  if (!components_) throw Error(ErrorCode::kInvalidArgument, "null component list");
  if (levels_.size() != components_->levels()) {
    throw Error(ErrorCode::kInvalidArgument,
                "cascade has " + std::to_string(levels_.size()) + " levels, component list has " +
                    std::to_string(components_->levels()));
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const DependencyFunction& fn = levels_[i];
    const std::size_t level = i + 1;
    if (fn.level() != level || fn.domain_size() != components_->prefix_count(level) ||
        fn.degree() != components_->degree(level)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "dependency function does not fit level " + std::to_string(level));
    }
    if (!check_membership) continue;
    const auto* group = components_->group_elements(level);
    if (group == nullptr) continue;
    auto check = [&](const Permutation& value) {
      if (!group->contains(value)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "value " + format_cycles(value) + " is not in the group of level " +
                        std::to_string(level));
      }
    };
    if (fn.constant()) check(*fn.constant());
    for (const auto& [key, value] : fn.entries()) check(value);
  }
}

PermutationCascade identity_cascade(std::shared_ptr<const ComponentList> components) {
  std::vector<DependencyFunction> levels;
  for (std::size_t level = 1; level <= components->levels(); ++level) {
    levels.emplace_back(*components, level);
  }
  return PermutationCascade(std::move(components), std::move(levels), false);
}

State act(const PermutationCascade& d, std::span<const Point> x) {
  const ComponentList& list = d.components();
  list.check_state(x);
  State result(x.size());
  std::uint64_t prefix = 0;
  for (std::size_t level = 1; level <= list.levels(); ++level) {
    result[level - 1] = d.level(level)(prefix)[x[level - 1]];
    prefix = prefix * list.degree(level) + x[level - 1];
  }
  return result;
}

PermutationCascade multiply(const PermutationCascade& d, const PermutationCascade& f) {
  require_same_components(d, f);
  const ComponentList& list = d.components();
  std::vector<DependencyFunction> levels;
  std::vector<std::uint64_t> images{0};
  for (std::size_t level = 1; level <= list.levels(); ++level) {
    const DependencyFunction& dl = d.level(level);
    const DependencyFunction& fl = f.level(level);
    if (dl.is_identity() && fl.is_identity()) {
      levels.emplace_back(list, level);
    } else {
      std::vector<Permutation> values;
      values.reserve(images.size());
      for (std::uint64_t p = 0; p < images.size(); ++p) {
        values.push_back(compose(dl(p), fl(images[p])));
      }
      levels.push_back(DependencyFunction::FromValues(list, level, std::move(values)));
    }
    if (level < list.levels()) images = extend_prefix_images(list, dl, images);
  }
  return PermutationCascade(d.shared_components(), std::move(levels), false);
}

PermutationCascade invert(const PermutationCascade& d) {
  const ComponentList& list = d.components();
  std::vector<DependencyFunction> levels;
  std::vector<std::uint64_t> images{0};
  for (std::size_t level = 1; level <= list.levels(); ++level) {
    const DependencyFunction& dl = d.level(level);
    if (dl.is_identity()) {
      levels.emplace_back(list, level);
    } else if (dl.constant()) {
      // d permutes the prefixes, so a constant stays constant.
      levels.push_back(DependencyFunction::Constant(list, level, inverse(*dl.constant())));
    } else {
      std::map<std::uint64_t, Permutation> entries;
      for (std::uint64_t p = 0; p < images.size(); ++p) {
        const Permutation& value = dl(p);
        if (!value.is_identity()) entries.emplace(images[p], inverse(value));
      }
      levels.push_back(DependencyFunction::FromEntries(list, level, std::move(entries)));
    }
    if (level < list.levels()) images = extend_prefix_images(list, dl, images);
  }
  return PermutationCascade(d.shared_components(), std::move(levels), false);
}

Permutation flatten(const PermutationCascade& d, std::uint64_t cap) {
  const ComponentList& list = d.components();
  if (list.total_degree() > cap) {
    throw Error(ErrorCode::kOverflow, "flattened degree " + std::to_string(list.total_degree()) +
                                          " exceeds cap " + std::to_string(cap));
  }
  std::vector<std::uint64_t> images{0};
  for (std::size_t level = 1; level <= list.levels(); ++level) {
    images = extend_prefix_images(list, d.level(level), images);
  }
  return Permutation(std::vector<Point>(images.begin(), images.end()));
}

BigInt full_cascade_order(const ComponentList& components, std::uint64_t cap) {
  BigInt order = 1;
  for (std::size_t level = 1; level <= components.levels(); ++level) {
    const std::uint64_t exponent = components.prefix_count(level);
    if (exponent > std::numeric_limits<unsigned>::max()) {
      throw Error(ErrorCode::kOverflow, "order exponent too large");
    }
    order *= boost::multiprecision::pow(BigInt(group_order(components, level, cap)),
                                        static_cast<unsigned>(exponent));
  }
  return order;
}

GeneratedGroup generated_order(const ComponentList& components,
                               std::span<const PermutationCascade> generators,
                               std::uint64_t cap) {
  GeneratedGroup group;
  for (const PermutationCascade& w : generators) {
    if (w.components() != components) {
      throw Error(ErrorCode::kDegreeMismatch, "generator is over a different component list");
    }
    group.generators.push_back(flatten(w, cap));
  }
  if (components.total_degree() > cap) {
    throw Error(ErrorCode::kOverflow, "flattened degree exceeds cap");
  }
  group.elements = enumerate_group(group.generators, components.total_degree(), cap);
  group.order = group.elements.size();
  return group;
}

AssociativityOrders associativity_orders(const ComponentList& components, std::uint64_t cap) {
  if (components.levels() != 3) {
    throw Error(ErrorCode::kInvalidArgument, "associativity check needs exactly 3 components");
  }
  using boost::multiprecision::pow;
  const BigInt o1 = group_order(components, 1, cap);
  const BigInt o2 = group_order(components, 2, cap);
  const BigInt o3 = group_order(components, 3, cap);
  const auto n1 = static_cast<unsigned>(components.degree(1));
  const auto n2 = static_cast<unsigned>(components.degree(2));

  AssociativityOrders result;
  const BigInt top_pair = o1 * pow(o2, n1);      // |C_[(X1,G1),(X2,G2)]|
  const BigInt bottom_pair = o2 * pow(o3, n2);   // |C_[(X2,G2),(X3,G3)]|
  result.left_grouped = top_pair * pow(o3, n1 * n2);
  result.right_grouped = o1 * pow(bottom_pair, n1);
  return result;
}

bool verify_associativity_orders(const ComponentList& components, std::uint64_t cap) {
  return associativity_orders(components, cap).holds();
}

std::vector<PermutationCascade> all_cascades(
    const std::shared_ptr<const ComponentList>& components, std::uint64_t cap) {
  const ComponentList& list = *components;
  if (full_cascade_order(list, cap) > cap) {
    throw Error(ErrorCode::kGroupTooLarge, "full cascade product has more than " +
                                               std::to_string(cap) + " elements");
  }
  // Every dependency function of every level, by counting in base |G_i|.
  std::vector<std::vector<DependencyFunction>> per_level;
  for (std::size_t level = 1; level <= list.levels(); ++level) {
    const std::vector<Permutation> group = enumerate_group(list.component(level), cap);
    const std::uint64_t domain = list.prefix_count(level);
    std::vector<std::uint64_t> digits(domain, 0);
    std::vector<DependencyFunction> functions;
    while (true) {
      std::vector<Permutation> values;
      values.reserve(domain);
      for (std::uint64_t digit : digits) values.push_back(group[digit]);
      functions.push_back(DependencyFunction::FromValues(list, level, std::move(values)));
      std::size_t i = 0;
      while (i < domain && ++digits[i] == group.size()) digits[i++] = 0;
      if (i == domain) break;
    }
    per_level.push_back(std::move(functions));
  }

  std::vector<PermutationCascade> result;
  std::vector<std::size_t> choice(list.levels(), 0);
  while (true) {
    std::vector<DependencyFunction> levels;
    for (std::size_t i = 0; i < choice.size(); ++i) levels.push_back(per_level[i][choice[i]]);
    result.emplace_back(components, std::move(levels), false);
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == per_level[i].size()) choice[i++] = 0;
    if (i == choice.size()) break;
  }
  return result;
}

}  // namespace cascade
