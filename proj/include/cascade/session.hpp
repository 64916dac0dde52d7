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

// Session files: named component lists and named cascades.
//
//   # comment
//   components L = [2: (0 1); 2: (0 1)]
//   cascade w over L
//     level 1: (0 1)
//     level 2: [1] -> (0 1)
//   end
//
// A bare permutation on a level is that level's value on every prefix not
// listed explicitly; unlisted prefixes are otherwise the identity. Printing is
// canonical: constant levels print bare, other levels list their non-identity
// prefixes in increasing code order.

#ifndef CASCADE_SESSION_HPP_
#define CASCADE_SESSION_HPP_

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cascade/cascade.hpp"

namespace cascade {

struct SessionOptions {
  bool check_membership = true;
};

class Session {
 public:
  struct NamedComponents {
    std::string name;
    std::shared_ptr<const ComponentList> list;
  };
  struct NamedCascade {
    std::string name;
    std::string list_name;
    PermutationCascade cascade;
  };
  enum class Kind { kComponents, kCascade };

  // Throw Error(kInvalidArgument) on duplicate names or when the cascade's
  // list is not the named one.
  void add_components(std::string name, std::shared_ptr<const ComponentList> list);
  void add_cascade(std::string name, std::string list_name, PermutationCascade cascade);

  // Throw Error(kNotFound).
  const NamedComponents& components(std::string_view name) const;
  const NamedCascade& cascade(std::string_view name) const;

  const std::vector<NamedComponents>& all_components() const { return components_; }
  const std::vector<NamedCascade>& all_cascades() const { return cascades_; }
  // Declarations in file order: (kind, index into the matching vector).
  const std::vector<std::pair<Kind, std::size_t>>& order() const { return order_; }
  bool empty() const { return order_.empty(); }

  friend bool operator==(const Session& a, const Session& b);

 private:
  std::vector<NamedComponents> components_;
  std::vector<NamedCascade> cascades_;
  std::vector<std::pair<Kind, std::size_t>> order_;
};

// Throws Error(kParse) with "line N: ..." messages.
Session parse_session(std::string_view text, const SessionOptions& options = {});
std::string format_session(const Session& session);

std::string format_components(std::string_view name, const ComponentList& list);
std::string format_cascade(const PermutationCascade& d, std::string_view name,
                           std::string_view list_name);

// "(0,1,1)"
std::string format_state(std::span<const Point> coords);
// Accepts "(1,1)", "(1, 1)", "1 1" or "1,1".
State parse_state(std::string_view text);

bool is_valid_name(std::string_view name);

}  // namespace cascade

#endif  // CASCADE_SESSION_HPP_
