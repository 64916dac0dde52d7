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

#include "cascade/perm.hpp"

#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "cascade/error.hpp"

namespace cascade {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "permutation of degree 0");
  }
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw Error(ErrorCode::kInvalidArgument, "images are not a bijection");
    }
    seen[x] = true;
  }
}

Permutation Permutation::Identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images));
}

Permutation Permutation::Rotation(std::size_t degree) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) {
    images[i] = static_cast<Point>((i + 1) % degree);
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image array.
  std::uint64_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw Error(ErrorCode::kDegreeMismatch,
                "cannot compose permutations of degree " +
                    std::to_string(p.degree()) + " and " +
                    std::to_string(q.degree()));
  }
  std::vector<Point> images(p.degree());
  for (Point i = 0; i < images.size(); ++i) images[i] = q[p[i]];
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<Point> images(p.degree());
  for (Point i = 0; i < images.size(); ++i) images[p[i]] = i;
  return Permutation(std::move(images));
}

std::uint64_t element_order(const Permutation& p) {
  std::vector<bool> visited(p.degree(), false);
  std::uint64_t order = 1;
  for (Point start = 0; start < p.degree(); ++start) {
    if (visited[start]) continue;
    std::uint64_t length = 0;
    for (Point x = start; !visited[x]; x = p[x]) {
      visited[x] = true;
      ++length;
    }
    order = std::lcm(order, length);
  }
  return order;
}

std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> visited(p.degree(), false);
  // Scanning starts in increasing order, so each cycle begins at its minimum
  // and cycles come out sorted by minimum.
  for (Point start = 0; start < p.degree(); ++start) {
    if (visited[start] || p[start] == start) continue;
    out += '(';
    for (Point x = start; !visited[x]; x = p[x]) {
      visited[x] = true;
      if (x != start) out += ' ';
      out += std::to_string(x);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

namespace {

[[noreturn]] void cycle_syntax_error(std::string_view text, const char* why) {
  throw Error(ErrorCode::kParse,
              std::string("malformed cycle '") + std::string(text) + "': " + why);
}

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  skip_space();
  if (pos == text.size()) cycle_syntax_error(text, "empty");
  bool saw_cycle = false;
  while (true) {
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != '(') cycle_syntax_error(text, "expected '('");
    ++pos;
    std::vector<Point> cycle;
    while (true) {
      skip_space();
      if (pos == text.size()) cycle_syntax_error(text, "missing ')'");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
        cycle_syntax_error(text, "expected a point");
      }
      std::uint64_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (value > 0xFFFFFFFFULL) cycle_syntax_error(text, "point too large");
        ++pos;
      }
      if (value >= degree) {
        throw Error(ErrorCode::kOutOfRange, "point " + std::to_string(value) +
                                                " out of range for degree " +
                                                std::to_string(degree));
      }
      if (used[value]) {
        cycle_syntax_error(text, "repeated point");
      }
      used[value] = true;
      cycle.push_back(static_cast<Point>(value));
    }
    if (cycle.empty()) {
      // "()" is only legal as the whole identity.
      if (saw_cycle) cycle_syntax_error(text, "empty cycle");
      skip_space();
      if (pos != text.size()) cycle_syntax_error(text, "empty cycle");
      break;
    }
    saw_cycle = true;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Component::Component(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree_ == 0) {
    throw Error(ErrorCode::kInvalidArgument, "component of degree 0");
  }
  if (generators_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "component without generators");
  }
  for (const Permutation& g : generators_) {
    if (g.degree() != degree_) {
      throw Error(ErrorCode::kDegreeMismatch,
                  "generator " + format_cycles(g) + " has degree " +
                      std::to_string(g.degree()) + ", component has " +
                      std::to_string(degree_));
    }
  }
}

Component Component::FromCycles(std::size_t degree,
                                std::initializer_list<std::string_view> gens) {
  std::vector<Permutation> perms;
  for (std::string_view g : gens) perms.push_back(parse_cycles(g, degree));
  return Component(degree, std::move(perms));
}

Component Component::Counter(std::size_t n) {
  return Component(n, {Permutation::Rotation(n)});
}

Component Component::Symmetric(std::size_t n) {
  if (n <= 2) return Counter(n);
  std::vector<Point> swap(n);
  std::iota(swap.begin(), swap.end(), Point{0});
  std::swap(swap[0], swap[1]);
  return Component(n, {Permutation::Rotation(n), Permutation(std::move(swap))});
}

std::vector<Permutation> enumerate_group(std::span<const Permutation> generators,
                                         std::size_t degree, std::uint64_t cap) {
  if (cap == 0) throw Error(ErrorCode::kInvalidArgument, "cap must be >= 1");
  for (const Permutation& g : generators) {
    if (g.degree() != degree) {
      throw Error(ErrorCode::kDegreeMismatch, "generator degree mismatch");
    }
  }
  std::vector<Permutation> elements{Permutation::Identity(degree)};
  std::unordered_set<Permutation, PermutationHash> seen{elements.front()};
  // Right multiplication by generators from each discovered element; for a
  // finite group this reaches every element of <generators>.
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const Permutation& g : generators) {
      Permutation next = compose(elements[head], g);
      if (seen.contains(next)) continue;
      if (elements.size() >= cap) {
        throw Error(ErrorCode::kGroupTooLarge,
                    "group too large: more than " + std::to_string(cap) +
                        " elements");
      }
      seen.insert(next);
      elements.push_back(std::move(next));
    }
  }
  return elements;
}

std::vector<Permutation> enumerate_group(const Component& c, std::uint64_t cap) {
  return enumerate_group(c.generators(), c.degree(), cap);
}

namespace {

bool all_commute(std::span<const Permutation> perms) {
  for (std::size_t i = 0; i < perms.size(); ++i) {
    for (std::size_t j = i + 1; j < perms.size(); ++j) {
      if (compose(perms[i], perms[j]) != compose(perms[j], perms[i])) {
        return false;
      }
    }
  }
  return true;
}

GroupFingerprint histogram_only(std::span<const Permutation> elements) {
  GroupFingerprint fp;
  fp.order = elements.size();
  for (const Permutation& p : elements) ++fp.element_order_histogram[element_order(p)];
  return fp;
}

}  // namespace

GroupFingerprint fingerprint(std::span<const Permutation> elements) {
  GroupFingerprint fp = histogram_only(elements);
  fp.abelian = all_commute(elements);
  return fp;
}

GroupFingerprint fingerprint(std::span<const Permutation> elements,
                             std::span<const Permutation> generators) {
  GroupFingerprint fp = histogram_only(elements);
  fp.abelian = all_commute(generators);
  return fp;
}

std::string to_string(const GroupFingerprint& fp) {
  std::ostringstream out;
  out << '(' << fp.order << ", {";
  bool first = true;
  for (const auto& [order, count] : fp.element_order_histogram) {
    if (!first) out << ", ";
    first = false;
    out << order << ':' << count;
  }
  out << "}, " << (fp.abelian ? "abelian" : "non-abelian") << ')';
  return out.str();
}

}  // namespace cascade
