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

#include <set>

#include "cascade/error.hpp"
#include "cascade/sample.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

namespace cascade {
namespace {

using testing::cyc;

// Smallest k with p^k = id, by repeated composition.
std::uint64_t order_by_powers(const Permutation& p) {
  const Permutation id = Permutation::Identity(p.degree());
  Permutation q = p;
  std::uint64_t k = 1;
  while (q != id) {
    q = compose(q, p);
    ++k;
  }
  return k;
}

// Closure by repeatedly multiplying every known element by every element
// until nothing new appears.
std::set<Permutation> naive_closure(const std::vector<Permutation>& gens, std::size_t degree) {
  std::set<Permutation> known{Permutation::Identity(degree)};
  known.insert(gens.begin(), gens.end());
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Permutation> snapshot(known.begin(), known.end());
    for (const Permutation& a : snapshot) {
      for (const Permutation& b : snapshot) {
        grew |= known.insert(compose(a, b)).second;
      }
    }
  }
  return known;
}

std::uint64_t factorial(std::uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

TEST(PermutationTest, RejectsNonBijections) {
  EXPECT_THROW(Permutation({0, 0}), Error);
  EXPECT_THROW(Permutation({1, 2}), Error);
  EXPECT_THROW(Permutation(std::vector<Point>{}), Error);
}

TEST(PermutationTest, ComposeIsPThenQ) {
  // i -> q[p[i]]: 0 -> 1 -> 0, 1 -> 2 -> 2, 2 -> 0 -> 1.
  EXPECT_EQ(compose(cyc("(0 1 2)", 3), cyc("(0 1)", 3)), cyc("(1 2)", 3));
  EXPECT_EQ(compose(cyc("(0 1)", 2), cyc("(0 1)", 2)), Permutation::Identity(2));
  const Permutation p = cyc("(0 3)(1 2)", 4);
  EXPECT_EQ(compose(Permutation::Identity(4), p), p);
}

TEST(PermutationTest, ComposeDegreeMismatch) {
  try {
    compose(Permutation::Identity(2), Permutation::Identity(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegreeMismatch);
  }
}

TEST(PermutationTest, Inverse) {
  EXPECT_EQ(inverse(Permutation::Identity(5)), Permutation::Identity(5));
  EXPECT_EQ(inverse(cyc("(0 1 2)", 3)), cyc("(0 2 1)", 3));
  EXPECT_EQ(inverse(cyc("(0 1)(2 3)", 4)), cyc("(0 1)(2 3)", 4));
}

TEST(PermutationTest, ElementOrder) {
  EXPECT_EQ(element_order(Permutation::Identity(4)), 1u);
  EXPECT_EQ(element_order(cyc("(0 1 2 3)", 4)), 4u);
  const Permutation p = cyc("(0 1)(2 3 4)", 5);
  EXPECT_EQ(element_order(p), 6u);
  EXPECT_EQ(element_order(p), order_by_powers(p));
}

TEST(CycleNotationTest, CanonicalPrinting) {
  EXPECT_EQ(format_cycles(Permutation::Identity(3)), "()");
  EXPECT_EQ(format_cycles(Permutation({2, 0, 1, 3})), "(0 2 1)");
  EXPECT_EQ(format_cycles(cyc("(3 4)(2 0 1)", 5)), "(0 1 2)(3 4)");
}

TEST(CycleNotationTest, ParseAcceptsSpacingAndIdentity) {
  EXPECT_EQ(cyc("()", 3), Permutation::Identity(3));
  EXPECT_EQ(cyc(" ( 0  1 ) ( 2 3 ) ", 4), Permutation({1, 0, 3, 2}));
  EXPECT_EQ(cyc("(2)", 3), Permutation::Identity(3));
}

TEST(CycleNotationTest, ParseErrors) {
  const auto code_of = [](std::string_view text, std::size_t degree) {
    try {
      parse_cycles(text, degree);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode{};
  };
  EXPECT_EQ(code_of("(0 1 0)", 3), ErrorCode::kParse);
  EXPECT_EQ(code_of("(0 1)(1 2)", 3), ErrorCode::kParse);
  EXPECT_EQ(code_of("(0 1", 3), ErrorCode::kParse);
  EXPECT_EQ(code_of("0 1", 3), ErrorCode::kParse);
  EXPECT_EQ(code_of("(a)", 3), ErrorCode::kParse);
  EXPECT_EQ(code_of("(0 3)", 3), ErrorCode::kOutOfRange);
}

TEST(CycleNotationTest, RoundTripsRandomPermutations) {
  sample::Rng rng(1);
  for (int i = 0; i < 300; ++i) {
    const Permutation p = sample::permutation(rng, 1 + sample::uniform(rng, 0, 9));
    EXPECT_EQ(parse_cycles(format_cycles(p), p.degree()), p);
  }
}

TEST(EnumerateGroupTest, SmallGroups) {
  EXPECT_EQ(enumerate_group(Component::FromCycles(2, {"(0 1)"})).size(), 2u);
  EXPECT_EQ(enumerate_group(Component::FromCycles(3, {"(0 1)", "(0 1 2)"})).size(), 6u);
  const Component d4 = Component::FromCycles(4, {"(0 1 2 3)", "(1 3)"});
  const std::vector<Permutation> elements = enumerate_group(d4);
  EXPECT_EQ(elements.size(), 8u);
  EXPECT_EQ(std::set<Permutation>(elements.begin(), elements.end()),
            naive_closure(d4.generators(), 4));
  EXPECT_TRUE(elements.front().is_identity());
}

TEST(EnumerateGroupTest, CapIsAnError) {
  try {
    enumerate_group(Component::Symmetric(5), 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kGroupTooLarge);
  }
  EXPECT_EQ(enumerate_group(Component::Symmetric(5), 120).size(), 120u);
}

TEST(EnumerateGroupTest, IsDeterministic) {
  const Component s4 = Component::Symmetric(4);
  EXPECT_EQ(enumerate_group(s4), enumerate_group(s4));
}

TEST(FingerprintTest, Examples) {
  const std::vector<Permutation> trivial{Permutation::Identity(3)};
  EXPECT_EQ(to_string(fingerprint(trivial)), "(1, {1:1}, abelian)");
  const GroupFingerprint s3 = fingerprint(enumerate_group(Component::Symmetric(3)));
  EXPECT_EQ(s3.order, 6u);
  EXPECT_EQ(s3.element_order_histogram,
            (std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 3}, {3, 2}}));
  EXPECT_FALSE(s3.abelian);
  EXPECT_EQ(to_string(s3), "(6, {1:1, 2:3, 3:2}, non-abelian)");
}

TEST(FingerprintTest, GeneratorFormAgreesWithPairwise) {
  for (const Component& c : {Component::Symmetric(4), Component::Counter(6),
                             Component::FromCycles(4, {"(0 1)", "(2 3)"})}) {
    const std::vector<Permutation> elements = enumerate_group(c);
    EXPECT_EQ(fingerprint(elements), fingerprint(elements, c.generators()));
  }
}

TEST(PermutationPropertyTest, ComposeIsAssociative) {
  sample::Rng rng(2);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + sample::uniform(rng, 0, 8);
    const Permutation p = sample::permutation(rng, n);
    const Permutation q = sample::permutation(rng, n);
    const Permutation r = sample::permutation(rng, n);
    EXPECT_EQ(compose(compose(p, q), r), compose(p, compose(q, r)));
  }
}

TEST(PermutationPropertyTest, InverseIsTwoSided) {
  sample::Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    const Permutation p = sample::permutation(rng, 1 + sample::uniform(rng, 0, 8));
    EXPECT_TRUE(compose(p, inverse(p)).is_identity());
    EXPECT_TRUE(compose(inverse(p), p).is_identity());
    EXPECT_EQ(element_order(p), order_by_powers(p));
  }
}

TEST(PermutationPropertyTest, GroupOrderDividesFactorial) {
  sample::Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + sample::uniform(rng, 0, 5);
    std::vector<Permutation> gens;
    for (std::uint64_t g = sample::uniform(rng, 1, 3); g > 0; --g) {
      gens.push_back(sample::permutation(rng, n));
    }
    const Component c(n, gens);
    const std::vector<Permutation> elements = enumerate_group(c);
    EXPECT_EQ(factorial(n) % elements.size(), 0u);
    for (const Permutation& g : gens) EXPECT_EQ(elements.size() % element_order(g), 0u);
    EXPECT_EQ(elements.size(), naive_closure(gens, n).size());
  }
}

TEST(PermutationPropertyTest, FingerprintInvariantUnderConjugation) {
  sample::Rng rng(5);
  const std::vector<Component> groups{Component::Symmetric(3),
                                      Component::FromCycles(4, {"(0 1 2 3)", "(1 3)"}),
                                      Component::FromCycles(5, {"(0 1)", "(2 3 4)"})};
  for (const Component& c : groups) {
    const std::vector<Permutation> elements = enumerate_group(c);
    for (int i = 0; i < 10; ++i) {
      const Permutation g = sample::permutation(rng, c.degree());
      std::vector<Permutation> conjugated;
      for (const Permutation& s : elements) {
        conjugated.push_back(compose(compose(inverse(g), s), g));
      }
      EXPECT_EQ(fingerprint(conjugated), fingerprint(elements));
    }
  }
}

}  // namespace
}  // namespace cascade
