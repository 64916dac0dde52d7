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

#include "cascade/checks.hpp"

#include <functional>
#include <set>
#include <sstream>

#include "cascade/error.hpp"
#include "cascade/lamplighter.hpp"
#include "cascade/sample.hpp"
#include "cascade/session.hpp"

namespace cascade::checks {

namespace {

using Histogram = std::map<std::uint64_t, std::uint64_t>;

std::shared_ptr<const ComponentList> make_list(std::vector<Component> components) {
  return std::make_shared<const ComponentList>(std::move(components));
}

// Collects failure notes; the check passes when none were recorded.
class Report {
 public:
  explicit Report(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::string& what) {
    if (!ok && failures_++ < 5) {
      if (!result_.detail.empty()) result_.detail += "; ";
      result_.detail += what;
    }
  }
  void note(const std::string& what) { notes_.push_back(what); }

  CheckResult finish() {
    result_.passed = failures_ == 0;
    if (result_.passed) {
      for (const std::string& n : notes_) {
        if (!result_.detail.empty()) result_.detail += "; ";
        result_.detail += n;
      }
    } else if (failures_ > 5) {
      result_.detail += "; ... " + std::to_string(failures_ - 5) + " more";
    }
    return result_;
  }

 private:
  CheckResult result_;
  int failures_ = 0;
  std::vector<std::string> notes_;
};

CheckResult guarded(const std::string& name, const std::function<CheckResult()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {name, false, std::string("error: ") + e.what()};
  }
}

std::string str(const BigInt& n) { return n.str(); }

bool is_single_full_cycle(const Permutation& p) {
  return element_order(p) == p.degree() && format_cycles(p).find(")(") == std::string::npos;
}

// Transitive with trivial point stabilizers.
bool acts_regularly(const std::vector<Permutation>& elements, std::size_t degree) {
  if (elements.size() != degree) return false;
  std::set<Point> orbit;
  for (const Permutation& g : elements) orbit.insert(g[0]);
  return orbit.size() == degree;
}

}  // namespace

CheckResult order_formula() {
  return guarded("order-formula", [] {
    Report r("order-formula");
    const auto s3_natural = make_list({Component::Symmetric(3), Component::Counter(2)});
    const auto s3_regular =
        make_list({RegularRepresentation(Component::Symmetric(3)).component(), Component::Counter(2)});
    const auto z2_cubed =
        make_list({Component::Counter(2), Component::Counter(2), Component::Counter(2)});
    const BigInt o48 = full_cascade_order(*s3_natural);
    const BigInt o384 = full_cascade_order(*s3_regular);
    const BigInt o128 = full_cascade_order(*z2_cubed);
    r.expect(o48 == 48, "(3,S3) wr (2,Z2) has order " + str(o48) + ", expected 48");
    r.expect(o384 == 384, "(S3,S3) wr (2,Z2) has order " + str(o384) + ", expected 384");
    r.expect(o128 == 128, "(2,Z2)^3 full cascade has order " + str(o128) + ", expected 128");
    r.note("48, 384, 128");
    return r.finish();
  });
}

CheckResult mod4_counter(const CascadeExample& example) {
  return guarded("mod4", [&] {
    Report r("mod4");
    r.expect(example.generators.size() == 1, "expected a single generator");
    const GeneratedGroup group = generated_order(*example.components, example.generators);
    r.expect(group.order == 4, "generated order " + std::to_string(group.order) + ", expected 4");
    r.expect(!group.generators.empty() && is_single_full_cycle(group.generators.front()),
             "flattened generator " +
                 (group.generators.empty() ? std::string("-") : format_cycles(group.generators.front())) +
                 " is not a 4-cycle");
    r.expect(acts_regularly(group.elements, example.components->total_degree()),
             "action on the 4 states is not regular");
    const GroupFingerprint fp = fingerprint(group.elements, group.generators);
    const GroupFingerprint z4{4, Histogram{{1, 1}, {2, 1}, {4, 2}}, true};
    r.expect(fp == z4, "fingerprint " + to_string(fp) + ", expected " + to_string(z4));
    r.note(to_string(fp));
    return r.finish();
  });
}

CheckResult direct_product_contrast() {
  return guarded("direct-contrast", [] {
    Report r("direct-contrast");
    const auto list = make_list({Component::Counter(2), Component::Counter(2)});
    const auto generators = direct_product_cascades(list);
    const GeneratedGroup group = generated_order(*list, generators);
    const GroupFingerprint fp = fingerprint(group.elements, group.generators);
    const GroupFingerprint klein{4, Histogram{{1, 1}, {2, 3}}, true};
    r.expect(fp == klein, "fingerprint " + to_string(fp) + ", expected " + to_string(klein));
    r.expect(!fp.element_order_histogram.contains(4), "direct product has an element of order 4");
    const GeneratedGroup mod4 = generated_order(*mod4_counter_generator().components,
                                                mod4_counter_generator().generators);
    r.expect(fingerprint(mod4.elements) != fp, "indistinguishable from the mod-4 counter");
    r.note(to_string(fp));
    return r.finish();
  });
}

CheckResult d4_full_cascade() {
  return guarded("d4-full-cascade", [] {
    Report r("d4-full-cascade");
    const auto list = make_list({Component::Counter(2), Component::Counter(2)});
    const std::vector<PermutationCascade> cascades = all_cascades(list);
    r.expect(cascades.size() == 8, std::to_string(cascades.size()) + " cascades, expected 8");
    std::vector<Permutation> flat;
    std::set<Permutation> distinct;
    for (const PermutationCascade& d : cascades) {
      flat.push_back(flatten(d));
      distinct.insert(flat.back());
    }
    r.expect(distinct.size() == 8, std::to_string(distinct.size()) + " distinct permutations");
    const GroupFingerprint fp = fingerprint(flat);
    const GroupFingerprint d4{8, Histogram{{1, 1}, {2, 5}, {4, 2}}, false};
    r.expect(fp == d4, "fingerprint " + to_string(fp) + ", expected " + to_string(d4));
    r.expect(wreath_full_cascade_check(Component::Counter(2), Component::Counter(2)),
             "full cascade differs from the wreath product Z2 x| Z2^2");
    r.note(to_string(fp));
    return r.finish();
  });
}

CheckResult quaternion(const CascadeExample& example) {
  return guarded("quaternion", [&] {
    Report r("quaternion");
    r.expect(example.generators.size() == 2, "expected two generators");
    const GeneratedGroup group = generated_order(*example.components, example.generators);
    for (const Permutation& g : group.generators) {
      r.expect(element_order(g) == 4,
               "generator " + format_cycles(g) + " has order " + std::to_string(element_order(g)));
    }
    r.expect(group.order == 8, "generated order " + std::to_string(group.order) + ", expected 8");
    const GroupFingerprint fp = fingerprint(group.elements, group.generators);
    const auto involutions = fp.element_order_histogram.contains(2) ? fp.element_order_histogram.at(2) : 0;
    r.expect(involutions == 1, std::to_string(involutions) + " elements of order 2, expected 1");
    r.note(to_string(fp));
    return r.finish();
  });
}

CheckResult z2_x_s4() {
  return guarded("z2xs4", [] {
    Report r("z2xs4");
    const auto list = make_list({Component::Symmetric(3), Component::Counter(2)});
    std::vector<Permutation> flat;
    for (const PermutationCascade& d : all_cascades(list)) flat.push_back(flatten(d));
    r.expect(flat.size() == 48, std::to_string(flat.size()) + " cascades, expected 48");
    const GroupFingerprint cascade_fp = fingerprint(flat);

    // Z2 x S4 acting on {0,1} disjoint union {2,3,4,5}.
    const Component oracle = Component::FromCycles(6, {"(0 1)", "(2 3 4 5)", "(2 3)"});
    const std::vector<Permutation> oracle_elements = enumerate_group(oracle);
    const GroupFingerprint oracle_fp = fingerprint(oracle_elements, oracle.generators());
    r.expect(oracle_fp.order == 48, "oracle has order " + std::to_string(oracle_fp.order));
    r.expect(cascade_fp == oracle_fp,
             "cascade " + to_string(cascade_fp) + " vs Z2 x S4 " + to_string(oracle_fp));
    r.note(to_string(cascade_fp));
    return r.finish();
  });
}

CheckResult inverse_suite(std::uint64_t seed, int cascades) {
  return guarded("inverse-suite", [&] {
    Report r("inverse-suite");
    sample::Rng rng(seed);
    int failures = 0;
    for (int i = 0; i < cascades; ++i) {
      const auto list = sample::component_list(rng, 4);
      const PermutationCascade d = sample::cascade(rng, list);
      const PermutationCascade d_inv = invert(d);
      const PermutationCascade one = identity_cascade(list);
      const bool ok = multiply(d, d_inv) == one && multiply(d_inv, d) == one &&
                      flatten(d_inv) == inverse(flatten(d));
      if (!ok) ++failures;
      r.expect(ok, "case " + std::to_string(i) + " failed");
    }
    r.note(std::to_string(cascades) + " cascades, " + std::to_string(failures) + " failures");
    return r.finish();
  });
}

CheckResult homomorphism_suite(std::uint64_t seed, int pairs, int triples) {
  return guarded("homomorphism-suite", [&] {
    Report r("homomorphism-suite");
    sample::Rng rng(seed + 1);
    for (int i = 0; i < pairs; ++i) {
      const auto list = sample::component_list(rng, 4);
      const PermutationCascade d = sample::cascade(rng, list);
      const PermutationCascade f = sample::cascade(rng, list);
      r.expect(flatten(multiply(d, f)) == compose(flatten(d), flatten(f)),
               "flatten(df) != flatten(d) flatten(f) in pair " + std::to_string(i));
    }
    for (int i = 0; i < triples; ++i) {
      const auto list = sample::component_list(rng, 4);
      const PermutationCascade d = sample::cascade(rng, list);
      const PermutationCascade f = sample::cascade(rng, list);
      const PermutationCascade h = sample::cascade(rng, list);
      r.expect(multiply(multiply(d, f), h) == multiply(d, multiply(f, h)),
               "(df)h != d(fh) in triple " + std::to_string(i));
    }
    // Hierarchy: output coordinates 1..i only see input coordinates 1..i.
    int lists_checked = 0;
    while (lists_checked < 20) {
      const auto list = sample::component_list(rng, 4);
      if (list->total_degree() > 64) continue;
      ++lists_checked;
      const PermutationCascade d = sample::cascade(rng, list);
      const std::uint64_t n = list->total_degree();
      std::vector<State> images;
      for (std::uint64_t s = 0; s < n; ++s) images.push_back(act(d, list->decode(s, list->levels())));
      for (std::size_t level = 1; level <= list->levels(); ++level) {
        // States with equal leading `level` coordinates share s / suffix_size.
        const std::uint64_t suffix_size = n / list->prefix_count(level + 1);
        for (std::uint64_t s = 0; s < n; ++s) {
          const std::uint64_t first = s - s % suffix_size;
          const bool same = std::equal(images[s].begin(), images[s].begin() + level,
                                       images[first].begin());
          r.expect(same, "prefix of length " + std::to_string(level) + " depends on the suffix");
        }
      }
    }
    r.note(std::to_string(pairs) + " pairs, " + std::to_string(triples) + " triples, " +
           std::to_string(lists_checked) + " exhaustive hierarchy lists");
    return r.finish();
  });
}

CheckResult semidirect_oracle() {
  return guarded("semidirect-oracle", [] {
    Report r("semidirect-oracle");
    const SemidirectSpec spec = cyclic_semidirect(2, 3, 2);  // inversion on Z3
    // Every element index of a counter's regular representation is a rotation
    // determined by the image of 0.
    auto exponent_h = [&](Point h) { return spec.top().elements()[h][0]; };
    auto exponent_n = [&](Point n) { return spec.bottom().elements()[n][0]; };
    std::map<std::pair<Point, Point>, std::pair<Point, Point>> by_exponent;
    for (Point h = 0; h < 2; ++h) {
      for (Point n = 0; n < 3; ++n) by_exponent[{exponent_h(h), exponent_n(n)}] = {h, n};
    }
    // (a1, b1)(a2, b2) = (a1 + a2 mod 2, b1 + (-1)^a1 b2 mod 3).
    auto abstract_product = [](std::pair<Point, Point> x, std::pair<Point, Point> y) {
      const Point a = (x.first + y.first) % 2;
      const Point b = (x.second + (x.first == 0 ? y.second : 3 - y.second) % 3) % 3;
      return std::pair<Point, Point>{a, b};
    };
    int compared = 0;
    for (const auto& [x_exp, x] : by_exponent) {
      for (const auto& [y_exp, y] : by_exponent) {
        const PermutationCascade cy = semidirect_element_cascade(spec, y.first, y.second);
        const State moved = act(cy, State{x.first, x.second});
        const auto expected = by_exponent.at(abstract_product(x_exp, y_exp));
        r.expect(moved == State{expected.first, expected.second},
                 "table mismatch at " + format_state(State{x.first, x.second}));
        ++compared;
      }
    }
    const GeneratedGroup group = generated_order(*spec.components(), semidirect_cascades(spec));
    const GroupFingerprint fp = fingerprint(group.elements, group.generators);
    const GroupFingerprint s3{6, Histogram{{1, 1}, {2, 3}, {3, 2}}, false};
    r.expect(compared == 36, std::to_string(compared) + " products compared, expected 36");
    r.expect(fp == s3, "fingerprint " + to_string(fp) + ", expected " + to_string(s3));
    r.note("36 products; " + to_string(fp));
    return r.finish();
  });
}

CheckResult order_associativity(std::uint64_t seed, int lists) {
  return guarded("order-associativity", [&] {
    Report r("order-associativity");
    sample::Rng rng(seed + 2);
    const std::vector<Component> pool{
        Component::Counter(1), Component::Counter(2), Component::Counter(3),
        Component::Symmetric(3), Component::Counter(4), Component::Symmetric(4),
        Component::FromCycles(4, {"(0 1 2 3)", "(1 3)"}), Component::Counter(5)};
    for (int i = 0; i < lists; ++i) {
      std::vector<Component> components;
      for (int k = 0; k < 3; ++k) components.push_back(pool[sample::uniform(rng, 0, pool.size() - 1)]);
      const ComponentList list(std::move(components));
      const AssociativityOrders orders = associativity_orders(list);
      r.expect(orders.holds() && orders.left_grouped == full_cascade_order(list),
               "list " + std::to_string(i) + ": " + str(orders.left_grouped) +
                   " vs " + str(orders.right_grouped));
    }
    r.note(std::to_string(lists) + " lists");
    return r.finish();
  });
}

CheckResult lamplighter_relations(std::uint64_t seed, int states) {
  return guarded("lamplighter", [&] {
    Report r("lamplighter");
    namespace ll = lamplighter;
    sample::Rng rng(seed + 3);
    std::vector<ll::State> sample_states;
    for (int i = 0; i < states; ++i) sample_states.push_back(sample::lamplighter_state(rng));

    r.expect(ll::relation_check(ll::parse_word("LL"), sample_states), "L^2 != 1");
    r.expect(ll::relation_check(ll::parse_word("Tt"), sample_states), "T T^-1 != 1");
    r.expect(ll::relation_check(ll::parse_word("tT"), sample_states), "T^-1 T != 1");
    for (int m = 0; m <= 10; ++m) {
      const ll::Word conjugate = ll::parse_word(std::string(m, 'T') + "L" + std::string(m, 't'));
      for (int i = 0; i < states; ++i) {
        const ll::State fresh = sample::lamplighter_state(rng);
        ll::State expected = fresh;
        const ll::Integer lamp = fresh.position + m;
        if (!expected.lit.erase(lamp)) expected.lit.insert(lamp);
        r.expect(ll::act(conjugate, fresh) == expected,
                 "T^" + std::to_string(m) + " L T^-" + std::to_string(m) + " on " +
                     ll::to_string(fresh));
      }
    }
    r.note("m = 0..10, " + std::to_string(states) + " states each");
    return r.finish();
  });
}

std::string example_session_text() {
  Session session;
  const CascadeExample mod4 = mod4_counter_generator();
  session.add_components("L4", mod4.components);
  session.add_cascade("w4", "L4", mod4.generators.front());
  const CascadeExample q = quaternion_generators();
  session.add_components("LQ", q.components);
  session.add_cascade("qi", "LQ", q.generators[0]);
  session.add_cascade("qj", "LQ", q.generators[1]);
  session.add_components("L48", make_list({Component::Symmetric(3), Component::Counter(2)}));
  session.add_components(
      "L384", make_list({RegularRepresentation(Component::Symmetric(3)).component(),
                         Component::Counter(2)}));
  return format_session(session);
}

CheckResult session_roundtrip() {
  return guarded("session-roundtrip", [] {
    Report r("session-roundtrip");
    const std::string text = example_session_text();
    const Session parsed = parse_session(text);
    const std::string again = format_session(parsed);
    r.expect(again == text, "print(parse(text)) differs from text");
    r.expect(parse_session(again) == parsed, "parse(print(x)) != x");
    r.expect(format_session(parsed) == again, "printing is not deterministic");
    r.note(std::to_string(parsed.order().size()) + " declarations");
    return r.finish();
  });
}

namespace {

struct NamedCheck {
  const char* name;
  CheckResult (*run)();
};

const std::vector<NamedCheck>& registry() {
  static const std::vector<NamedCheck> checks{
      {"order-formula", [] { return order_formula(); }},
      {"mod4", [] { return mod4_counter(); }},
      {"direct-contrast", [] { return direct_product_contrast(); }},
      {"d4-full-cascade", [] { return d4_full_cascade(); }},
      {"quaternion", [] { return quaternion(); }},
      {"z2xs4", [] { return z2_x_s4(); }},
      {"inverse-suite", [] { return inverse_suite(); }},
      {"homomorphism-suite", [] { return homomorphism_suite(); }},
      {"semidirect-oracle", [] { return semidirect_oracle(); }},
      {"order-associativity", [] { return order_associativity(); }},
      {"lamplighter", [] { return lamplighter_relations(); }},
      {"session-roundtrip", [] { return session_roundtrip(); }},
  };
  return checks;
}

}  // namespace

std::vector<std::string> names() {
  std::vector<std::string> result;
  for (const NamedCheck& c : registry()) result.emplace_back(c.name);
  return result;
}

std::vector<CheckResult> run(std::string_view only) {
  std::vector<CheckResult> results;
  for (const NamedCheck& c : registry()) {
    if (only.empty() || only == c.name) results.push_back(c.run());
  }
  if (!only.empty() && results.empty()) {
    throw Error(ErrorCode::kNotFound, "unknown check '" + std::string(only) + "'");
  }
  return results;
}

}  // namespace cascade::checks
