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

#include "cascade/cascade_c.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "cascade/cascade.hpp"
#include "cascade/constructions.hpp"
#include "cascade/error.hpp"
#include "cascade/lamplighter.hpp"
#include "cascade/checks.hpp"
#include "cascade/session.hpp"

struct cas_session {
  cascade::Session session;
};

struct cas_components {
  std::shared_ptr<const cascade::ComponentList> list;
};

struct cas_cascade {
  cascade::PermutationCascade cascade;
};

struct cas_group {
  cascade::GroupFingerprint fingerprint;
};

struct cas_report {
  std::vector<cascade::checks::CheckResult> results;
};

namespace {

thread_local std::string last_error;

cas_status to_status(cascade::ErrorCode code) {
  return static_cast<cas_status>(static_cast<int>(code));
}

// Runs `body`, translating exceptions into a status and cas_last_error().
template <typename Body>
cas_status guard(Body&& body) {
  try {
    body();
    return CAS_OK;
  } catch (const cascade::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CAS_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CAS_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) {
    throw cascade::Error(cascade::ErrorCode::kInvalidArgument,
                         std::string(what) + " must not be NULL");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

// Transfers a vector of cascades into a malloc'ed array of handles.
void export_cascades(std::vector<cascade::PermutationCascade> cascades, cas_cascade*** out,
                     std::size_t* count) {
  auto** array = static_cast<cas_cascade**>(
      std::calloc(cascades.empty() ? 1 : cascades.size(), sizeof(cas_cascade*)));
  if (array == nullptr) throw std::bad_alloc();
  try {
    for (std::size_t i = 0; i < cascades.size(); ++i) {
      array[i] = new cas_cascade{std::move(cascades[i])};
    }
  } catch (...) {
    cas_cascade_array_free(array, cascades.size());
    throw;
  }
  *out = array;
  *count = cascades.size();
}

}  // namespace

extern "C" {

const char* cas_version(void) { return "1.0.0"; }

const char* cas_last_error(void) { return last_error.c_str(); }

void cas_string_free(char* s) { std::free(s); }

void cas_options_default(cas_options* options) {
  if (options != nullptr) options->check_membership = 1;
}

// Sessions -------------------------------------------------------------------

cas_status cas_session_parse(const char* text, size_t length, const cas_options* options,
                             cas_session** out) {
  return guard([&] {
    require(out, "out");
    if (length > 0) require(text, "text");
    cascade::SessionOptions opts;
    if (options != nullptr) opts.check_membership = options->check_membership != 0;
    auto session = cascade::parse_session(std::string_view(text == nullptr ? "" : text, length), opts);
    *out = new cas_session{std::move(session)};
  });
}

void cas_session_free(cas_session* session) { delete session; }

cas_status cas_session_format(const cas_session* session, char** out) {
  return guard([&] {
    require(session, "session");
    require(out, "out");
    *out = copy_string(cascade::format_session(session->session));
  });
}

cas_status cas_session_components(const cas_session* session, const char* name,
                                  cas_components** out) {
  return guard([&] {
    require(session, "session");
    require(name, "name");
    require(out, "out");
    *out = new cas_components{session->session.components(name).list};
  });
}

cas_status cas_session_cascade(const cas_session* session, const char* name, cas_cascade** out) {
  return guard([&] {
    require(session, "session");
    require(name, "name");
    require(out, "out");
    *out = new cas_cascade{session->session.cascade(name).cascade};
  });
}

cas_status cas_session_cascade_list(const cas_session* session, const char* name,
                                    const char** list_name) {
  return guard([&] {
    require(session, "session");
    require(name, "name");
    require(list_name, "list_name");
    *list_name = session->session.cascade(name).list_name.c_str();
  });
}

// Component lists ------------------------------------------------------------

void cas_components_free(cas_components* components) { delete components; }

size_t cas_components_levels(const cas_components* components) {
  return components == nullptr ? 0 : components->list->levels();
}

uint64_t cas_components_total_degree(const cas_components* components) {
  return components == nullptr ? 0 : components->list->total_degree();
}

cas_status cas_components_full_order(const cas_components* components, uint64_t cap,
                                     char** decimal) {
  return guard([&] {
    require(components, "components");
    require(decimal, "decimal");
    *decimal = copy_string(cascade::full_cascade_order(*components->list, cap).str());
  });
}

cas_status cas_components_check_associativity(const cas_components* components, uint64_t cap,
                                              int* holds, char** left, char** right) {
  return guard([&] {
    require(components, "components");
    require(holds, "holds");
    const auto orders = cascade::associativity_orders(*components->list, cap);
    char* l = left != nullptr ? copy_string(orders.left_grouped.str()) : nullptr;
    char* r = nullptr;
    try {
      r = right != nullptr ? copy_string(orders.right_grouped.str()) : nullptr;
    } catch (...) {
      std::free(l);
      throw;
    }
    *holds = orders.holds() ? 1 : 0;
    if (left != nullptr) *left = l;
    if (right != nullptr) *right = r;
  });
}

cas_status cas_components_format(const cas_components* components, const char* name,
                                 char** out) {
  return guard([&] {
    require(components, "components");
    require(name, "name");
    require(out, "out");
    *out = copy_string(cascade::format_components(name, *components->list));
  });
}

cas_status cas_components_identity(const cas_components* components, cas_cascade** out) {
  return guard([&] {
    require(components, "components");
    require(out, "out");
    *out = new cas_cascade{cascade::identity_cascade(components->list)};
  });
}

// Cascades -------------------------------------------------------------------

void cas_cascade_free(cas_cascade* cascade) { delete cascade; }

void cas_cascade_array_free(cas_cascade** cascades, size_t count) {
  if (cascades == nullptr) return;
  for (size_t i = 0; i < count; ++i) delete cascades[i];
  std::free(cascades);
}

cas_status cas_cascade_components(const cas_cascade* cascade, cas_components** out) {
  return guard([&] {
    require(cascade, "cascade");
    require(out, "out");
    *out = new cas_components{cascade->cascade.shared_components()};
  });
}

cas_status cas_cascade_act(const cas_cascade* cascade, const uint32_t* state, size_t levels,
                           uint32_t* out_state) {
  return guard([&] {
    require(cascade, "cascade");
    require(state, "state");
    require(out_state, "out_state");
    const cascade::State result =
        cascade::act(cascade->cascade, std::span<const cascade::Point>(state, levels));
    std::copy(result.begin(), result.end(), out_state);
  });
}

cas_status cas_cascade_multiply(const cas_cascade* d, const cas_cascade* f, cas_cascade** out) {
  return guard([&] {
    require(d, "d");
    require(f, "f");
    require(out, "out");
    *out = new cas_cascade{cascade::multiply(d->cascade, f->cascade)};
  });
}

cas_status cas_cascade_invert(const cas_cascade* d, cas_cascade** out) {
  return guard([&] {
    require(d, "d");
    require(out, "out");
    *out = new cas_cascade{cascade::invert(d->cascade)};
  });
}

int cas_cascade_equal(const cas_cascade* a, const cas_cascade* b) {
  if (a == nullptr || b == nullptr) return a == b;
  return a->cascade == b->cascade ? 1 : 0;
}

cas_status cas_cascade_flatten(const cas_cascade* d, uint64_t cap, char** cycles) {
  return guard([&] {
    require(d, "d");
    require(cycles, "cycles");
    *cycles = copy_string(cascade::format_cycles(cascade::flatten(d->cascade, cap)));
  });
}

cas_status cas_cascade_format(const cas_cascade* d, const char* name, const char* list_name,
                              char** out) {
  return guard([&] {
    require(d, "d");
    require(name, "name");
    require(list_name, "list_name");
    require(out, "out");
    if (!cascade::is_valid_name(name) || !cascade::is_valid_name(list_name)) {
      throw cascade::Error(cascade::ErrorCode::kInvalidArgument, "invalid name");
    }
    *out = copy_string(cascade::format_cascade(d->cascade, name, list_name));
  });
}

// Generated groups -----------------------------------------------------------

cas_status cas_generated_group(const cas_components* components,
                               const cas_cascade* const* generators, size_t count,
                               uint64_t cap, cas_group** out) {
  return guard([&] {
    require(components, "components");
    require(out, "out");
    if (count > 0) require(generators, "generators");
    std::vector<cascade::PermutationCascade> gens;
    for (size_t i = 0; i < count; ++i) {
      require(generators[i], "generator");
      gens.push_back(generators[i]->cascade);
    }
    const auto group = cascade::generated_order(*components->list, gens, cap);
    *out = new cas_group{cascade::fingerprint(group.elements, group.generators)};
  });
}

void cas_group_free(cas_group* group) { delete group; }

uint64_t cas_group_order(const cas_group* group) {
  return group == nullptr ? 0 : group->fingerprint.order;
}

int cas_group_abelian(const cas_group* group) {
  return group != nullptr && group->fingerprint.abelian ? 1 : 0;
}

size_t cas_group_histogram_size(const cas_group* group) {
  return group == nullptr ? 0 : group->fingerprint.element_order_histogram.size();
}

cas_status cas_group_histogram_entry(const cas_group* group, size_t index,
                                     uint64_t* element_order, uint64_t* count) {
  return guard([&] {
    require(group, "group");
    require(element_order, "element_order");
    require(count, "count");
    const auto& histogram = group->fingerprint.element_order_histogram;
    if (index >= histogram.size()) {
      throw cascade::Error(cascade::ErrorCode::kOutOfRange, "histogram index out of range");
    }
    auto it = std::next(histogram.begin(), static_cast<std::ptrdiff_t>(index));
    *element_order = it->first;
    *count = it->second;
  });
}

cas_status cas_group_fingerprint(const cas_group* group, char** out) {
  return guard([&] {
    require(group, "group");
    require(out, "out");
    *out = copy_string(cascade::to_string(group->fingerprint));
  });
}

// Constructions --------------------------------------------------------------

cas_status cas_direct_product(const cas_components* components, cas_cascade*** out,
                              size_t* count) {
  return guard([&] {
    require(components, "components");
    require(out, "out");
    require(count, "count");
    export_cascades(cascade::direct_product_cascades(components->list), out, count);
  });
}

cas_status cas_semidirect_cyclic(uint32_t m, uint32_t n, uint32_t k,
                                 cas_components** components, cas_cascade*** out,
                                 size_t* count) {
  return guard([&] {
    require(components, "components");
    require(out, "out");
    require(count, "count");
    if (m == 0 || n == 0) {
      throw cascade::Error(cascade::ErrorCode::kInvalidArgument, "group orders must be positive");
    }
    const cascade::SemidirectSpec spec = cascade::cyclic_semidirect(m, n, k);
    auto list = std::make_unique<cas_components>(cas_components{spec.components()});
    export_cascades(cascade::semidirect_cascades(spec), out, count);
    *components = list.release();
  });
}

cas_status cas_wreath_check(const cas_components* components, uint64_t cap, int* matches) {
  return guard([&] {
    require(components, "components");
    require(matches, "matches");
    const cascade::ComponentList& list = *components->list;
    if (list.levels() != 2) {
      throw cascade::Error(cascade::ErrorCode::kInvalidArgument,
                           "wreath check needs exactly 2 components");
    }
    *matches = cascade::wreath_full_cascade_check(list.component(1), list.component(2), cap) ? 1 : 0;
  });
}

namespace {

cas_status export_example(const cascade::CascadeExample& example, cas_components** components,
                          cas_cascade*** out, size_t* count) {
  return guard([&] {
    require(components, "components");
    require(out, "out");
    require(count, "count");
    auto list = std::make_unique<cas_components>(cas_components{example.components});
    export_cascades(example.generators, out, count);
    *components = list.release();
  });
}

}  // namespace

cas_status cas_example_mod4(cas_components** components, cas_cascade*** out, size_t* count) {
  return export_example(cascade::mod4_counter_generator(), components, out, count);
}

cas_status cas_example_quaternion(cas_components** components, cas_cascade*** out,
                                  size_t* count) {
  return export_example(cascade::quaternion_generators(), components, out, count);
}

// Lamplighter ----------------------------------------------------------------

cas_status cas_lamplighter_act(const char* word, const char* position, const char* const* lamps,
                               size_t lamp_count, char** out_position, char** out_lamps) {
  namespace ll = cascade::lamplighter;
  return guard([&] {
    require(word, "word");
    require(position, "position");
    require(out_position, "out_position");
    require(out_lamps, "out_lamps");
    if (lamp_count > 0) require(lamps, "lamps");
    auto integer = [](const char* text) {
      const std::string s(text);
      const std::size_t digits_from = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
      if (s.size() == digits_from ||
          s.find_first_not_of("0123456789", digits_from) != std::string::npos) {
        throw cascade::Error(cascade::ErrorCode::kParse, "not an integer: '" + s + "'");
      }
      return ll::Integer(s[0] == '+' ? s.substr(1) : s);
    };
    ll::State state{integer(position), {}};
    for (size_t i = 0; i < lamp_count; ++i) {
      require(lamps[i], "lamp");
      state.lit.insert(integer(lamps[i]));
    }
    const ll::State result = ll::act(ll::parse_word(word), state);
    std::string lit;
    for (const ll::Integer& lamp : result.lit) {
      if (!lit.empty()) lit += ' ';
      lit += lamp.str();
    }
    char* p = copy_string(result.position.str());
    try {
      *out_lamps = copy_string(lit);
    } catch (...) {
      std::free(p);
      throw;
    }
    *out_position = p;
  });
}

// Verification suite ---------------------------------------------------------

cas_status cas_verify(const char* only, cas_report** out) {
  return guard([&] {
    require(out, "out");
    *out = new cas_report{cascade::checks::run(only == nullptr ? "" : only)};
  });
}

void cas_report_free(cas_report* report) { delete report; }

size_t cas_report_size(const cas_report* report) {
  return report == nullptr ? 0 : report->results.size();
}

const char* cas_report_name(const cas_report* report, size_t index) {
  if (report == nullptr || index >= report->results.size()) return nullptr;
  return report->results[index].name.c_str();
}

int cas_report_passed(const cas_report* report, size_t index) {
  if (report == nullptr || index >= report->results.size()) return 0;
  return report->results[index].passed ? 1 : 0;
}

const char* cas_report_detail(const cas_report* report, size_t index) {
  if (report == nullptr || index >= report->results.size()) return nullptr;
  return report->results[index].detail.c_str();
}

cas_status cas_example_session(char** out) {
  return guard([&] {
    require(out, "out");
    *out = copy_string(cascade::checks::example_session_text());
  });
}

}  // extern "C"
