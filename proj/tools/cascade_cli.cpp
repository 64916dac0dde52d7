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

// Command-line front end over the libcascade C API.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cascade/cascade_c.h"
#include "json.hpp"

namespace {

using json = nlohmann::json;

struct Config {
  std::string file;
  std::uint64_t cap = CAS_DEFAULT_CAP;
  bool no_check_membership = false;
  bool json = false;
  std::string only;
};

// Thrown for any failed C call; carries the library's message.
struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(cas_status status) {
  if (status != CAS_OK) throw CliError(cas_last_error());
}

struct StringDeleter {
  void operator()(char* s) const { cas_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

std::string take(char* s) {
  OwnedString owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

template <typename T, void (*Free)(T*)>
struct HandleDeleter {
  void operator()(T* p) const { Free(p); }
};
using Session = std::unique_ptr<cas_session, HandleDeleter<cas_session, cas_session_free>>;
using Components =
    std::unique_ptr<cas_components, HandleDeleter<cas_components, cas_components_free>>;
using Cascade = std::unique_ptr<cas_cascade, HandleDeleter<cas_cascade, cas_cascade_free>>;
using Group = std::unique_ptr<cas_group, HandleDeleter<cas_group, cas_group_free>>;
using Report = std::unique_ptr<cas_report, HandleDeleter<cas_report, cas_report_free>>;

// Takes ownership of a C array of cascade handles.
std::vector<Cascade> adopt(cas_cascade** array, std::size_t count) {
  std::vector<Cascade> result;
  for (std::size_t i = 0; i < count; ++i) result.emplace_back(array[i]);
  std::free(array);
  return result;
}

Session load_session(const Config& config) {
  if (config.file.empty()) throw CliError("--file is required for this command");
  std::ifstream in(config.file, std::ios::binary);
  if (!in) throw CliError("cannot open " + config.file);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  cas_options options;
  cas_options_default(&options);
  options.check_membership = config.no_check_membership ? 0 : 1;
  cas_session* session = nullptr;
  check(cas_session_parse(text.data(), text.size(), &options, &session));
  return Session(session);
}

Components components_of(const Session& session, const std::string& name) {
  cas_components* c = nullptr;
  check(cas_session_components(session.get(), name.c_str(), &c));
  return Components(c);
}

Cascade cascade_of(const Session& session, const std::string& name) {
  cas_cascade* c = nullptr;
  check(cas_session_cascade(session.get(), name.c_str(), &c));
  return Cascade(c);
}

std::string list_of(const Session& session, const std::string& cascade_name) {
  const char* list = nullptr;
  check(cas_session_cascade_list(session.get(), cascade_name.c_str(), &list));
  return list;
}

struct GroupSummary {
  std::uint64_t order;
  bool abelian;
  std::string fingerprint;
  json histogram;
};

GroupSummary summarize(const Components& list, const std::vector<Cascade>& generators,
                       std::uint64_t cap) {
  std::vector<const cas_cascade*> raw;
  for (const Cascade& g : generators) raw.push_back(g.get());
  cas_group* group = nullptr;
  check(cas_generated_group(list.get(), raw.data(), raw.size(), cap, &group));
  Group owned(group);
  GroupSummary summary{cas_group_order(group), cas_group_abelian(group) != 0, {},
                       json::object()};
  char* fp = nullptr;
  check(cas_group_fingerprint(group, &fp));
  summary.fingerprint = take(fp);
  for (std::size_t i = 0; i < cas_group_histogram_size(group); ++i) {
    std::uint64_t order = 0;
    std::uint64_t count = 0;
    check(cas_group_histogram_entry(group, i, &order, &count));
    summary.histogram[std::to_string(order)] = count;
  }
  return summary;
}

std::string format_cascade(const cas_cascade* c, const std::string& name,
                           const std::string& list_name) {
  char* text = nullptr;
  check(cas_cascade_format(c, name.c_str(), list_name.c_str(), &text));
  return take(text);
}

std::string format_components(const Components& list, const std::string& name) {
  char* text = nullptr;
  check(cas_components_format(list.get(), name.c_str(), &text));
  return take(text);
}

std::vector<std::uint32_t> parse_state(const std::string& text) {
  std::vector<std::uint32_t> coords;
  std::string digits;
  auto flush = [&] {
    if (digits.empty()) return;
    if (digits.size() > 9) throw CliError("coordinate too large in '" + text + "'");
    coords.push_back(static_cast<std::uint32_t>(std::stoul(digits)));
    digits.clear();
  };
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      digits += c;
    } else if (c == '(' || c == ')' || c == ',' || c == ' ' || c == '\t') {
      flush();
    } else {
      throw CliError("malformed state '" + text + "'");
    }
  }
  flush();
  if (coords.empty()) throw CliError("empty state '" + text + "'");
  return coords;
}

std::string format_state(const std::vector<std::uint32_t>& coords) {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(coords[i]);
  }
  return out + ")";
}

// Prints declarations followed by a comment line with the generated group, so
// the text output can be saved as a session file.
void emit_generated(const Config& config, const std::string& command,
                    const Components& list, const std::string& list_name,
                    const std::vector<Cascade>& generators,
                    const std::vector<std::string>& names) {
  const GroupSummary group = summarize(list, generators, config.cap);
  if (config.json) {
    json out{{"command", command},
             {"components", list_name},
             {"order", group.order},
             {"abelian", group.abelian},
             {"histogram", group.histogram},
             {"session", json::array()}};
    out["session"].push_back(format_components(list, list_name));
    for (std::size_t i = 0; i < generators.size(); ++i) {
      out["session"].push_back(format_cascade(generators[i].get(), names[i], list_name));
    }
    std::cout << out.dump() << '\n';
    return;
  }
  std::cout << format_components(list, list_name);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    std::cout << '\n' << format_cascade(generators[i].get(), names[i], list_name);
  }
  std::cout << "\n# generated order " << group.order << " " << group.fingerprint << '\n';
}

// Subcommands ----------------------------------------------------------------

int cmd_verify(const Config& config) {
  cas_report* raw = nullptr;
  check(cas_verify(config.only.empty() ? nullptr : config.only.c_str(), &raw));
  Report report(raw);
  bool all_passed = true;
  const std::size_t n = cas_report_size(raw);
  for (std::size_t i = 0; i < n; ++i) {
    const bool passed = cas_report_passed(raw, i) != 0;
    all_passed = all_passed && passed;
    if (config.json) {
      std::cout << json{{"check", cas_report_name(raw, i)},
                        {"passed", passed},
                        {"detail", cas_report_detail(raw, i)}}
                       .dump()
                << '\n';
    } else {
      std::cout << (passed ? "PASS " : "FAIL ") << cas_report_name(raw, i) << ": "
                << cas_report_detail(raw, i) << '\n';
    }
  }
  if (config.json) {
    std::cout << json{{"checks", n}, {"all_passed", all_passed}}.dump() << '\n';
  } else {
    std::cout << (all_passed ? "all " + std::to_string(n) + " checks passed"
                             : "some checks FAILED")
              << '\n';
  }
  return all_passed ? 0 : 1;
}

int cmd_print(const Config& config) {
  const Session session = load_session(config);
  char* text = nullptr;
  check(cas_session_format(session.get(), &text));
  const std::string out = take(text);
  if (config.json) {
    std::cout << json{{"command", "print"}, {"session", out}}.dump() << '\n';
  } else {
    std::cout << out;
  }
  return 0;
}

int cmd_full_order(const Config& config, const std::string& list_name) {
  const Session session = load_session(config);
  const Components list = components_of(session, list_name);
  char* order = nullptr;
  check(cas_components_full_order(list.get(), config.cap, &order));
  const std::string value = take(order);
  if (config.json) {
    std::cout << json{{"command", "full-order"}, {"components", list_name}, {"order", value}}.dump()
              << '\n';
  } else {
    std::cout << value << '\n';
  }
  return 0;
}

int cmd_assoc(const Config& config, const std::string& list_name) {
  const Session session = load_session(config);
  const Components list = components_of(session, list_name);
  int holds = 0;
  char* left = nullptr;
  char* right = nullptr;
  check(cas_components_check_associativity(list.get(), config.cap, &holds, &left, &right));
  const std::string l = take(left);
  const std::string r = take(right);
  if (config.json) {
    std::cout << json{{"command", "assoc-check"}, {"components", list_name},
                      {"holds", holds != 0}, {"left", l}, {"right", r}}
                     .dump()
              << '\n';
  } else {
    std::cout << (holds ? "true" : "false") << ' ' << l << ' ' << r << '\n';
  }
  return holds ? 0 : 1;
}

int cmd_order(const Config& config, const std::string& list_name,
              const std::vector<std::string>& cascade_names) {
  const Session session = load_session(config);
  const Components list = components_of(session, list_name);
  std::vector<Cascade> generators;
  for (const std::string& name : cascade_names) generators.push_back(cascade_of(session, name));
  const GroupSummary group = summarize(list, generators, config.cap);
  if (config.json) {
    std::cout << json{{"command", "order"},       {"components", list_name},
                      {"generators", cascade_names}, {"order", group.order},
                      {"abelian", group.abelian},  {"histogram", group.histogram}}
                     .dump()
              << '\n';
  } else {
    std::cout << group.order << ' ' << group.fingerprint << '\n';
  }
  return 0;
}

int cmd_act(const Config& config, const std::string& name, const std::string& state_text) {
  const Session session = load_session(config);
  const Cascade c = cascade_of(session, name);
  const std::vector<std::uint32_t> state = parse_state(state_text);
  std::vector<std::uint32_t> result(state.size());
  check(cas_cascade_act(c.get(), state.data(), state.size(), result.data()));
  if (config.json) {
    std::cout << json{{"command", "act"}, {"cascade", name}, {"state", state}, {"result", result}}
                     .dump()
              << '\n';
  } else {
    std::cout << format_state(result) << '\n';
  }
  return 0;
}

void emit_cascade(const Config& config, const std::string& command, const cas_cascade* c,
                  const std::string& name, const std::string& list_name) {
  const std::string text = format_cascade(c, name, list_name);
  if (config.json) {
    std::cout << json{{"command", command}, {"name", name}, {"cascade", text}}.dump() << '\n';
  } else {
    std::cout << text;
  }
}

int cmd_mul(const Config& config, const std::string& a, const std::string& b,
            std::string as) {
  const Session session = load_session(config);
  const Cascade d = cascade_of(session, a);
  const Cascade f = cascade_of(session, b);
  cas_cascade* product = nullptr;
  check(cas_cascade_multiply(d.get(), f.get(), &product));
  const Cascade owned(product);
  emit_cascade(config, "mul", product, as.empty() ? a + "_" + b : as, list_of(session, a));
  return 0;
}

int cmd_inv(const Config& config, const std::string& a, std::string as) {
  const Session session = load_session(config);
  const Cascade d = cascade_of(session, a);
  cas_cascade* inverse = nullptr;
  check(cas_cascade_invert(d.get(), &inverse));
  const Cascade owned(inverse);
  emit_cascade(config, "inv", inverse, as.empty() ? a + "inv" : as, list_of(session, a));
  return 0;
}

int cmd_flatten(const Config& config, const std::string& a) {
  const Session session = load_session(config);
  const Cascade d = cascade_of(session, a);
  char* cycles = nullptr;
  check(cas_cascade_flatten(d.get(), config.cap, &cycles));
  const std::string text = take(cycles);
  if (config.json) {
    std::cout << json{{"command", "flatten"}, {"cascade", a}, {"permutation", text}}.dump()
              << '\n';
  } else {
    std::cout << text << '\n';
  }
  return 0;
}

int cmd_direct(const Config& config, const std::string& list_name) {
  const Session session = load_session(config);
  const Components list = components_of(session, list_name);
  cas_cascade** array = nullptr;
  std::size_t count = 0;
  check(cas_direct_product(list.get(), &array, &count));
  const std::vector<Cascade> generators = adopt(array, count);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) names.push_back("g" + std::to_string(i + 1));
  emit_generated(config, "direct", list, list_name, generators, names);
  return 0;
}

int cmd_semidirect(const Config& config, std::uint32_t m, std::uint32_t n, std::uint32_t k) {
  cas_components* raw_list = nullptr;
  cas_cascade** array = nullptr;
  std::size_t count = 0;
  check(cas_semidirect_cyclic(m, n, k, &raw_list, &array, &count));
  const Components list(raw_list);
  const std::vector<Cascade> generators = adopt(array, count);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) names.push_back("s" + std::to_string(i + 1));
  emit_generated(config, "semidirect", list, "LS", generators, names);
  return 0;
}

int cmd_wreath_check(const Config& config, const std::string& list_name) {
  const Session session = load_session(config);
  const Components list = components_of(session, list_name);
  int matches = 0;
  check(cas_wreath_check(list.get(), config.cap, &matches));
  char* order = nullptr;
  check(cas_components_full_order(list.get(), config.cap, &order));
  const std::string value = take(order);
  if (config.json) {
    std::cout << json{{"command", "wreath-check"}, {"components", list_name},
                      {"matches", matches != 0}, {"order", value}}
                     .dump()
              << '\n';
  } else {
    std::cout << (matches ? "true" : "false") << ' ' << value << '\n';
  }
  return matches ? 0 : 1;
}

int cmd_example(const Config& config, const std::string& which) {
  cas_components* raw_list = nullptr;
  cas_cascade** array = nullptr;
  std::size_t count = 0;
  std::string list_name;
  std::vector<std::string> names;
  if (which == "mod4") {
    check(cas_example_mod4(&raw_list, &array, &count));
    list_name = "L4";
    names = {"w4"};
  } else if (which == "quaternion") {
    check(cas_example_quaternion(&raw_list, &array, &count));
    list_name = "LQ";
    names = {"qi", "qj"};
  } else {
    throw CliError("unknown example '" + which + "' (expected mod4 or quaternion)");
  }
  const Components list(raw_list);
  const std::vector<Cascade> generators = adopt(array, count);
  emit_generated(config, "example " + which, list, list_name, generators, names);
  return 0;
}

int cmd_lamplighter(const Config& config, const std::string& word, const std::string& position,
                    const std::vector<std::string>& lamps) {
  std::vector<const char*> raw;
  for (const std::string& l : lamps) raw.push_back(l.c_str());
  char* out_position = nullptr;
  char* out_lamps = nullptr;
  check(cas_lamplighter_act(word.c_str(), position.c_str(), raw.data(), raw.size(),
                            &out_position, &out_lamps));
  const std::string k = take(out_position);
  const std::string lit = take(out_lamps);
  if (config.json) {
    json lamp_list = json::array();
    std::istringstream in(lit);
    for (std::string lamp; in >> lamp;) lamp_list.push_back(lamp);
    std::cout << json{{"command", "lamplighter act"}, {"position", k}, {"lamps", lamp_list}}.dump()
              << '\n';
  } else {
    std::string joined;
    std::istringstream in(lit);
    for (std::string lamp; in >> lamp;) joined += (joined.empty() ? "" : ", ") + lamp;
    std::cout << '(' << k << ", [" << joined << "])\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cascade products of permutation groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Config config;
  app.add_option("--file", config.file, "Session file with component lists and cascades");
  app.add_option("--cap", config.cap, "Maximum group size / flattened degree")
      ->check(CLI::PositiveNumber);
  app.add_flag("--no-check-membership", config.no_check_membership,
               "Skip the check that dependency values lie in their component group");
  app.add_flag("--json", config.json, "Emit JSON lines instead of text");

  std::function<int()> run;
  std::string name_a;
  std::string name_b;
  std::string as;
  std::string text;
  std::vector<std::string> rest;
  std::uint32_t m = 0;
  std::uint32_t n = 0;
  std::uint32_t k = 0;

  auto* verify = app.add_subcommand("verify-paper", "Run the built-in example verification suite");
  verify->add_option("--only", config.only, "Run a single check by name");
  verify->callback([&] { run = [&] { return cmd_verify(config); }; });

  auto* print = app.add_subcommand("print", "Print the session file canonically");
  print->callback([&] { run = [&] { return cmd_print(config); }; });

  auto* full = app.add_subcommand("full-order", "Order of the full cascade product");
  full->add_option("list", name_a)->required();
  full->callback([&] { run = [&] { return cmd_full_order(config, name_a); }; });

  auto* assoc = app.add_subcommand("assoc-check", "Compare both groupings of a 3-level list");
  assoc->add_option("list", name_a)->required();
  assoc->callback([&] { run = [&] { return cmd_assoc(config, name_a); }; });

  auto* order = app.add_subcommand("order", "Order and fingerprint of <cascades>");
  order->add_option("list", name_a)->required();
  order->add_option("cascades", rest);
  order->callback([&] { run = [&] { return cmd_order(config, name_a, rest); }; });

  auto* act = app.add_subcommand("act", "Apply a cascade to a state such as \"(1,0)\"");
  act->add_option("cascade", name_a)->required();
  act->add_option("state", text)->required();
  act->callback([&] { run = [&] { return cmd_act(config, name_a, text); }; });

  auto* mul = app.add_subcommand("mul", "Product of two cascades (first, then second)");
  mul->add_option("a", name_a)->required();
  mul->add_option("b", name_b)->required();
  mul->add_option("--as", as, "Name of the printed cascade");
  mul->callback([&] { run = [&] { return cmd_mul(config, name_a, name_b, as); }; });

  auto* inv = app.add_subcommand("inv", "Inverse of a cascade");
  inv->add_option("cascade", name_a)->required();
  inv->add_option("--as", as, "Name of the printed cascade");
  inv->callback([&] { run = [&] { return cmd_inv(config, name_a, as); }; });

  auto* flat = app.add_subcommand("flatten", "Cascade as a permutation of encoded states");
  flat->add_option("cascade", name_a)->required();
  flat->callback([&] { run = [&] { return cmd_flatten(config, name_a); }; });

  auto* direct = app.add_subcommand("direct", "Direct product generators over a list");
  direct->add_option("list", name_a)->required();
  direct->callback([&] { run = [&] { return cmd_direct(config, name_a); }; });

  auto* semi = app.add_subcommand("semidirect", "Z_m x| Z_n, generator acting as x -> x^k");
  semi->add_option("m", m)->required()->check(CLI::PositiveNumber);
  semi->add_option("n", n)->required()->check(CLI::PositiveNumber);
  semi->add_option("k", k)->required();
  semi->callback([&] { run = [&] { return cmd_semidirect(config, m, n, k); }; });

  auto* wreath = app.add_subcommand("wreath-check", "Full cascade vs. wreath product on a 2-level list");
  wreath->add_option("list", name_a)->required();
  wreath->callback([&] { run = [&] { return cmd_wreath_check(config, name_a); }; });

  auto* example = app.add_subcommand("example", "Print a built-in example: mod4 or quaternion");
  example->add_option("name", name_a)->required();
  example->callback([&] { run = [&] { return cmd_example(config, name_a); }; });

  auto* lamp = app.add_subcommand("lamplighter", "Lamplighter group words");
  lamp->require_subcommand(1);
  auto* lamp_act = lamp->add_subcommand("act", "Apply a word over l L t T to (k, lamps)");
  lamp_act->add_option("word", text)->required();
  lamp_act->add_option("position", name_a)->required();
  lamp_act->add_option("lamps", rest);
  lamp_act->callback([&] { run = [&] { return cmd_lamplighter(config, text, name_a, rest); }; });

  CLI11_PARSE(app, argc, argv);

  try {
    return run ? run() : 2;
  } catch (const std::exception& e) {
    if (config.json) std::cout << json{{"error", e.what()}}.dump() << '\n';
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
