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

// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all
// pass. The last criterion drives the command-line tool on the shipped
// session files.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cascade/checks.hpp"
#include "cascade/session.hpp"

namespace {

namespace checks = cascade::checks;

struct Outcome {
  bool passed = true;
  std::string detail;
};

struct Command {
  int status = -1;
  std::string output;
};

Command run(const std::string& args) {
  const std::string line = std::string("\"") + CASCADE_CLI_PATH + "\" " + args + " 2>&1";
  Command result;
  FILE* pipe = popen(line.c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buffer;
  for (std::size_t n; (n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0;) {
    result.output.append(buffer.data(), n);
  }
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Outcome cli_round_trip() {
  Outcome o;
  const auto fail = [&](const std::string& why) {
    if (o.passed) o.detail = why;
    o.passed = false;
  };
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(CASCADE_SESSIONS_DIR)) {
    if (entry.path().extension() == ".cas") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) fail("no session files in " + std::string(CASCADE_SESSIONS_DIR));

  for (const auto& file : files) {
    const std::string name = file.filename().string();
    try {
      const cascade::Session parsed = cascade::parse_session(read_file(file));
      const std::string printed = cascade::format_session(parsed);
      const cascade::Session reparsed = cascade::parse_session(printed);
      if (!(reparsed == parsed)) fail(name + ": parse(print(x)) != x");
      if (cascade::format_session(reparsed) != printed) fail(name + ": printing not stable");
      const Command first = run("--file \"" + file.string() + "\" print");
      const Command second = run("--file \"" + file.string() + "\" print");
      if (first.status != 0) fail(name + ": print exited " + std::to_string(first.status));
      if (first.output != printed) fail(name + ": CLI print differs from library print");
      if (first.output != second.output) fail(name + ": print output differs between runs");
    } catch (const std::exception& e) {
      fail(name + ": " + e.what());
    }
  }

  const Command verify1 = run("verify-paper");
  const Command verify2 = run("verify-paper");
  if (verify1.status != 0) fail("verify-paper exited " + std::to_string(verify1.status));
  if (verify1.output != verify2.output) fail("verify-paper output differs between runs");
  const Command json1 = run("--json verify-paper");
  const Command json2 = run("--json verify-paper");
  if (json1.status != 0 || json1.output != json2.output) fail("--json verify-paper unstable");

  const std::string ex = std::string(CASCADE_SESSIONS_DIR) + "/ex.cas";
  const Command order = run("--file \"" + ex + "\" full-order L48");
  if (order.output != "48\n") fail("full-order L48 printed '" + order.output + "'");
  const Command act = run("--file \"" + ex + "\" act w4 \"(1,1)\"");
  if (act.output != "(0,0)\n") fail("act w4 (1,1) printed '" + act.output + "'");

  if (o.passed) o.detail = std::to_string(files.size()) + " session files, 2 runs each";
  return o;
}

Outcome from(const checks::CheckResult& r) { return {r.passed, r.detail}; }

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    Outcome (*evaluate)();
  };
  const std::vector<Criterion> criteria{
      {"1 order formula 48/384/128", [] { return from(checks::order_formula()); }},
      {"2 mod-4 counter is Z4", [] { return from(checks::mod4_counter()); }},
      {"3 direct product of counters is Klein four",
       [] { return from(checks::direct_product_contrast()); }},
      {"4 full cascade on two counters is D4 and matches the wreath product",
       [] { return from(checks::d4_full_cascade()); }},
      {"5 quaternion generators", [] { return from(checks::quaternion()); }},
      {"6 full cascade on (3,S3),(2,Z2) matches Z2 x S4", [] { return from(checks::z2_x_s4()); }},
      {"7 inverse property suite", [] { return from(checks::inverse_suite()); }},
      {"8 homomorphism and hierarchy suite", [] { return from(checks::homomorphism_suite()); }},
      {"9 semidirect product oracle", [] { return from(checks::semidirect_oracle()); }},
      {"10 order associativity identity", [] { return from(checks::order_associativity()); }},
      {"11 lamplighter relations", [] { return from(checks::lamplighter_relations()); }},
      {"12 CLI round trip and determinism", cli_round_trip},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.evaluate();
    } catch (const std::exception& e) {
      o = {false, e.what()};
    }
    if (!o.passed) ++failures;
    std::cout << (o.passed ? "PASS " : "FAIL ") << c.label << ": " << o.detail << '\n';
  }
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criteria failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}
