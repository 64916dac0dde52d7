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

#include "cascade/session.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

#include "cascade/error.hpp"

namespace cascade {

// Session --------------------------------------------------------------------

void Session::add_components(std::string name, std::shared_ptr<const ComponentList> list) {
  for (const auto& c : components_) {
    if (c.name == name) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate component list '" + name + "'");
    }
  }
  order_.emplace_back(Kind::kComponents, components_.size());
  components_.push_back({std::move(name), std::move(list)});
}

void Session::add_cascade(std::string name, std::string list_name, PermutationCascade cascade) {
  for (const auto& c : cascades_) {
    if (c.name == name) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate cascade '" + name + "'");
    }
  }
  if (cascade.components() != *components(list_name).list) {
    throw Error(ErrorCode::kInvalidArgument,
                "cascade '" + name + "' is not over component list '" + list_name + "'");
  }
  order_.emplace_back(Kind::kCascade, cascades_.size());
  cascades_.push_back({std::move(name), std::move(list_name), std::move(cascade)});
}

const Session::NamedComponents& Session::components(std::string_view name) const {
  for (const auto& c : components_) {
    if (c.name == name) return c;
  }
  throw Error(ErrorCode::kNotFound, "unknown component list '" + std::string(name) + "'");
}

const Session::NamedCascade& Session::cascade(std::string_view name) const {
  for (const auto& c : cascades_) {
    if (c.name == name) return c;
  }
  throw Error(ErrorCode::kNotFound, "unknown cascade '" + std::string(name) + "'");
}

bool operator==(const Session& a, const Session& b) {
  if (a.order_ != b.order_ || a.components_.size() != b.components_.size() ||
      a.cascades_.size() != b.cascades_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.components_.size(); ++i) {
    if (a.components_[i].name != b.components_[i].name ||
        *a.components_[i].list != *b.components_[i].list) {
      return false;
    }
  }
  for (std::size_t i = 0; i < a.cascades_.size(); ++i) {
    if (a.cascades_[i].name != b.cascades_[i].name ||
        a.cascades_[i].list_name != b.cascades_[i].list_name ||
        !(a.cascades_[i].cascade == b.cascades_[i].cascade)) {
      return false;
    }
  }
  return true;
}

bool is_valid_name(std::string_view name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

// Parsing --------------------------------------------------------------------

namespace {

// Cursor over one line; every error carries the line number.
class LineCursor {
 public:
  LineCursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  [[noreturn]] void fail(const std::string& message, std::string_view token = {}) const {
    std::string what = "line " + std::to_string(line_) + ": " + message;
    if (!token.empty()) what += " near '" + std::string(token) + "'";
    throw Error(ErrorCode::kParse, what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  std::string_view rest() {
    skip_space();
    return text_.substr(pos_);
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'", rest().substr(0, 16));
    ++pos_;
  }
  void expect_end() {
    if (!at_end()) fail("unexpected trailing text", rest());
  }

  std::string_view word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  std::string name() {
    std::string_view w = word();
    if (!is_valid_name(w)) fail("expected a name", w.empty() ? rest().substr(0, 16) : w);
    return std::string(w);
  }

  std::uint64_t integer() {
    std::string_view w = word();
    if (w.empty() || !std::all_of(w.begin(), w.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      fail("expected an integer", w.empty() ? rest().substr(0, 16) : w);
    }
    if (w.size() > 18) fail("integer too large", w);
    return std::stoull(std::string(w));
  }

  // One permutation in cycle notation: a run of parenthesized groups.
  Permutation permutation(std::size_t degree) {
    skip_space();
    const std::size_t start = pos_;
    if (peek() != '(') fail("expected a permutation", rest().substr(0, 16));
    while (peek() == '(') {
      const std::size_t close = text_.find(')', pos_);
      if (close == std::string_view::npos) fail("missing ')'", text_.substr(pos_));
      pos_ = close + 1;
    }
    const std::string_view token = text_.substr(start, pos_ - start);
    try {
      return parse_cycles(token, degree);
    } catch (const Error& e) {
      fail(e.what(), token);
    }
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::string_view strip_comment(std::string_view line) {
  const std::size_t hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

std::shared_ptr<const ComponentList> parse_component_list(LineCursor& cur) {
  cur.expect('[');
  std::vector<Component> components;
  while (true) {
    const std::uint64_t degree = cur.integer();
    if (degree == 0) cur.fail("component degree must be positive");
    cur.expect(':');
    std::vector<Permutation> generators{cur.permutation(degree)};
    while (cur.peek() == ',') {
      cur.expect(',');
      generators.push_back(cur.permutation(degree));
    }
    components.emplace_back(degree, std::move(generators));
    if (cur.peek() == ';') {
      cur.expect(';');
      continue;
    }
    cur.expect(']');
    break;
  }
  cur.expect_end();
  try {
    return std::make_shared<const ComponentList>(std::move(components));
  } catch (const Error& e) {
    cur.fail(e.what());
  }
}

// Entries collected for one level of a cascade block.
struct LevelEntries {
  std::optional<Permutation> fallback;
  std::map<std::uint64_t, Permutation> entries;
};

void parse_level_entry(LineCursor& cur, const ComponentList& list,
                       std::vector<LevelEntries>& levels) {
  const std::uint64_t level = cur.integer();
  if (level < 1 || level > list.levels()) {
    cur.fail("level " + std::to_string(level) + " out of range (list has " +
             std::to_string(list.levels()) + " levels)");
  }
  cur.expect(':');
  LevelEntries& slot = levels[level - 1];
  if (cur.peek() == '[') {
    cur.expect('[');
    State prefix;
    while (cur.peek() != ']') {
      if (cur.at_end()) cur.fail("missing ']'");
      const std::uint64_t x = cur.integer();
      const std::size_t at = prefix.size() + 1;
      if (at >= level) {
        cur.fail("prefix for level " + std::to_string(level) + " must have " +
                 std::to_string(level - 1) + " coordinates");
      }
      if (x >= list.degree(at)) {
        cur.fail("point " + std::to_string(x) + " out of range at level " + std::to_string(at));
      }
      prefix.push_back(static_cast<Point>(x));
    }
    cur.expect(']');
    if (prefix.size() != level - 1) {
      cur.fail("prefix for level " + std::to_string(level) + " must have " +
               std::to_string(level - 1) + " coordinates");
    }
    cur.expect('-');
    cur.expect('>');
    Permutation value = cur.permutation(list.degree(level));
    cur.expect_end();
    const std::uint64_t key = list.encode(prefix);
    if (!slot.entries.emplace(key, std::move(value)).second) {
      cur.fail("duplicate prefix " + format_state(prefix) + " at level " + std::to_string(level));
    }
  } else {
    Permutation value = cur.permutation(list.degree(level));
    cur.expect_end();
    if (level == 1) {
      // The only prefix of level 1 is the empty one.
      if (!slot.entries.emplace(0, std::move(value)).second) {
        cur.fail("duplicate entry for level 1");
      }
    } else {
      if (slot.fallback) cur.fail("duplicate default for level " + std::to_string(level));
      slot.fallback = std::move(value);
    }
  }
}

}  // namespace

Session parse_session(std::string_view text, const SessionOptions& options) {
  Session session;

  struct OpenBlock {
    std::string name;
    std::string list_name;
    std::shared_ptr<const ComponentList> list;
    std::vector<LevelEntries> levels;
    std::size_t line;
  };
  std::optional<OpenBlock> block;

  std::size_t line_number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_number;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

    LineCursor cur(strip_comment(raw), line_number);
    if (cur.at_end()) {
      if (end == text.size()) break;
      continue;
    }
    const std::string_view keyword = cur.word();

    if (block) {
      if (keyword == "level") {
        parse_level_entry(cur, *block->list, block->levels);
      } else if (keyword == "end") {
        cur.expect_end();
        try {
          std::vector<DependencyFunction> functions;
          for (std::size_t i = 0; i < block->levels.size(); ++i) {
            functions.push_back(DependencyFunction::FromEntries(
                *block->list, i + 1, std::move(block->levels[i].entries),
                std::move(block->levels[i].fallback)));
          }
          session.add_cascade(block->name, block->list_name,
                              PermutationCascade(block->list, std::move(functions),
                                                 options.check_membership));
        } catch (const Error& e) {
          LineCursor(raw, block->line).fail(e.what());
        }
        block.reset();
      } else {
        cur.fail("expected 'level' or 'end'", keyword.empty() ? cur.rest() : keyword);
      }
    } else if (keyword == "components") {
      std::string name = cur.name();
      cur.expect('=');
      auto list = parse_component_list(cur);
      try {
        session.add_components(std::move(name), std::move(list));
      } catch (const Error& e) {
        cur.fail(e.what());
      }
    } else if (keyword == "cascade") {
      OpenBlock open;
      open.name = cur.name();
      if (cur.word() != "over") cur.fail("expected 'over'", cur.rest());
      open.list_name = cur.name();
      cur.expect_end();
      try {
        open.list = session.components(open.list_name).list;
      } catch (const Error& e) {
        cur.fail(e.what(), open.list_name);
      }
      open.levels.resize(open.list->levels());
      open.line = line_number;
      block = std::move(open);
    } else {
      cur.fail("expected 'components' or 'cascade'", keyword.empty() ? cur.rest() : keyword);
    }
    if (end == text.size()) break;
  }
  if (block) {
    LineCursor(text, line_number).fail("cascade '" + block->name + "' is missing 'end'");
  }
  return session;
}

// Printing -------------------------------------------------------------------

std::string format_components(std::string_view name, const ComponentList& list) {
  std::string out = "components " + std::string(name) + " = [";
  for (std::size_t level = 1; level <= list.levels(); ++level) {
    const Component& c = list.component(level);
    if (level > 1) out += "; ";
    out += std::to_string(c.degree()) + ": ";
    for (std::size_t i = 0; i < c.generators().size(); ++i) {
      if (i > 0) out += ", ";
      out += format_cycles(c.generators()[i]);
    }
  }
  return out + "]\n";
}

std::string format_cascade(const PermutationCascade& d, std::string_view name,
                           std::string_view list_name) {
  const ComponentList& list = d.components();
  std::string out = "cascade " + std::string(name) + " over " + std::string(list_name) + "\n";
  for (std::size_t level = 1; level <= list.levels(); ++level) {
    const DependencyFunction& fn = d.level(level);
    const std::string head = "  level " + std::to_string(level) + ": ";
    if (fn.constant()) {
      out += head + format_cycles(*fn.constant()) + "\n";
      continue;
    }
    for (const auto& [key, value] : fn.entries()) {
      const State prefix = list.decode(key, level - 1);
      std::string coords;
      for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (i > 0) coords += ' ';
        coords += std::to_string(prefix[i]);
      }
      out += head + "[" + coords + "] -> " + format_cycles(value) + "\n";
    }
  }
  return out + "end\n";
}

std::string format_session(const Session& session) {
  std::string out;
  for (const auto& [kind, index] : session.order()) {
    if (!out.empty()) out += "\n";
    if (kind == Session::Kind::kComponents) {
      const auto& c = session.all_components()[index];
      out += format_components(c.name, *c.list);
    } else {
      const auto& c = session.all_cascades()[index];
      out += format_cascade(c.cascade, c.name, c.list_name);
    }
  }
  return out;
}

std::string format_state(std::span<const Point> coords) {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(coords[i]);
  }
  return out + ")";
}

State parse_state(std::string_view text) {
  std::string cleaned(text);
  const bool open = !cleaned.empty() && cleaned.find('(') != std::string::npos;
  const bool close = cleaned.find(')') != std::string::npos;
  if (open != close) throw Error(ErrorCode::kParse, "unbalanced parentheses in state");
  State coords;
  std::size_t pos = 0;
  auto is_separator = [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '(' || c == ')';
  };
  while (pos < cleaned.size()) {
    if (is_separator(cleaned[pos])) {
      ++pos;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(cleaned[pos]))) {
      throw Error(ErrorCode::kParse, "malformed state '" + std::string(text) + "'");
    }
    std::uint64_t value = 0;
    while (pos < cleaned.size() && std::isdigit(static_cast<unsigned char>(cleaned[pos]))) {
      value = value * 10 + static_cast<std::uint64_t>(cleaned[pos] - '0');
      if (value > 0xFFFFFFFFULL) throw Error(ErrorCode::kParse, "coordinate too large");
      ++pos;
    }
    coords.push_back(static_cast<Point>(value));
  }
  if (coords.empty()) throw Error(ErrorCode::kParse, "empty state");
  return coords;
}

}  // namespace cascade
