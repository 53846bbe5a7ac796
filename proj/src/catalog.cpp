// Copyright 2026 The uninorm Authors
//
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

#include "uninorm/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <variant>
#include <vector>

namespace uninorm {

std::string_view to_string(Family family) noexcept {
  switch (family) {
    case Family::min: return "min";
    case Family::max: return "max";
    case Family::lukasiewicz_tnorm: return "lukasiewicz-tnorm";
    case Family::lukasiewicz_tconorm: return "lukasiewicz-tconorm";
    case Family::drastic_tnorm: return "drastic-tnorm";
    case Family::drastic_tconorm: return "drastic-tconorm";
    case Family::umin_idempotent: return "umin-idempotent";
    case Family::umax_idempotent: return "umax-idempotent";
    case Family::umin_of: return "umin-of";
    case Family::umax_of: return "umax-of";
  }
  return "unknown";
}

namespace {

bool is_tnorm_family(Family f) {
  return f == Family::min || f == Family::lukasiewicz_tnorm || f == Family::drastic_tnorm;
}
bool is_tconorm_family(Family f) {
  return f == Family::max || f == Family::lukasiewicz_tconorm || f == Family::drastic_tconorm;
}
bool is_compositor(Family f) { return f == Family::umin_of || f == Family::umax_of; }

Uninorm checked(OpTable table, Index e, Family family) {
  try {
    return Uninorm(std::move(table), e);
  } catch (const InvalidUninorm& err) {
    throw Error(Errc::internal, std::string(to_string(family)) + " produced an invalid table: " + err.what());
  }
}

template <class F>
Uninorm build(int n, Index e, Family family, F&& f) {
  return checked(OpTable::from_function(ChainScale(n), std::forward<F>(f)), e, family);
}

// Fills [0,e]^2 from t, [e,n]^2 from s, and the rest from `fill`.
template <class Fill>
Uninorm assemble(const Uninorm& t, Index e, const Uninorm& s, Family family, Fill&& fill) {
  const int n = t.n() + s.n();
  return build(n, e, family, [&](Index x, Index y) {
    if (x <= e && y <= e) return t(x, y);
    if (x >= e && y >= e) return s(x - e, y - e) + e;
    return fill(x, y);
  });
}

}  // namespace

Uninorm make(const FamilySpec& spec) {
  const int n = spec.scale.n();
  const Index e = spec.e;
  const auto name = std::string(to_string(spec.family));
  if (!is_compositor(spec.family) && (spec.tnorm || spec.tconorm)) {
    throw Error(Errc::argument, name + " takes no T/S sub-operations");
  }
  if (is_tnorm_family(spec.family) && e != n) {
    throw Error(Errc::argument, name + " is a t-norm and needs e = n = " + std::to_string(n));
  }
  if (is_tconorm_family(spec.family) && e != 0) throw Error(Errc::argument, name + " is a t-conorm and needs e = 0");
  if (!is_tnorm_family(spec.family) && !is_tconorm_family(spec.family) && (e <= 0 || e >= n)) {
    throw Error(Errc::argument, name + " needs 0 < e < n, got e = " + std::to_string(e) + ", n = " + std::to_string(n));
  }

  switch (spec.family) {
    case Family::min: return catalog::min_tnorm(n);
    case Family::max: return catalog::max_tconorm(n);
    case Family::lukasiewicz_tnorm: return catalog::lukasiewicz_tnorm(n);
    case Family::lukasiewicz_tconorm: return catalog::lukasiewicz_tconorm(n);
    case Family::drastic_tnorm: return catalog::drastic_tnorm(n);
    case Family::drastic_tconorm: return catalog::drastic_tconorm(n);
    case Family::umin_idempotent: return catalog::idem_min(n, e);
    case Family::umax_idempotent: return catalog::idem_max(n, e);
    case Family::umin_of:
    case Family::umax_of: {
      if (!spec.tnorm || !spec.tconorm) throw Error(Errc::argument, name + " needs both T and S");
      const Uninorm& t = *spec.tnorm;
      const Uninorm& s = *spec.tconorm;
      if (t.n() != e || !t.is_tnorm()) {
        throw Error(Errc::argument, name + ": T must be a t-norm on L_" + std::to_string(e) + ", got neutral " +
                                        std::to_string(t.neutral()) + " on L_" + std::to_string(t.n()));
      }
      if (s.n() != n - e || !s.is_tconorm()) {
        throw Error(Errc::argument, name + ": S must be a t-conorm on L_" + std::to_string(n - e) +
                                        ", got neutral " + std::to_string(s.neutral()) + " on L_" +
                                        std::to_string(s.n()));
      }
      return spec.family == Family::umin_of ? catalog::umin_of(t, e, s) : catalog::umax_of(t, e, s);
    }
  }
  throw Error(Errc::internal, "unhandled family");
}

namespace catalog {

Uninorm min_tnorm(int n) {
  return build(n, n, Family::min, [](Index x, Index y) { return std::min(x, y); });
}

Uninorm max_tconorm(int n) {
  return build(n, 0, Family::max, [](Index x, Index y) { return std::max(x, y); });
}

Uninorm lukasiewicz_tnorm(int n) {
  return build(n, n, Family::lukasiewicz_tnorm, [n](Index x, Index y) { return std::max(0, x + y - n); });
}

Uninorm lukasiewicz_tconorm(int n) {
  return build(n, 0, Family::lukasiewicz_tconorm, [n](Index x, Index y) { return std::min(n, x + y); });
}

Uninorm drastic_tnorm(int n) {
  return build(n, n, Family::drastic_tnorm,
               [n](Index x, Index y) { return std::max(x, y) == n ? std::min(x, y) : 0; });
}

Uninorm drastic_tconorm(int n) {
  return build(n, 0, Family::drastic_tconorm,
               [n](Index x, Index y) { return std::min(x, y) == 0 ? std::max(x, y) : n; });
}

Uninorm idem_min(int n, Index e) {
  return build(n, e, Family::umin_idempotent,
               [e](Index x, Index y) { return (x >= e && y >= e) ? std::max(x, y) : std::min(x, y); });
}

Uninorm idem_max(int n, Index e) {
  return build(n, e, Family::umax_idempotent,
               [e](Index x, Index y) { return (x <= e && y <= e) ? std::min(x, y) : std::max(x, y); });
}

Uninorm umin_of(const Uninorm& t, Index e, const Uninorm& s) {
  return assemble(t, e, s, Family::umin_of, [](Index x, Index y) { return std::min(x, y); });
}

Uninorm umax_of(const Uninorm& t, Index e, const Uninorm& s) {
  return assemble(t, e, s, Family::umax_of, [](Index x, Index y) { return std::max(x, y); });
}

Uninorm luk_upper(int n, Index e) { return umin_of(min_tnorm(e), e, lukasiewicz_tconorm(n - e)); }

Uninorm luk_lower(int n, Index e) { return umax_of(lukasiewicz_tnorm(e), e, max_tconorm(n - e)); }

}  // namespace catalog

// ---------------------------------------------------------------------------
// Family-spec notation
//
//   spec  := name [ '(' [ arg { ',' arg } ] ')' ]
//   arg   := key '=' value
//   key   := 'n' | 'e' | 'T' | 'S'
//   value := integer | spec
//
// A sub-spec under T or S inherits its scale (e resp. n - e) unless it
// names one. Inside T/S the bare names "luk" and "drastic" resolve to the
// t-norm resp. t-conorm member of the family.

namespace {

enum class Role { top, tnorm, tconorm };

struct Node;
struct Arg {
  std::string key;
  int key_col;
  std::variant<int, std::shared_ptr<Node>> value;
  int value_col;
};
struct Node {
  std::string name;
  int col;
  std::vector<Arg> args;
};

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  std::shared_ptr<Node> parse() {
    auto node = parse_spec();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return node;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(1, static_cast<int>(pos_) + 1, msg); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_]))) fail("expected a name");
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-' || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::shared_ptr<Node> parse_spec() {
    skip_ws();
    auto node = std::make_shared<Node>();
    node->col = static_cast<int>(pos_) + 1;
    node->name = identifier();
    if (!peek('(')) return node;
    ++pos_;
    if (peek(')')) {
      ++pos_;
      return node;
    }
    for (;;) {
      skip_ws();
      Arg arg;
      arg.key_col = static_cast<int>(pos_) + 1;
      arg.key = identifier();
      expect('=');
      skip_ws();
      arg.value_col = static_cast<int>(pos_) + 1;
      if (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-')) {
        arg.value = integer();
      } else {
        arg.value = parse_spec();
      }
      node->args.push_back(std::move(arg));
      if (peek(',')) {
        ++pos_;
        continue;
      }
      expect(')');
      return node;
    }
  }

  int integer() {
    const std::size_t start = pos_;
    if (text_[pos_] == '-') ++pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected an integer");
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) {
        pos_ = start;
        fail("integer too large");
      }
      ++pos_;
    }
    return static_cast<int>(text_[start] == '-' ? -value : value);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

struct Resolved {
  Family family;
  int col;
};

Resolved resolve_name(const Node& node, Role role) {
  const std::string& s = node.name;
  auto pick = [&](Family tn, Family tc) -> Family {
    if (role == Role::tnorm) return tn;
    if (role == Role::tconorm) return tc;
    throw ParseError(1, node.col, "'" + s + "' is ambiguous here; use " + std::string(to_string(tn)) + " or " +
                                      std::string(to_string(tc)));
  };
  if (s == "min") return {Family::min, node.col};
  if (s == "max") return {Family::max, node.col};
  if (s == "luk" || s == "lukasiewicz") return {pick(Family::lukasiewicz_tnorm, Family::lukasiewicz_tconorm), node.col};
  if (s == "drastic") return {pick(Family::drastic_tnorm, Family::drastic_tconorm), node.col};
  if (s == "luk-tnorm" || s == "lukasiewicz-tnorm") return {Family::lukasiewicz_tnorm, node.col};
  if (s == "luk-tconorm" || s == "lukasiewicz-tconorm") return {Family::lukasiewicz_tconorm, node.col};
  if (s == "drastic-tnorm") return {Family::drastic_tnorm, node.col};
  if (s == "drastic-tconorm") return {Family::drastic_tconorm, node.col};
  if (s == "umin-idempotent" || s == "idemmin") return {Family::umin_idempotent, node.col};
  if (s == "umax-idempotent" || s == "idemmax") return {Family::umax_idempotent, node.col};
  if (s == "umin-of" || s == "umin" || s == "luk-upper") return {Family::umin_of, node.col};
  if (s == "umax-of" || s == "umax" || s == "luk-lower") return {Family::umax_of, node.col};
  throw ParseError(1, node.col, "unknown family '" + s + "'");
}

FamilySpec to_spec(const Node& node, Role role, std::optional<int> inherited_n);

Uninorm sub_operation(const Arg& arg, Role role, int inherited_n) {
  std::shared_ptr<Node> sub;
  if (const auto* p = std::get_if<std::shared_ptr<Node>>(&arg.value)) sub = *p;
  if (!sub) throw ParseError(1, arg.value_col, arg.key + " expects a family, not a number");
  if (inherited_n < 1) throw ParseError(1, arg.value_col, arg.key + " would live on an empty chain");
  FamilySpec spec = to_spec(*sub, role, inherited_n);
  Uninorm u = make(spec);
  if (role == Role::tnorm && !u.is_tnorm()) throw ParseError(1, sub->col, "T must be a t-norm");
  if (role == Role::tconorm && !u.is_tconorm()) throw ParseError(1, sub->col, "S must be a t-conorm");
  return u;
}

FamilySpec to_spec(const Node& node, Role role, std::optional<int> inherited_n) {
  const Resolved r = resolve_name(node, role);
  std::optional<int> n = inherited_n;
  std::optional<int> e;
  const Arg* t_arg = nullptr;
  const Arg* s_arg = nullptr;
  std::vector<std::string> seen;
  for (const Arg& arg : node.args) {
    if (std::find(seen.begin(), seen.end(), arg.key) != seen.end()) {
      throw ParseError(1, arg.key_col, "duplicate key '" + arg.key + "'");
    }
    seen.push_back(arg.key);
    if (arg.key == "n" || arg.key == "e") {
      const int* v = std::get_if<int>(&arg.value);
      if (!v) throw ParseError(1, arg.value_col, arg.key + " expects an integer");
      if (arg.key == "n") {
        if (*v < 1) throw ParseError(1, arg.value_col, "n must be at least 1");
        n = *v;
      } else {
        e = *v;
      }
    } else if (arg.key == "T") {
      t_arg = &arg;
    } else if (arg.key == "S") {
      s_arg = &arg;
    } else {
      throw ParseError(1, arg.key_col, "unknown key '" + arg.key + "' (expected n, e, T or S)");
    }
  }
  if (!n) throw ParseError(1, node.col, "'" + node.name + "' needs n");
  if (is_tnorm_family(r.family) && !e) e = *n;
  if (is_tconorm_family(r.family) && !e) e = 0;
  if (!e) throw ParseError(1, node.col, "'" + node.name + "' needs e");
  if (*e < 0 || *e > *n) throw ParseError(1, node.col, "e must lie in 0..n");

  FamilySpec spec{r.family, ChainScale(*n), *e, std::nullopt, std::nullopt};
  const bool upper = node.name == "luk-upper";
  const bool lower = node.name == "luk-lower";
  if (upper || lower) {
    if (t_arg || s_arg) throw ParseError(1, node.col, "'" + node.name + "' fixes T and S");
    if (*e <= 0 || *e >= *n) throw ParseError(1, node.col, "'" + node.name + "' needs 0 < e < n");
    spec.tnorm = upper ? catalog::min_tnorm(*e) : catalog::lukasiewicz_tnorm(*e);
    spec.tconorm = upper ? catalog::lukasiewicz_tconorm(*n - *e) : catalog::max_tconorm(*n - *e);
    return spec;
  }
  if (is_compositor(r.family)) {
    if (!t_arg) throw ParseError(1, node.col, "'" + node.name + "' needs T");
    if (!s_arg) throw ParseError(1, node.col, "'" + node.name + "' needs S");
    spec.tnorm = sub_operation(*t_arg, Role::tnorm, *e);
    spec.tconorm = sub_operation(*s_arg, Role::tconorm, *n - *e);
  } else if (t_arg || s_arg) {
    throw ParseError(1, (t_arg ? t_arg : s_arg)->key_col, "'" + node.name + "' takes no T/S");
  }
  return spec;
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text) {
  auto root = SpecParser(text).parse();
  return to_spec(*root, Role::top, std::nullopt);
}

Uninorm make_from_spec(std::string_view text) { return make(parse_family_spec(text)); }

}  // namespace uninorm
