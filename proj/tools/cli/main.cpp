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

// Command-line front end. Talks to the library only through uninorm.h.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "uninorm/uninorm.h"

namespace {

enum Exit { kTrue = 0, kFalse = 1, kUsage = 2, kResource = 3 };

struct Deleter {
  void operator()(un_table* p) const { un_table_free(p); }
  void operator()(un_uninorm* p) const { un_uninorm_free(p); }
  void operator()(un_report* p) const { un_report_free(p); }
  void operator()(un_decomposition* p) const { un_decomposition_free(p); }
  void operator()(un_uninorm_list* p) const { un_uninorm_list_free(p); }
  void operator()(char* p) const { un_string_free(p); }
};
template <class T>
using Owned = std::unique_ptr<T, Deleter>;

// Thrown to unwind with a prepared exit status; the message is already printed.
struct Bail {
  int status;
};

int exit_for(un_status s) {
  switch (s) {
    case UN_OK: return kTrue;
    case UN_ERR_RESOURCE: return kResource;
    case UN_ERR_REFUSED:
    case UN_ERR_COMPOSITION: return kFalse;
    default: return kUsage;
  }
}

void check(un_status s, const std::string& context) {
  if (s == UN_OK) return;
  std::cerr << "error (" << un_status_name(s) << "): " << context << ": " << un_last_error() << '\n';
  throw Bail{exit_for(s)};
}

std::string take(char* s) {
  Owned<char> guard(s);
  return std::string(s);
}

struct Options {
  std::string u1, u2, table, decomposition, out, format = "text", write_table;
  unsigned workers = 1;
  int max_n = 0;
  std::uint64_t max_pairs = 0;
  bool verbose = false;
  bool no_timing = false;
  int n = -1, e = -1, e1 = -1, e2 = -1;
  bool idempotent = false, locally_internal = false, conjunctive = false;
};

int format_of(const Options& o) {
  int f = o.format == "structured" ? UN_FORMAT_STRUCTURED : UN_FORMAT_TEXT;
  return o.no_timing ? f | UN_RENDER_OMIT_TIMING : f;
}

un_search_options search_options(const Options& o) {
  un_search_options s;
  un_search_options_init(&s);
  s.workers = o.workers;
  s.max_n = o.max_n;
  s.max_pairs = o.max_pairs;
  s.idempotent_only = o.idempotent;
  s.locally_internal_only = o.locally_internal;
  s.conjunctive_only = o.conjunctive;
  s.verbose = o.verbose;
  return s;
}

std::optional<std::string> read_file(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) return std::nullopt;
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A path argument is looked up as given, then inside $UNINORM_FIXTURES.
std::optional<std::string> read_input(const std::string& arg) {
  if (auto text = read_file(arg)) return text;
  if (const char* dir = std::getenv("UNINORM_FIXTURES")) {
    if (auto text = read_file(std::filesystem::path(dir) / arg)) return text;
  }
  return std::nullopt;
}

Owned<un_table> parse_table_file(const std::string& arg) {
  auto text = read_input(arg);
  if (!text) {
    std::cerr << "error: cannot read table file '" << arg << "'\n";
    throw Bail{kUsage};
  }
  un_table* t = nullptr;
  const un_status s = un_table_parse(text->c_str(), &t);
  if (s == UN_ERR_PARSE) {
    std::cerr << arg << ':' << un_last_error() << '\n';
    throw Bail{kUsage};
  }
  check(s, arg);
  return Owned<un_table>(t);
}

// Table file if one exists under that name, otherwise a family spec.
Owned<un_table> load_table(const std::string& arg) {
  if (read_input(arg)) return parse_table_file(arg);
  un_table* t = nullptr;
  const un_status s = un_table_from_family(arg.c_str(), &t);
  if (s == UN_ERR_PARSE) {
    const int col = un_last_error_column();
    std::cerr << "error: malformed family spec\n  " << arg << "\n  " << std::string(col > 0 ? col - 1 : 0, ' ')
              << "^ " << un_last_error() << '\n';
    throw Bail{kUsage};
  }
  check(s, "family spec '" + arg + "'");
  return Owned<un_table>(t);
}

Owned<un_uninorm> load_uninorm(const std::string& arg, const char* flag) {
  if (arg.empty()) {
    std::cerr << "error: " << flag << " is required\n";
    throw Bail{kUsage};
  }
  auto table = load_table(arg);
  un_uninorm* u = nullptr;
  check(un_uninorm_from_table(table.get(), &u), std::string(flag) + " is not a uninorm");
  return Owned<un_uninorm>(u);
}

void emit(const Options& o, const std::string& document) {
  if (o.out.empty()) {
    std::cout << document;
    return;
  }
  std::ofstream out(o.out);
  out << document;
  if (!out) {
    std::cerr << "error: cannot write '" << o.out << "'\n";
    throw Bail{kUsage};
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    throw Bail{kUsage};
  }
}

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

// Emits the report, prints the text summary on stderr and maps the verdict.
int finish(const Options& o, const un_report* report) {
  emit(o, take([&] {
         char* s = nullptr;
         check(un_report_render(report, format_of(o), &s), "render");
         return s;
       }()));
  char* text = nullptr;
  check(un_report_render(report, UN_FORMAT_TEXT | UN_RENDER_OMIT_TIMING, &text), "render");
  std::cerr << first_line(take(text)) << '\n';
  if (un_report_partial(report)) return kResource;
  return un_report_verdict(report) && !un_report_divergence(report) ? kTrue : kFalse;
}

int run_validate(const Options& o) {
  if (o.table.empty() == o.u1.empty()) {
    std::cerr << "error: validate takes exactly one of --table or --u1\n";
    return kUsage;
  }
  auto table = o.table.empty() ? load_table(o.u1) : parse_table_file(o.table);
  if (!o.write_table.empty()) {
    char* s = nullptr;
    check(un_table_write(table.get(), &s), "write table");
    write_file(o.write_table, take(s));
  }
  un_report* r = nullptr;
  check(un_validate(table.get(), o.verbose, &r), "validate");
  Owned<un_report> report(r);
  return finish(o, report.get());
}

int run_classify(const Options& o) {
  auto u1 = load_uninorm(o.u1, "--u1");
  un_report* r = nullptr;
  if (o.u2.empty()) {
    check(un_profile(u1.get(), &r), "profile");
  } else {
    auto u2 = load_uninorm(o.u2, "--u2");
    check(un_theorem_conditions(u1.get(), u2.get(), o.verbose, &r), "classify");
  }
  Owned<un_report> report(r);
  return finish(o, report.get());
}

int run_check(const Options& o) {
  auto u1 = load_uninorm(o.u1, "--u1");
  auto u2 = load_uninorm(o.u2, "--u2");
  un_report* r = nullptr;
  check(un_classify_and_check(u1.get(), u2.get(), o.verbose, &r), "check");
  Owned<un_report> report(r);
  return finish(o, report.get());
}

int run_decompose(const Options& o) {
  auto u1 = load_uninorm(o.u1, "--u1");
  auto u2 = load_uninorm(o.u2, "--u2");
  un_decomposition* d = nullptr;
  check(un_decompose(u1.get(), u2.get(), &d), "decompose");
  Owned<un_decomposition> dec(d);
  char* s = nullptr;
  check(un_decomposition_render(dec.get(), format_of(o), &s), "render");
  emit(o, take(s));
  std::cerr << "decomposed pair on L_" << un_decomposition_scale(d) << " with e1 = " << un_decomposition_e1(d)
            << ", e2 = " << un_decomposition_e2(d) << '\n';
  return kTrue;
}

int run_compose(const Options& o) {
  if (o.decomposition.empty()) {
    std::cerr << "error: --decomposition is required\n";
    return kUsage;
  }
  auto text = read_input(o.decomposition);
  if (!text) {
    std::cerr << "error: cannot read decomposition file '" << o.decomposition << "'\n";
    return kUsage;
  }
  un_decomposition* d = nullptr;
  const un_status s = un_decomposition_parse(text->c_str(), &d);
  if (s == UN_ERR_PARSE) {
    std::cerr << o.decomposition << ':' << un_last_error() << '\n';
    return kUsage;
  }
  check(s, o.decomposition);
  Owned<un_decomposition> dec(d);
  const int n = o.n >= 0 ? o.n : un_decomposition_scale(d);
  const int e1 = o.e1 >= 0 ? o.e1 : un_decomposition_e1(d);
  const int e2 = o.e2 >= 0 ? o.e2 : un_decomposition_e2(d);
  un_uninorm *a = nullptr, *b = nullptr;
  check(un_compose(dec.get(), n, e1, e2, &a, &b), "compose");
  Owned<un_uninorm> u1(a), u2(b);
  char *t1 = nullptr, *t2 = nullptr;
  check(un_uninorm_write(u1.get(), &t1), "write");
  const std::string first = take(t1);
  check(un_uninorm_write(u2.get(), &t2), "write");
  const std::string second = take(t2);
  if (o.out.empty()) {
    std::cout << "# u1\n" << first << "# u2\n" << second;
  } else {
    write_file(o.out + ".u1", first);
    write_file(o.out + ".u2", second);
  }
  std::cerr << "composed a distributive pair on L_" << n << '\n';
  return kTrue;
}

int require_scale(const Options& o) {
  if (o.n < 1) {
    std::cerr << "error: --n is required and must be at least 1\n";
    throw Bail{kUsage};
  }
  return o.n;
}

int run_enumerate(const Options& o) {
  const int n = require_scale(o);
  if (o.e < 0) {
    std::cerr << "error: --e is required\n";
    return kUsage;
  }
  const un_search_options opts = search_options(o);
  un_uninorm_list* l = nullptr;
  check(un_enumerate(n, o.e, &opts, &l), "enumerate");
  Owned<un_uninorm_list> list(l);
  const std::size_t count = un_uninorm_list_size(l);
  std::string doc;
  if (o.format == "structured") {
    doc = "{\n  \"format-version\": 1,\n  \"kind\": \"enumeration\",\n  \"scale\": " + std::to_string(n) +
          ",\n  \"neutral\": " + std::to_string(o.e) + ",\n  \"count\": " + std::to_string(count) +
          ",\n  \"tables\": [";
    for (std::size_t i = 0; i < count; ++i) {
      const un_uninorm* u = un_uninorm_list_get(l, i);
      doc += i ? ",\n    [" : "\n    [";
      for (int x = 0; x <= n; ++x) {
        doc += x ? ", [" : "[";
        for (int y = 0; y <= n; ++y) doc += (y ? ", " : "") + std::to_string(un_uninorm_at(u, x, y));
        doc += "]";
      }
      doc += "]";
    }
    doc += count ? "\n  ]\n}\n" : "]\n}\n";
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      char* s = nullptr;
      check(un_uninorm_write(un_uninorm_list_get(l, i), &s), "write");
      doc += "# uninorm " + std::to_string(i) + "\n" + take(s) + "\n";
    }
  }
  emit(o, doc);
  std::cerr << count << " uninorms on L_" << n << " with neutral element " << o.e << '\n';
  return kTrue;
}

int run_scan(const Options& o) {
  const int n = require_scale(o);
  if (o.e1 < 0 || o.e2 < 0) {
    std::cerr << "error: --e1 and --e2 are required\n";
    return kUsage;
  }
  const un_search_options opts = search_options(o);
  un_report* r = nullptr;
  check(un_scan_pairs(n, o.e1, o.e2, &opts, &r), "scan");
  Owned<un_report> report(r);
  return finish(o, report.get());
}

int run_certify(const Options& o) {
  const int n = require_scale(o);
  const un_search_options opts = search_options(o);
  un_report* r = nullptr;
  check(un_certify(n, &opts, &r), "certify");
  Owned<un_report> report(r);
  const int status = finish(o, report.get());
  if (un_report_divergence(r)) std::cerr << "THEOREM-DIVERGENCE found; see report\n";
  if (un_report_partial(r)) std::cerr << "pair budget exhausted; report is partial\n";
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Uninorms on finite chains: validation, distributivity and exhaustive search"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string(un_version()));
  Options o;

  const auto io = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Write the report here instead of standard output");
    sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "structured"}));
    sub->add_flag("--verbose", o.verbose, "Report every witness instead of one per law");
  };
  const auto pair = [&](CLI::App* sub, bool second_required) {
    sub->add_option("--u1", o.u1, "First operation: table file or family spec")->required();
    auto* u2 = sub->add_option("--u2", o.u2, "Second operation: table file or family spec");
    if (second_required) u2->required();
  };
  const auto search = [&](CLI::App* sub) {
    sub->add_option("--workers", o.workers, "Worker threads")->check(CLI::Range(1u, 1024u));
    sub->add_option("--max-n", o.max_n, "Largest chain the search may attempt")->check(CLI::PositiveNumber);
  };

  auto* validate = app.add_subcommand("validate", "Check a table against the uninorm axioms");
  validate->add_option("--table", o.table, "Table file");
  validate->add_option("--u1", o.u1, "Table file or family spec");
  validate->add_option("--write-table", o.write_table, "Also write the canonical table to this path");
  io(validate);

  auto* classify = app.add_subcommand("classify", "Profile one uninorm, or the structure conditions of a pair");
  pair(classify, false);
  io(classify);

  auto* chk = app.add_subcommand("check", "Decide distributivity of --u1 over --u2 and compare with the structure conditions");
  pair(chk, true);
  io(chk);

  auto* dec = app.add_subcommand("decompose", "Split a distributive pair with distinct neutral elements");
  pair(dec, true);
  io(dec);

  auto* comp = app.add_subcommand("compose", "Assemble a pair from a decomposition file");
  comp->add_option("--decomposition", o.decomposition, "Decomposition file")->required();
  comp->add_option("--n", o.n, "Chain size (default: from the file)");
  comp->add_option("--e1", o.e1, "Neutral element of u1 (default: from the file)");
  comp->add_option("--e2", o.e2, "Neutral element of u2 (default: from the file)");
  comp->add_option("--out", o.out, "Write u1 and u2 to <out>.u1 and <out>.u2");

  auto* en = app.add_subcommand("enumerate", "List every uninorm on L_n with neutral element e");
  en->add_option("--n", o.n, "Chain size")->required();
  en->add_option("--e", o.e, "Neutral element")->required();
  en->add_flag("--idempotent", o.idempotent, "Only idempotent uninorms");
  en->add_flag("--locally-internal", o.locally_internal, "Only locally internal uninorms");
  en->add_flag("--conjunctive", o.conjunctive, "Only conjunctive proper uninorms");
  search(en);
  io(en);

  auto* scan = app.add_subcommand("scan", "List every distributive pair for fixed neutral elements");
  scan->add_option("--n", o.n, "Chain size")->required();
  scan->add_option("--e1", o.e1, "Neutral element of u1")->required();
  scan->add_option("--e2", o.e2, "Neutral element of u2")->required();
  search(scan);
  io(scan);

  auto* cert = app.add_subcommand("certify", "Compare the structure conditions with brute force over all pairs");
  cert->add_option("--n", o.n, "Chain size")->required();
  cert->add_option("--max-pairs", o.max_pairs, "Stop after this many pairs (report is partial)");
  cert->add_flag("--no-timing", o.no_timing, "Omit wall-clock fields");
  search(cert);
  io(cert);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*validate) return run_validate(o);
    if (*classify) return run_classify(o);
    if (*chk) return run_check(o);
    if (*dec) return run_decompose(o);
    if (*comp) return run_compose(o);
    if (*en) return run_enumerate(o);
    if (*scan) return run_scan(o);
    if (*cert) return run_certify(o);
  } catch (const Bail& b) {
    return b.status;
  }
  return kUsage;
}
