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

#include "uninorm/uninorm.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "uninorm/catalog.hpp"
#include "uninorm/certify.hpp"
#include "uninorm/render.hpp"
#include "uninorm/table_io.hpp"

struct un_table {
  uninorm::TableDocument doc;
};

struct un_uninorm {
  uninorm::Uninorm value;
};

struct un_decomposition {
  uninorm::Decomposition value;
};

struct un_uninorm_list {
  std::vector<un_uninorm> items;
};

struct un_report {
  int verdict = 0;
  int divergence = 0;
  int partial = 0;
  std::string text;
  std::string text_untimed;
  std::string structured;
  std::string structured_untimed;
};

namespace {

using namespace uninorm;

thread_local std::string g_error;
thread_local int g_error_line = 0;
thread_local int g_error_column = 0;

un_status status_of(Errc code) {
  switch (code) {
    case Errc::argument: return UN_ERR_ARGUMENT;
    case Errc::structural: return UN_ERR_STRUCTURE;
    case Errc::parse: return UN_ERR_PARSE;
    case Errc::domain: return UN_ERR_DOMAIN;
    case Errc::wrong_case: return UN_ERR_WRONG_CASE;
    case Errc::empty_restriction: return UN_ERR_EMPTY_RESTRICTION;
    case Errc::invalid_uninorm: return UN_ERR_INVALID_UNINORM;
    case Errc::composition: return UN_ERR_COMPOSITION;
    case Errc::refused: return UN_ERR_REFUSED;
    case Errc::resource: return UN_ERR_RESOURCE;
    case Errc::internal: return UN_ERR_INTERNAL;
  }
  return UN_ERR_INTERNAL;
}

template <class F>
un_status guarded(F&& f) {
  g_error.clear();
  g_error_line = 0;
  g_error_column = 0;
  try {
    f();
    return UN_OK;
  } catch (const ParseError& e) {
    g_error = e.what();
    g_error_line = e.line();
    g_error_column = e.column();
    return UN_ERR_PARSE;
  } catch (const Error& e) {
    g_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_error = "out of memory";
    return UN_ERR_RESOURCE;
  } catch (const std::exception& e) {
    g_error = e.what();
    return UN_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(Errc::argument, what);
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Witnesses policy(int verbose) { return verbose ? Witnesses::all : Witnesses::first; }

un_report* plain_report(const std::string& kind, const std::string& title, const CheckReport& r) {
  auto* out = new un_report;
  out->verdict = r.verdict() ? 1 : 0;
  out->text = out->text_untimed = render::report_text(title, r);
  out->structured = out->structured_untimed = render::structured(kind, render::report_json(r));
  return out;
}

SearchOptions search_options(const un_search_options* o) {
  SearchOptions s;
  if (!o) return s;
  s.workers = o->workers;
  if (o->max_n > 0) s.max_n = o->max_n;
  return s;
}

CertifyOptions certify_options(const un_search_options* o) {
  CertifyOptions c;
  c.search.workers = o ? o->workers : 1;
  if (o && o->max_n > 0) c.max_n = o->max_n;
  if (o) c.max_pairs = o->max_pairs;
  return c;
}

}  // namespace

extern "C" {

const char* un_version(void) { return "1.0.0"; }
const char* un_last_error(void) { return g_error.c_str(); }
int un_last_error_line(void) { return g_error_line; }
int un_last_error_column(void) { return g_error_column; }

const char* un_status_name(un_status status) {
  switch (status) {
    case UN_OK: return "ok";
    case UN_ERR_ARGUMENT: return "argument";
    case UN_ERR_STRUCTURE: return "structure";
    case UN_ERR_PARSE: return "parse";
    case UN_ERR_DOMAIN: return "domain";
    case UN_ERR_WRONG_CASE: return "wrong-case";
    case UN_ERR_EMPTY_RESTRICTION: return "empty-restriction";
    case UN_ERR_INVALID_UNINORM: return "invalid-uninorm";
    case UN_ERR_COMPOSITION: return "composition-invalid";
    case UN_ERR_REFUSED: return "refused";
    case UN_ERR_RESOURCE: return "resource";
    case UN_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

void un_string_free(char* s) { std::free(s); }

void un_search_options_init(un_search_options* options) {
  if (!options) return;
  *options = un_search_options{1, 0, 0, 0, 0, 0, 0};
}

un_status un_table_parse(const char* text, un_table** out) {
  return guarded([&] {
    require(text && out, "un_table_parse: null argument");
    *out = new un_table{parse_table(text)};
  });
}

un_status un_table_from_family(const char* spec, un_table** out) {
  return guarded([&] {
    require(spec && out, "un_table_from_family: null argument");
    Uninorm u = make_from_spec(spec);
    *out = new un_table{TableDocument{u.table(), u.neutral()}};
  });
}

un_status un_table_write(const un_table* table, char** out) {
  return guarded([&] {
    require(table && out, "un_table_write: null argument");
    *out = dup(write_table(table->doc.table, table->doc.neutral));
  });
}

int un_table_scale(const un_table* table) { return table ? table->doc.table.n() : -1; }
int un_table_neutral(const un_table* table) { return table ? table->doc.neutral : -1; }
int un_table_at(const un_table* table, int x, int y) {
  if (!table || !table->doc.table.scale().contains(x) || !table->doc.table.scale().contains(y)) return -1;
  return table->doc.table(x, y);
}
void un_table_free(un_table* table) { delete table; }

un_status un_validate(const un_table* table, int verbose, un_report** out) {
  return guarded([&] {
    require(table && out, "un_validate: null argument");
    *out = plain_report("validation", "uninorm",
                        validate_uninorm(table->doc.table, table->doc.neutral, policy(verbose)));
  });
}

un_status un_uninorm_from_table(const un_table* table, un_uninorm** out) {
  return guarded([&] {
    require(table && out, "un_uninorm_from_table: null argument");
    *out = new un_uninorm{Uninorm(table->doc.table, table->doc.neutral)};
  });
}

un_status un_uninorm_from_family(const char* spec, un_uninorm** out) {
  return guarded([&] {
    require(spec && out, "un_uninorm_from_family: null argument");
    *out = new un_uninorm{make_from_spec(spec)};
  });
}

un_status un_uninorm_write(const un_uninorm* u, char** out) {
  return guarded([&] {
    require(u && out, "un_uninorm_write: null argument");
    *out = dup(write_table(u->value.table(), u->value.neutral()));
  });
}

int un_uninorm_scale(const un_uninorm* u) { return u ? u->value.n() : -1; }
int un_uninorm_neutral(const un_uninorm* u) { return u ? u->value.neutral() : -1; }
int un_uninorm_at(const un_uninorm* u, int x, int y) {
  if (!u || !u->value.scale().contains(x) || !u->value.scale().contains(y)) return -1;
  return u->value(x, y);
}
int un_uninorm_equal(const un_uninorm* a, const un_uninorm* b) { return a && b && a->value == b->value ? 1 : 0; }

un_status un_dual(const un_uninorm* u, un_uninorm** out) {
  return guarded([&] {
    require(u && out, "un_dual: null argument");
    *out = new un_uninorm{dual(u->value)};
  });
}

un_status un_underlying_tnorm(const un_uninorm* u, un_uninorm** out) {
  return guarded([&] {
    require(u && out, "un_underlying_tnorm: null argument");
    *out = new un_uninorm{underlying_tnorm(u->value)};
  });
}

un_status un_underlying_tconorm(const un_uninorm* u, un_uninorm** out) {
  return guarded([&] {
    require(u && out, "un_underlying_tconorm: null argument");
    *out = new un_uninorm{underlying_tconorm(u->value)};
  });
}

int un_is_idempotent(const un_uninorm* u) { return u && is_idempotent(u->value) ? 1 : 0; }
int un_is_locally_internal(const un_uninorm* u) { return u && is_locally_internal(u->value) ? 1 : 0; }

un_status un_is_conjunctive(const un_uninorm* u, int* out) {
  return guarded([&] {
    require(u && out, "un_is_conjunctive: null argument");
    *out = is_conjunctive(u->value) ? 1 : 0;
  });
}

void un_uninorm_free(un_uninorm* u) { delete u; }

un_status un_profile(const un_uninorm* u, un_report** out) {
  return guarded([&] {
    require(u && out, "un_profile: null argument");
    auto* r = new un_report;
    r->verdict = 1;
    r->text = r->text_untimed = render::profile_text(u->value);
    r->structured = r->structured_untimed = render::structured("profile", render::profile_json(u->value));
    *out = r;
  });
}

un_status un_check_distributivity(const un_uninorm* u1, const un_uninorm* u2, int verbose, un_report** out) {
  return guarded([&] {
    require(u1 && u2 && out, "un_check_distributivity: null argument");
    *out = plain_report("distributivity", "distributive",
                        check_distributivity(u1->value, u2->value, policy(verbose)));
  });
}

un_status un_verify_ordered_semiring(const un_uninorm* u1, const un_uninorm* u2, int verbose, un_report** out) {
  return guarded([&] {
    require(u1 && u2 && out, "un_verify_ordered_semiring: null argument");
    *out = plain_report("ordered-semiring", "commutative ordered semiring",
                        verify_ordered_semiring(u1->value, u2->value, policy(verbose)));
  });
}

un_status un_theorem_conditions(const un_uninorm* u1, const un_uninorm* u2, int verbose, un_report** out) {
  return guarded([&] {
    require(u1 && u2 && out, "un_theorem_conditions: null argument");
    const auto c = theorem_case(u1->value, u2->value);
    *out = plain_report("structure-conditions", std::string(to_string(c)) + " structure conditions",
                        theorem_conditions(u1->value, u2->value, policy(verbose)));
  });
}

un_status un_classify_and_check(const un_uninorm* u1, const un_uninorm* u2, int verbose, un_report** out) {
  return guarded([&] {
    require(u1 && u2 && out, "un_classify_and_check: null argument");
    const Classification c = classify_and_check(u1->value, u2->value, policy(verbose));
    auto* r = new un_report;
    r->verdict = c.distributive() ? 1 : 0;
    r->divergence = c.agreement() ? 0 : 1;
    r->text = r->text_untimed = render::classification_text(c);
    r->structured = r->structured_untimed = render::structured("classification", render::classification_json(c));
    *out = r;
  });
}

int un_report_verdict(const un_report* report) { return report ? report->verdict : 0; }
int un_report_divergence(const un_report* report) { return report ? report->divergence : 0; }
int un_report_partial(const un_report* report) { return report ? report->partial : 0; }

un_status un_report_render(const un_report* report, int format, char** out) {
  return guarded([&] {
    require(report && out, "un_report_render: null argument");
    const bool untimed = (format & UN_RENDER_OMIT_TIMING) != 0;
    const int base = format & ~UN_RENDER_OMIT_TIMING;
    require(base == UN_FORMAT_TEXT || base == UN_FORMAT_STRUCTURED, "un_report_render: unknown format");
    if (base == UN_FORMAT_TEXT) {
      *out = dup(untimed ? report->text_untimed : report->text);
    } else {
      *out = dup(untimed ? report->structured_untimed : report->structured);
    }
  });
}

void un_report_free(un_report* report) { delete report; }

un_status un_decompose(const un_uninorm* u1, const un_uninorm* u2, un_decomposition** out) {
  return guarded([&] {
    require(u1 && u2 && out, "un_decompose: null argument");
    *out = new un_decomposition{decompose(u1->value, u2->value)};
  });
}

un_status un_decomposition_parse(const char* text, un_decomposition** out) {
  return guarded([&] {
    require(text && out, "un_decomposition_parse: null argument");
    *out = new un_decomposition{parse_decomposition(text)};
  });
}

un_status un_decomposition_render(const un_decomposition* d, int format, char** out) {
  return guarded([&] {
    require(d && out, "un_decomposition_render: null argument");
    const int base = format & ~UN_RENDER_OMIT_TIMING;
    require(base == UN_FORMAT_TEXT || base == UN_FORMAT_STRUCTURED, "un_decomposition_render: unknown format");
    *out = dup(base == UN_FORMAT_TEXT ? write_decomposition(d->value)
                                      : render::structured("decomposition", render::decomposition_json(d->value)));
  });
}

int un_decomposition_scale(const un_decomposition* d) { return d ? d->value.n : -1; }
int un_decomposition_e1(const un_decomposition* d) { return d ? d->value.e1 : -1; }
int un_decomposition_e2(const un_decomposition* d) { return d ? d->value.e2 : -1; }

un_status un_compose(const un_decomposition* d, int n, int e1, int e2, un_uninorm** u1, un_uninorm** u2) {
  return guarded([&] {
    require(d && u1 && u2, "un_compose: null argument");
    auto [a, b] = compose(d->value, ChainScale(n), e1, e2);
    auto* first = new un_uninorm{std::move(a)};
    try {
      *u2 = new un_uninorm{std::move(b)};
    } catch (...) {
      delete first;
      throw;
    }
    *u1 = first;
  });
}

void un_decomposition_free(un_decomposition* d) { delete d; }

un_status un_enumerate(int n, int e, const un_search_options* options, un_uninorm_list** out) {
  return guarded([&] {
    require(out != nullptr, "un_enumerate: null argument");
    EnumerationTask task{ChainScale(n), e, {}};
    if (options) {
      task.filters.idempotent_only = options->idempotent_only != 0;
      task.filters.locally_internal_only = options->locally_internal_only != 0;
      task.filters.conjunctive_only = options->conjunctive_only != 0;
    }
    auto list = std::make_unique<un_uninorm_list>();
    enumerate_uninorms(task, search_options(options), [&](const Uninorm& u) { list->items.push_back(un_uninorm{u}); });
    *out = list.release();
  });
}

size_t un_uninorm_list_size(const un_uninorm_list* list) { return list ? list->items.size() : 0; }
const un_uninorm* un_uninorm_list_get(const un_uninorm_list* list, size_t i) {
  return list && i < list->items.size() ? &list->items[i] : nullptr;
}
void un_uninorm_list_free(un_uninorm_list* list) { delete list; }

un_status un_scan_pairs(int n, int e1, int e2, const un_search_options* options, un_report** out) {
  return guarded([&] {
    require(out != nullptr, "un_scan_pairs: null argument");
    const auto entries = scan_pairs(ChainScale(n), e1, e2, certify_options(options));
    auto* r = new un_report;
    r->verdict = 1;
    for (const auto& entry : entries) {
      if (!entry.necessity.verdict()) r->verdict = 0;
    }
    r->text = r->text_untimed = render::scan_text(n, e1, e2, entries);
    r->structured = r->structured_untimed = render::structured("scan", render::scan_json(n, e1, e2, entries));
    *out = r;
  });
}

un_status un_certify(int n, const un_search_options* options, un_report** out) {
  return guarded([&] {
    require(out != nullptr, "un_certify: null argument");
    const CertificationReport rep = certify(ChainScale(n), certify_options(options));
    auto* r = new un_report;
    r->verdict = rep.consistent() ? 1 : 0;
    r->divergence = rep.divergences.empty() ? 0 : 1;
    r->partial = rep.partial ? 1 : 0;
    r->text = render::certification_text(rep, true);
    r->text_untimed = render::certification_text(rep, false);
    r->structured = render::structured("certification", render::certification_json(rep, true));
    r->structured_untimed = render::structured("certification", render::certification_json(rep, false));
    *out = r;
  });
}

}  // extern "C"
