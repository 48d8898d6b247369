// Copyright 2026 The thompson-density Authors
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


#include "thompson/thompson.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>

#include "thompson/census.hpp"
#include "thompson/error.hpp"
#include "thompson/forest.hpp"
#include "thompson/genfunc.hpp"
#include "thompson/group.hpp"
#include "thompson/reports.hpp"

struct tf_element {
  thompson::NormalForm value;
};

struct tf_element_list {
  std::vector<tf_element> items;
};

struct tf_genset {
  thompson::GenSet value;
};

struct tf_forest {
  thompson::MarkedForest value;
};

struct tf_interval {
  thompson::CertifiedInterval value;
};

struct tf_report {
  thompson::reports::Report value;
};

namespace {

thread_local std::string last_error;

tf_status fail(tf_status s, const std::string& what) {
  last_error = what;
  return s;
}

tf_status from_errc(thompson::Errc c) {
  using thompson::Errc;
  switch (c) {
    case Errc::invalid_argument:
      return TF_ERR_INVALID_ARGUMENT;
    case Errc::parse_error:
      return TF_ERR_PARSE;
    case Errc::cap_exceeded:
      return TF_ERR_CAP_EXCEEDED;
    case Errc::precision_exhausted:
      return TF_ERR_PRECISION;
    case Errc::invariant_violation:
      return TF_ERR_INVARIANT;
  }
  return TF_ERR_INTERNAL;
}

template <class F>
tf_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return TF_OK;
  } catch (const thompson::Error& e) {
    return fail(from_errc(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(TF_ERR_ALLOC, "out of memory");
  } catch (const std::exception& e) {
    return fail(TF_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TF_ERR_INTERNAL, "unknown failure");
  }
}

void require(const void* p, const char* what) {
  if (!p) {
    throw thompson::Error(thompson::Errc::invalid_argument,
                          std::string(what) + " must not be NULL");
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

thompson::ActionLabel to_label(tf_label l) {
  if (l < TF_X0 || l > TF_X1BAR_INV) {
    throw thompson::Error(thompson::Errc::invalid_argument, "unknown label");
  }
  return static_cast<thompson::ActionLabel>(l);
}

const thompson::reports::Table* table_at(const tf_report* r, size_t t) {
  if (!r || t >= r->value.tables.size()) return nullptr;
  return &r->value.tables[t];
}

}  // namespace

extern "C" {

const char* tf_version(void) { return thompson::reports::kVersion; }

const char* tf_last_error(void) { return last_error.c_str(); }

const char* tf_status_name(tf_status status) {
  switch (status) {
    case TF_OK:
      return "ok";
    case TF_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case TF_ERR_PARSE:
      return "parse error";
    case TF_ERR_CAP_EXCEEDED:
      return "cap exceeded";
    case TF_ERR_PRECISION:
      return "precision exhausted";
    case TF_ERR_INVARIANT:
      return "invariant violation";
    case TF_ERR_ALLOC:
      return "out of memory";
    case TF_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void tf_string_free(char* s) { std::free(s); }

// ---- elements

tf_status tf_element_parse(const char* text, tf_element** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new tf_element{thompson::parse_element(text)};
  });
}

tf_status tf_element_from_parts(const uint64_t* pos, size_t npos,
                                const uint64_t* neg, size_t nneg,
                                tf_element** out) {
  return guarded([&] {
    require(out, "out");
    if (npos) require(pos, "pos");
    if (nneg) require(neg, "neg");
    std::vector<thompson::Index> p(pos, pos + npos), n(neg, neg + nneg);
    *out = new tf_element{
        thompson::NormalForm::from_parts(std::move(p), std::move(n))};
  });
}

void tf_element_free(tf_element* g) { delete g; }

tf_status tf_element_multiply(const tf_element* a, const tf_element* b,
                              tf_element** out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = new tf_element{thompson::multiply(a->value, b->value)};
  });
}

tf_status tf_element_invert(const tf_element* a, tf_element** out) {
  return guarded([&] {
    require(a, "a");
    require(out, "out");
    *out = new tf_element{thompson::invert(a->value)};
  });
}

tf_status tf_element_symmetry(const tf_element* a, tf_element** out) {
  return guarded([&] {
    require(a, "a");
    require(out, "out");
    *out = new tf_element{thompson::apply_endomorphism(
        thompson::symmetry_automorphism(), a->value)};
  });
}

tf_status tf_element_to_string(const tf_element* a, char** out) {
  return guarded([&] {
    require(a, "a");
    require(out, "out");
    *out = dup(thompson::to_string(a->value));
  });
}

tf_status tf_element_parts(const tf_element* a, const uint64_t** pos,
                           size_t* npos, const uint64_t** neg, size_t* nneg) {
  return guarded([&] {
    require(a, "a");
    require(pos, "pos");
    require(npos, "npos");
    require(neg, "neg");
    require(nneg, "nneg");
    *pos = a->value.pos().data();
    *npos = a->value.pos().size();
    *neg = a->value.neg().data();
    *nneg = a->value.neg().size();
  });
}

int tf_element_equal(const tf_element* a, const tf_element* b) {
  return a && b && a->value == b->value;
}

int tf_element_is_identity(const tf_element* a) {
  return a && a->value.is_identity();
}

tf_status tf_verify_relation(const char* lhs, const char* rhs, int* holds) {
  return guarded([&] {
    require(lhs, "lhs");
    require(rhs, "rhs");
    require(holds, "holds");
    *holds = thompson::verify_relation(thompson::parse_word(lhs),
                                       thompson::parse_word(rhs));
  });
}

// ---- generating sets

tf_status tf_genset_parse(const char* text, tf_genset** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new tf_genset{thompson::GenSet::parse(text)};
  });
}

void tf_genset_free(tf_genset* s) { delete s; }

size_t tf_genset_rank(const tf_genset* s) { return s ? s->value.rank() : 0; }

tf_status tf_ball(const tf_genset* s, unsigned radius, tf_element_list** out) {
  return guarded([&] {
    require(s, "genset");
    require(out, "out");
    auto list = std::make_unique<tf_element_list>();
    for (auto& g : thompson::ball(s->value, radius)) {
      list->items.push_back(tf_element{std::move(g)});
    }
    *out = list.release();
  });
}

void tf_element_list_free(tf_element_list* list) { delete list; }

size_t tf_element_list_size(const tf_element_list* list) {
  return list ? list->items.size() : 0;
}

const tf_element* tf_element_list_get(const tf_element_list* list, size_t i) {
  if (!list || i >= list->items.size()) return nullptr;
  return &list->items[i];
}

tf_status tf_cheeger_per_label(const tf_element_list* ys, const tf_genset* s,
                               uint64_t* counts, size_t capacity) {
  return guarded([&] {
    require(ys, "ys");
    require(s, "genset");
    require(counts, "counts");
    if (capacity < 2 * s->value.rank()) {
      throw thompson::Error(thompson::Errc::invalid_argument,
                            "counts needs room for " +
                                std::to_string(2 * s->value.rank()) +
                                " values");
    }
    std::vector<thompson::NormalForm> y;
    y.reserve(ys->items.size());
    for (const auto& e : ys->items) y.push_back(e.value);
    const auto c = thompson::cheeger_per_label(y, s->value);
    std::copy(c.begin(), c.end(), counts);
  });
}

// ---- forests

tf_status tf_forest_parse(const char* text, tf_forest** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new tf_forest{thompson::decode(text)};
  });
}

void tf_forest_free(tf_forest* f) { delete f; }

tf_status tf_forest_encode(const tf_forest* f, char** out) {
  return guarded([&] {
    require(f, "forest");
    require(out, "out");
    *out = dup(thompson::encode(f->value));
  });
}

tf_status tf_forest_apply(tf_label label, const tf_forest* f, tf_forest** out) {
  return guarded([&] {
    require(f, "forest");
    require(out, "out");
    auto g = thompson::apply(to_label(label), f->value);
    *out = g ? new tf_forest{std::move(*g)} : nullptr;
  });
}

tf_status tf_forest_apply_within(tf_label label, const tf_forest* f,
                                 unsigned k, tf_forest** out) {
  return guarded([&] {
    require(f, "forest");
    require(out, "out");
    auto g = thompson::apply_within(to_label(label), f->value,
                                    thompson::BBParams{f->value.leaves(), k});
    *out = g ? new tf_forest{std::move(*g)} : nullptr;
  });
}

tf_status tf_bb_count(size_t n, unsigned k, char** out) {
  return guarded([&] {
    require(out, "out");
    if (n < 1) {
      throw thompson::Error(thompson::Errc::invalid_argument, "n must be >= 1");
    }
    *out = dup(thompson::psi(k, n)[n].get_str());
  });
}

// ---- intervals

tf_status tf_xi(unsigned k, double tol, tf_interval** out) {
  return guarded([&] {
    require(out, "out");
    *out = new tf_interval{thompson::xi(k, tol)};
  });
}

void tf_interval_free(tf_interval* iv) { delete iv; }

tf_status tf_interval_lo(const tf_interval* iv, int digits, char** out) {
  return guarded([&] {
    require(iv, "interval");
    require(out, "out");
    *out = dup(iv->value.lo_decimal(digits));
  });
}

tf_status tf_interval_hi(const tf_interval* iv, int digits, char** out) {
  return guarded([&] {
    require(iv, "interval");
    require(out, "out");
    *out = dup(iv->value.hi_decimal(digits));
  });
}

double tf_interval_width(const tf_interval* iv) {
  return iv ? iv->value.width() : -1.0;
}

// ---- series

tf_status tf_series_coefficient(tf_series which, unsigned k, size_t n,
                                char** out) {
  return guarded([&] {
    require(out, "out");
    const auto f = thompson::count_series(k, std::max<size_t>(n, 1));
    const thompson::TruncatedSeries* s = nullptr;
    switch (which) {
      case TF_SERIES_BETA:
        s = &f.beta;
        break;
      case TF_SERIES_TRIVIAL_MARKED:
        s = &f.trivial_marked;
        break;
      case TF_SERIES_MARKED_LEFTMOST:
        s = &f.marked_leftmost;
        break;
      case TF_SERIES_MARKED_RIGHTMOST:
        s = &f.marked_rightmost;
        break;
      case TF_SERIES_X1INV_BLOCKED:
        s = &f.x1inv_blocked;
        break;
      case TF_SERIES_X1BARINV_BLOCKED:
        s = &f.x1barinv_blocked;
        break;
      case TF_SERIES_ISOLATED:
        s = &f.isolated;
        break;
    }
    if (!s) {
      throw thompson::Error(thompson::Errc::invalid_argument, "unknown series");
    }
    *out = dup((*s)[n].get_str());
  });
}

// ---- runs

void tf_run_config_init(tf_run_config* c) {
  if (!c) return;
  const thompson::reports::RunConfig d;
  *c = tf_run_config{};
  c->command = nullptr;
  c->n = c->nmax = c->k = c->kmax = -1;
  c->genset = nullptr;
  c->mode = TF_MODE_DP;
  c->tol = d.tol;
  c->truncation = d.truncation;
  c->cap = d.cap;
  c->threads = d.threads;
  c->digits = d.digits;
  c->mn = d.mn;
  c->checks = nullptr;
  c->nchecks = 0;
  c->outer = c->perturb = c->list = 0;
}

tf_status tf_run(const tf_run_config* c, tf_report** out) {
  return guarded([&] {
    require(c, "config");
    require(c->command, "command");
    require(out, "out");
    using thompson::Errc;
    using thompson::Error;
    thompson::reports::RunConfig rc;
    rc.command = c->command;
    auto count = [](int64_t v, const char* name) -> std::optional<std::size_t> {
      if (v == -1) return std::nullopt;
      if (v < 0) {
        throw Error(Errc::invalid_argument,
                    std::string(name) + " must be non-negative");
      }
      return static_cast<std::size_t>(v);
    };
    rc.n = count(c->n, "n");
    rc.nmax = count(c->nmax, "nmax");
    if (auto k = count(c->k, "k")) rc.k = static_cast<unsigned>(*k);
    if (auto k = count(c->kmax, "kmax")) rc.kmax = static_cast<unsigned>(*k);
    if (c->genset) rc.genset = c->genset;
    switch (c->mode) {
      case TF_MODE_ENUMERATE:
        rc.mode = thompson::reports::RunMode::enumerate;
        break;
      case TF_MODE_DP:
        rc.mode = thompson::reports::RunMode::dp;
        break;
      case TF_MODE_BOTH:
        rc.mode = thompson::reports::RunMode::both;
        break;
      default:
        throw Error(Errc::invalid_argument, "unknown mode");
    }
    rc.tol = c->tol;
    rc.truncation = c->truncation;
    rc.cap = c->cap;
    rc.threads = c->threads;
    rc.digits = c->digits;
    rc.mn = c->mn;
    if (c->nchecks) require(c->checks, "checks");
    for (size_t i = 0; i < c->nchecks; ++i) {
      require(c->checks[i], "check");
      rc.checks.emplace_back(c->checks[i]);
    }
    rc.outer = c->outer != 0;
    rc.perturb = c->perturb != 0;
    rc.list = c->list != 0;
    *out = new tf_report{thompson::reports::run(rc)};
  });
}

void tf_report_free(tf_report* r) { delete r; }

int tf_report_status(const tf_report* r) {
  return r ? static_cast<int>(r->value.status) : -1;
}

const char* tf_report_message(const tf_report* r) {
  return r ? r->value.message.c_str() : "";
}

tf_status tf_report_render(const tf_report* r, const char* format, char** out) {
  return guarded([&] {
    require(r, "report");
    require(format, "format");
    require(out, "out");
    const std::string f = format;
    if (f == "csv") {
      *out = dup(thompson::reports::render_csv(r->value));
    } else if (f == "json") {
      *out = dup(thompson::reports::render_json(r->value));
    } else if (f == "summary") {
      *out = dup(thompson::reports::render_summary(r->value));
    } else {
      throw thompson::Error(thompson::Errc::invalid_argument,
                            "unknown format \"" + f + "\"");
    }
  });
}

size_t tf_report_table_count(const tf_report* r) {
  return r ? r->value.tables.size() : 0;
}

const char* tf_report_table_name(const tf_report* r, size_t table) {
  const auto* t = table_at(r, table);
  return t ? t->name.c_str() : nullptr;
}

size_t tf_report_column_count(const tf_report* r, size_t table) {
  const auto* t = table_at(r, table);
  return t ? t->columns.size() : 0;
}

const char* tf_report_column(const tf_report* r, size_t table, size_t column) {
  const auto* t = table_at(r, table);
  if (!t || column >= t->columns.size()) return nullptr;
  return t->columns[column].c_str();
}

size_t tf_report_row_count(const tf_report* r, size_t table) {
  const auto* t = table_at(r, table);
  return t ? t->rows.size() : 0;
}

const char* tf_report_cell(const tf_report* r, size_t table, size_t row,
                           size_t column) {
  const auto* t = table_at(r, table);
  if (!t || row >= t->rows.size() || column >= t->rows[row].size()) {
    return nullptr;
  }
  return t->rows[row][column].c_str();
}

size_t tf_report_summary_count(const tf_report* r) {
  return r ? r->value.summary.size() : 0;
}

const char* tf_report_summary_key(const tf_report* r, size_t i) {
  if (!r || i >= r->value.summary.size()) return nullptr;
  return r->value.summary[i].first.c_str();
}

const char* tf_report_summary_value(const tf_report* r, size_t i) {
  if (!r || i >= r->value.summary.size()) return nullptr;
  return r->value.summary[i].second.c_str();
}

const char* tf_report_summary_lookup(const tf_report* r, const char* key) {
  if (!r || !key) return nullptr;
  for (const auto& [k, v] : r->value.summary) {
    if (k == key) return v.c_str();
  }
  return nullptr;
}

}  // extern "C"
