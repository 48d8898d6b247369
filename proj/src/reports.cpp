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


#include "thompson/reports.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include "json.hpp"
#include "parallel.hpp"
#include "thompson/census.hpp"
#include "thompson/error.hpp"
#include "thompson/genfunc.hpp"
#include "thompson/group.hpp"
#include "thompson/rational.hpp"

namespace thompson::reports {

namespace {

using Row = std::vector<std::string>;
using words::alpha;
using words::beta;
using words::commutator;
using words::conjugate;
using words::inverse;
using words::power;
using words::x;

constexpr const char* kExactEnumeration = "[exact-enumeration]";
constexpr const char* kExactDp = "[exact-dp]";
constexpr const char* kExactNormalForm = "[exact-normal-form]";
constexpr const char* kCertified = "[certified-interval]";
constexpr const char* kDerivedLimit = "[derived-limit-formula]";

constexpr std::size_t kMaxKmax = 4096;

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string str(const mpz_class& v) { return v.get_str(); }

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

const char* mode_name(RunMode m) {
  switch (m) {
    case RunMode::enumerate:
      return "enumerate";
    case RunMode::dp:
      return "dp";
    case RunMode::both:
      return "both";
  }
  return "dp";
}

[[noreturn]] void bad(const std::string& what) {
  throw Error(Errc::invalid_argument, what);
}

// |q| upper bound over an interval, exact.
mpq_class abs_bound(const CertifiedInterval& iv) {
  return std::max(abs(iv.lo_exact()), abs(iv.hi_exact()));
}

CertifiedInterval constant(long v, const CertifiedInterval& like) {
  return lift(mpq_class(v), like);
}

std::vector<std::pair<std::string, std::string>> echo(const RunConfig& c) {
  std::vector<std::pair<std::string, std::string>> out;
  auto opt = [&](const char* key, const auto& v) {
    if (v) out.emplace_back(key, std::to_string(*v));
  };
  opt("n", c.n);
  opt("nmax", c.nmax);
  opt("k", c.k);
  opt("kmax", c.kmax);
  out.emplace_back("genset", c.genset);
  out.emplace_back("mode", mode_name(c.mode));
  out.emplace_back("tol", fmt_double(c.tol));
  out.emplace_back("trunc", std::to_string(c.truncation));
  out.emplace_back("cap", fmt_double(c.cap));
  out.emplace_back("digits", std::to_string(c.digits));
  if (c.command == "group-verify") {
    out.emplace_back("mn", std::to_string(c.mn));
    for (std::size_t i = 0; i < c.checks.size(); ++i) {
      out.emplace_back("check" + std::to_string(i + 1), c.checks[i]);
    }
  }
  if (c.command == "density") out.emplace_back("outer", yes_no(c.outer));
  if (c.command == "embed-verify") {
    out.emplace_back("perturb", yes_no(c.perturb));
    out.emplace_back("list", yes_no(c.list));
  }
  return out;
}

std::pair<std::string, std::string> split_check(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || text.find('=', eq + 1) != std::string::npos) {
    bad("--check expects \"lhs = rhs\", got \"" + text + "\"");
  }
  return {text.substr(0, eq), text.substr(eq + 1)};
}

std::vector<std::size_t> n_range(const RunConfig& c, std::size_t def) {
  std::size_t lo = 1, hi = def;
  if (c.n) lo = hi = *c.n;
  if (c.nmax) hi = *c.nmax;
  std::vector<std::size_t> out;
  for (std::size_t n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

std::vector<unsigned> k_range(const RunConfig& c, unsigned def) {
  unsigned lo = 0, hi = def;
  if (c.k) lo = hi = *c.k;
  if (c.kmax) hi = *c.kmax;
  std::vector<unsigned> out;
  for (unsigned k = lo; k <= hi; ++k) out.push_back(k);
  return out;
}

CensusOptions options(const RunConfig& c) {
  CensusOptions o;
  o.threads = c.threads;
  o.cap = c.cap;
  return o;
}

// Count series are shared by every n at a given k.
class FamilyCache {
 public:
  explicit FamilyCache(std::size_t degree) : degree_(degree) {}
  const CountSeriesFamily& get(unsigned k) {
    auto it = cache_.find(k);
    if (it == cache_.end()) {
      it = cache_.emplace(k, count_series(k, degree_)).first;
    }
    return it->second;
  }

 private:
  std::size_t degree_;
  std::map<unsigned, CountSeriesFamily> cache_;
};

ForestCounts counts_for(const BBParams& p, RunMode mode, FamilyCache& families,
                        const CensusOptions& opts) {
  switch (mode) {
    case RunMode::enumerate:
      return census_enumerate(p, opts);
    case RunMode::dp:
      return census_dp(families.get(p.k), p.n);
    case RunMode::both: {
      ForestCounts e = census_enumerate(p, opts);
      if (!(e == census_dp(families.get(p.k), p.n))) {
        throw Error(Errc::invariant_violation,
                    "enumeration and generating functions disagree on B(" +
                        std::to_string(p.n) + "," + std::to_string(p.k) + ")");
      }
      return e;
    }
  }
  return census_dp(families.get(p.k), p.n);
}

const char* counts_provenance(RunMode mode) {
  return mode == RunMode::dp ? kExactDp : kExactEnumeration;
}

// ---------------------------------------------------------------- group

struct Check {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool expect_equal = true;
  bool pass = false;
};

Check word_check(std::string name, const GeneratorWord& l,
                 const GeneratorWord& r, bool expect_equal = true) {
  Check c{std::move(name), to_string(l), to_string(r), expect_equal, false};
  c.pass = verify_relation(l, r) == expect_equal;
  return c;
}

Check element_check(std::string name, const NormalForm& l, const NormalForm& r,
                    bool expect_equal = true) {
  Check c{std::move(name), to_string(l), to_string(r), expect_equal, false};
  c.pass = (l == r) == expect_equal;
  return c;
}

Check commute_check(std::string name, const GeneratorWord& a,
                    const GeneratorWord& b) {
  return word_check(std::move(name), words::commuting_lhs(a, b),
                    words::commuting_rhs(a, b));
}

Report group_verify(const RunConfig& c) {
  const GeneratorWord x0 = x(0), x1 = x(1);
  const GeneratorWord r1l = conjugate(x1, power(x0, 2));
  const GeneratorWord r1r = conjugate(x1, x0 * x1);
  const GeneratorWord r2l = conjugate(x1, power(x0, 3));
  const GeneratorWord r2r = conjugate(x1, power(x0, 2) * x1);
  const GeneratorWord rel1 = r1l * inverse(r1r);
  const GeneratorWord rel2 = r2l * inverse(r2r);
  const GeneratorWord a = alpha(), b = beta();

  std::vector<Check> checks;
  checks.push_back(word_check("relator x1^(x0^2) = x1^(x0 x1)", r1l, r1r));
  checks.push_back(word_check("relator x1^(x0^3) = x1^(x0^2 x1)", r2l, r2r));
  checks.push_back(commute_check("alpha^beta <-> beta^alpha",
                                 conjugate(a, b), conjugate(b, a)));
  checks.push_back(commute_check("alpha^beta <-> beta^(alpha^2)",
                                 conjugate(a, b), conjugate(b, power(a, 2))));
  checks.push_back(commute_check("beta^alpha <-> alpha^(beta^2)",
                                 conjugate(b, a), conjugate(a, power(b, 2))));
  for (unsigned m = 1; m <= c.mn; ++m) {
    for (unsigned n = 1; n <= c.mn; ++n) {
      checks.push_back(commute_check(
          "alpha^(beta^" + std::to_string(m) + ") <-> beta^(alpha^" +
              std::to_string(n) + ")",
          conjugate(a, power(b, static_cast<int>(m))),
          conjugate(b, power(a, static_cast<int>(n)))));
    }
  }
  const Endomorphism tietze{b * inverse(a), inverse(a)};
  checks.push_back(element_check("relator 1 in alpha, beta is trivial",
                                 apply_endomorphism(tietze, rel1), {}));
  checks.push_back(element_check("relator 2 in alpha, beta is trivial",
                                 apply_endomorphism(tietze, rel2), {}));

  const Endomorphism s = symmetry_automorphism();
  checks.push_back(element_check("sigma(relator 1) = e",
                                 apply_endomorphism(s, rel1), {}));
  checks.push_back(element_check("sigma(relator 2) = e",
                                 apply_endomorphism(s, rel2), {}));
  checks.push_back(element_check(
      "sigma(sigma(x0)) = x0",
      apply_endomorphism(s, apply_endomorphism(s, x0)), normalize(x0)));
  checks.push_back(element_check(
      "sigma(sigma(x1)) = x1",
      apply_endomorphism(s, apply_endomorphism(s, x1)), normalize(x1)));
  checks.push_back(element_check("sigma(x1) = xbar1",
                                 apply_endomorphism(s, x1),
                                 normalize(words::xbar1())));
  checks.push_back(element_check("sigma([x0,x1]) != e",
                                 apply_endomorphism(s, commutator(x0, x1)),
                                 {}, false));
  checks.push_back(word_check("[x0,x1] = x2^-1 x1", commutator(x0, x1),
                              words::x_inv(2) * x1));
  checks.push_back(word_check("[x0,x1] = x1 x3^-1", commutator(x0, x1),
                              x1 * words::x_inv(3)));
  for (Index n = 2; n <= 5; ++n) {
    checks.push_back(word_check(
        "x" + std::to_string(n) + " = x1^(x0^" + std::to_string(n - 1) + ")",
        x(n), conjugate(x1, power(x0, static_cast<int>(n - 1)))));
  }
  for (const std::string& text : c.checks) {
    const auto [l, r] = split_check(text);
    checks.push_back(word_check("user: " + text, parse_word(l), parse_word(r)));
  }

  Report rep;
  Table t{"checks", {"check", "lhs", "rhs", "expected", "result"}, {}};
  std::size_t passed = 0;
  std::string first_failed;
  for (const Check& ch : checks) {
    t.rows.push_back({ch.name, ch.lhs, ch.rhs,
                      ch.expect_equal ? "equal" : "distinct",
                      ch.pass ? "pass" : "fail"});
    if (ch.pass) {
      ++passed;
    } else if (first_failed.empty()) {
      first_failed = ch.name;
    }
  }
  rep.tables.push_back(std::move(t));
  rep.summary = {{"checks", std::to_string(checks.size())},
                 {"passed", std::to_string(passed)},
                 {"first_failed", first_failed.empty() ? "none" : first_failed}};
  rep.provenance = {std::string("checks: ") + kExactNormalForm};
  if (!first_failed.empty()) {
    rep.status = Status::not_certified;
    rep.message = "relation failed: " + first_failed;
  }
  return rep;
}

// ---------------------------------------------------------------- xi

std::vector<LimitFractions> sweep_limits(unsigned k_lo, unsigned k_hi,
                                         const RunConfig& c) {
  std::vector<LimitFractions> out(k_hi + 1 - k_lo);
  detail::parallel_for(out.size(), c.threads, [&](std::size_t i) {
    out[i] = limit_fractions(k_lo + static_cast<unsigned>(i), c.tol);
  });
  return out;
}

Report xi_report(const RunConfig& c) {
  const unsigned kmax = c.kmax.value_or(64);
  const int d = c.digits;
  const std::vector<LimitFractions> lf =
      kmax >= 1 ? sweep_limits(1, kmax, c) : std::vector<LimitFractions>{};
  const CertifiedInterval xi0 = xi(0, c.tol);

  Table t{"xi",
          {"k", "xi_lo", "xi_hi", "density_standard", "density_symmetric",
           "isolated_limit", "bprime_density", "doubling_ratio"},
          {}};
  // Phi_{-1} = 0: every forest is isolated and B' is empty.
  t.rows.push_back({"0", xi0.lo_decimal(d), xi0.hi_decimal(d),
                    decimal(2, d), decimal(0, d), decimal(1, d), "NA",
                    decimal(3, d)});
  bool decreasing = true, above = true;
  double widest = xi0.width();
  const CertifiedInterval* prev = &xi0;
  for (const LimitFractions& f : lf) {
    t.rows.push_back({std::to_string(f.k), f.xi.lo_decimal(d),
                      f.xi.hi_decimal(d), f.density_standard.mid_decimal(d),
                      f.density_symmetric.mid_decimal(d),
                      f.isolated.mid_decimal(d), f.bprime_density.mid_decimal(d),
                      f.doubling_ratio.mid_decimal(d)});
    decreasing = decreasing && f.xi.less_than(*prev);
    above = above && f.xi.greater_than(mpq_class(1, 4));
    widest = std::max(widest, f.xi.width());
    prev = &f.xi;
  }
  Report rep;
  rep.tables.push_back(std::move(t));
  rep.summary = {{"rows", std::to_string(kmax + 1)},
                 {"strictly_decreasing", yes_no(decreasing)},
                 {"all_above_quarter", yes_no(above)},
                 {"max_width", fmt_double(widest)}};
  rep.provenance = {std::string("xi_lo, xi_hi: ") + kCertified,
                    std::string("limit columns: ") + kCertified + " " +
                        kDerivedLimit};
  if (!decreasing || !above) {
    rep.status = Status::not_certified;
    rep.message = "xi sequence not certified decreasing and above 1/4";
  }
  return rep;
}

// ---------------------------------------------------------------- density

Report density_report(const RunConfig& c) {
  const GenSet genset = GenSet::parse(c.genset);
  const bool custom = genset.kind() == GenSetKind::custom;
  const bool extended = genset.kind() == GenSetKind::extended;
  const int d = c.digits;
  FamilyCache families(c.truncation);
  const CensusOptions opts = options(c);

  Table t{"density",
          {"n", "k", "genset", "vertices", "degree_sum", "density_num",
           "density_den", "density", "cheeger", "outer_boundary", "isolated",
           "bprime_density_num", "bprime_density_den", "bprime_density",
           "doubling_upper_bound", "doubling_refined_bound", "mode"},
          {}};
  const auto ns = n_range(c, 1);
  const auto ks = k_range(c, 0);
  std::vector<mpq_class> last_density;
  for (unsigned k : ks) {
    for (std::size_t n : ns) {
      const BBParams p{n, k};
      const ForestCounts counts = counts_for(p, c.mode, families, opts);
      std::optional<Embedding> emb;
      if (custom || c.outer) emb = embed(p);
      const SubgraphStats s = custom ? stats_elements(emb->elements, genset)
                                     : stats_from_counts(counts, genset);
      if (emb && !custom) {
        if (!(stats_elements(emb->elements, genset) == s)) {
          throw Error(Errc::invariant_violation,
                      "forest and element statistics disagree");
        }
      }
      const SubgraphStats bp = bprime_from_counts(counts);
      const DoublingBound db = doubling_from_counts(counts);
      const bool bp_empty = bp.vertices == 0;
      t.rows.push_back(
          {std::to_string(n), std::to_string(k), genset.name(),
           str(s.vertices), str(s.degree_sum), str(s.density.get_num()),
           str(s.density.get_den()), decimal(s.density, d),
           str(s.cheeger_total),
           emb ? std::to_string(outer_boundary_exact(*emb, genset)) : "NA",
           str(counts.isolated),
           bp_empty ? "NA" : str(bp.density.get_num()),
           bp_empty ? "NA" : str(bp.density.get_den()),
           bp_empty ? "NA" : decimal(bp.density, d),
           extended ? str(db.upper_bound) : "NA",
           extended ? str(db.refined_bound) : "NA",
           custom ? "embedding" : mode_name(c.mode)});
      last_density.push_back(s.density);
    }
  }
  Report rep;
  rep.tables.push_back(std::move(t));
  rep.summary = {{"rows", std::to_string(last_density.size())}};
  rep.provenance = {std::string("counts: ") + counts_provenance(c.mode)};
  if (c.outer || custom) {
    rep.provenance.push_back(std::string("outer_boundary, custom sets: ") +
                             kExactNormalForm);
  }
  // Limit comparison for a single-k sweep over n.
  if (ks.size() == 1 && ks[0] >= 1 && !custom && !extended) {
    const LimitFractions lf = limit_fractions(ks[0], c.tol);
    const CertifiedInterval& lim = genset.kind() == GenSetKind::standard
                                       ? lf.density_standard
                                       : lf.density_symmetric;
    const mpq_class gap = abs(last_density.back() - lim.lo_exact());
    std::size_t tail = 0;
    for (std::size_t i = 1; i < last_density.size(); ++i) {
      if (last_density[i] < last_density[i - 1]) tail = i;
    }
    rep.summary.emplace_back("limit_density", lim.mid_decimal(d));
    rep.summary.emplace_back("gap_at_last_n", decimal(gap, d));
    rep.summary.emplace_back("nondecreasing_from_n", std::to_string(ns[tail]));
    rep.provenance.push_back(std::string("limit_density: ") + kCertified +
                             " " + kDerivedLimit);
  }
  return rep;
}

// ---------------------------------------------------------------- theorem 1

Report theorem1_report(const RunConfig& c) {
  const unsigned kmax = c.kmax.value_or(256);
  const std::size_t n_valid = c.n.value_or(512);
  const unsigned k_valid = c.k.value_or(3);
  const int d = c.digits;
  const std::vector<LimitFractions> lf = sweep_limits(1, kmax, c);

  Table t{"theorem1",
          {"k", "xi_lo", "xi_hi", "p_inf_lo", "p_inf_hi", "quarter_xi_cubed_lo",
           "quarter_xi_cubed_hi", "swap_bound_holds", "bprime_density_lo",
           "bprime_density_hi", "exceeds_3"},
          {}};
  std::optional<unsigned> witness;
  bool swap_all = true;
  const LimitFractions* sup = nullptr;
  for (const LimitFractions& f : lf) {
    const CertifiedInterval q =
        lift(mpq_class(1, 4), f.xi) * f.xi * f.xi * f.xi;
    const bool swap = q.less_than(f.isolated);
    const bool above3 = f.bprime_density.greater_than(3);
    swap_all = swap_all && swap;
    if (above3 && !witness) witness = f.k;
    if (!sup || mpfr_cmp(f.bprime_density.lo(), sup->bprime_density.lo()) > 0) {
      sup = &f;
    }
    t.rows.push_back({std::to_string(f.k), f.xi.lo_decimal(d),
                      f.xi.hi_decimal(d), f.isolated.lo_decimal(d),
                      f.isolated.hi_decimal(d), q.lo_decimal(d),
                      q.hi_decimal(d), yes_no(swap),
                      f.bprime_density.lo_decimal(d),
                      f.bprime_density.hi_decimal(d), yes_no(above3)});
  }

  Table v{"isolated_validation",
          {"n", "k", "beta", "isolated", "isolated_fraction", "p_inf",
           "abs_difference"},
          {}};
  FamilyCache families(std::max(c.truncation, n_valid));
  mpq_class worst = 0;
  for (unsigned k = 1; k <= std::min(k_valid, kmax); ++k) {
    const ForestCounts counts = census_dp(families.get(k), n_valid);
    const mpq_class frac = ratio(counts.isolated, counts.beta);
    const CertifiedInterval& p = lf[k - 1].isolated;
    const mpq_class diff =
        std::max(abs(frac - p.lo_exact()), abs(frac - p.hi_exact()));
    worst = std::max(worst, diff);
    v.rows.push_back({std::to_string(n_valid), std::to_string(k),
                      str(counts.beta), str(counts.isolated), decimal(frac, d),
                      p.mid_decimal(d), decimal(diff, d)});
  }

  const LimitFractions& last = lf.back();
  const CertifiedInterval q_last =
      lift(mpq_class(1, 4), last.xi) * last.xi * last.xi * last.xi;
  const CertifiedInterval q_gap = q_last - lift(mpq_class(1, 256), q_last);
  const mpq_class p0(1, 260);

  Report rep;
  rep.tables.push_back(std::move(t));
  rep.tables.push_back(std::move(v));
  rep.summary = {
      {"first_witness_k", witness ? std::to_string(*witness) : "none"},
      {"sup_k", std::to_string(sup->k)},
      {"sup_bprime_density_lo", sup->bprime_density.lo_decimal(d)},
      {"sup_exceeds_3.011", yes_no(sup->bprime_density.greater_than(
                                mpq_class(3011, 1000)))},
      {"swap_bound_all_k", yes_no(swap_all)},
      {"quarter_xi_cubed_at_kmax", q_last.mid_decimal(d)},
      {"quarter_xi_cubed_gap_to_1/256", decimal(abs_bound(q_gap), d)},
      {"p_inf_at_kmax_exceeds_1/260", yes_no(last.isolated.greater_than(p0))},
      {"density_bound_from_1/260", decimal(3 / (1 - p0), d)},
      {"isolated_validation_max_difference", decimal(worst, d)},
  };
  rep.provenance = {
      std::string("theorem1: ") + kCertified + " " + kDerivedLimit,
      std::string("isolated_validation: ") + kExactDp};
  if (!witness) {
    rep.status = Status::not_certified;
    rep.message = "no k <= " + std::to_string(kmax) +
                  " certifies a B' density above 3";
  } else if (!swap_all) {
    rep.status = Status::not_certified;
    rep.message = "p_inf >= xi^3 / 4 not certified for every k";
  }
  return rep;
}

// ---------------------------------------------------------------- theorem 2

Report theorem2_report(const RunConfig& c) {
  const unsigned kmax = c.kmax.value_or(64);
  const std::size_t n_small = c.nmax.value_or(c.n.value_or(10));
  const unsigned k_small = c.k.value_or(3);
  const int d = c.digits;

  std::vector<CertifiedInterval> xs(kmax);
  detail::parallel_for(kmax, c.threads, [&](std::size_t i) {
    xs[i] = xi(static_cast<unsigned>(i + 1), c.tol);
  });

  Table t{"theorem2",
          {"k", "xi_lo", "xi_hi", "three_xi_lo", "three_xi_hi", "below_one",
           "growth_lo", "growth_hi"},
          {}};
  unsigned k0 = 0;  // 0: none
  bool growth_decreasing = true;
  std::optional<CertifiedInterval> prev_growth;
  CertifiedInterval growth_last;
  for (unsigned k = 1; k <= kmax; ++k) {
    const CertifiedInterval& x = xs[k - 1];
    const CertifiedInterval three = constant(3, x) * x;
    const CertifiedInterval growth = constant(1, x) + three;
    const bool below = three.less_than(mpq_class(1));
    if (!below) {
      k0 = 0;
    } else if (k0 == 0) {
      k0 = k;
    }
    if (prev_growth) {
      growth_decreasing = growth_decreasing && growth.less_than(*prev_growth);
    }
    prev_growth = growth;
    growth_last = growth;
    t.rows.push_back({std::to_string(k), x.lo_decimal(d), x.hi_decimal(d),
                      three.lo_decimal(d), three.hi_decimal(d), yes_no(below),
                      growth.lo_decimal(d), growth.hi_decimal(d)});
  }

  Table b{"outer_boundary",
          {"n", "k", "vertices", "outer_boundary", "cheeger", "upper_bound",
           "refined_bound", "within_upper_bound", "within_refined_bound",
           "outer_ratio", "upper_ratio"},
          {}};
  const GenSet ext = GenSet::extended();
  bool within_all = true, refined_all = true;
  std::string first_violation;
  FamilyCache families(std::max<std::size_t>(c.truncation, n_small));
  for (std::size_t n = 1; n <= n_small; ++n) {
    for (unsigned k = 0; k <= k_small; ++k) {
      const BBParams p{n, k};
      const ForestCounts counts = census_dp(families.get(k), n);
      const DoublingBound db = doubling_from_counts(counts);
      const Embedding e = embed(p);
      const mpz_class outer = outer_boundary_exact(e, ext);
      const SubgraphStats s = stats_from_counts(counts, ext);
      const bool within = outer <= db.upper_bound;
      const bool refined = outer <= db.refined_bound;
      if (!within && first_violation.empty()) {
        first_violation = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                          ": outer " + str(outer) + " > bound " +
                          str(db.upper_bound);
      }
      within_all = within_all && within;
      refined_all = refined_all && refined;
      b.rows.push_back({std::to_string(n), std::to_string(k), str(counts.beta),
                        str(outer), str(s.cheeger_total), str(db.upper_bound),
                        str(db.refined_bound), yes_no(within), yes_no(refined),
                        decimal(ratio(outer, counts.beta), d),
                        decimal(db.ratio, d)});
    }
  }

  const mpq_class seven_quarters(7, 4);
  Report rep;
  rep.tables.push_back(std::move(t));
  rep.tables.push_back(std::move(b));
  rep.summary = {
      {"k0", k0 ? std::to_string(k0) : "none"},
      {"growth_strictly_decreasing", yes_no(growth_decreasing)},
      {"growth_at_kmax", growth_last.mid_decimal(d)},
      {"growth_gap_to_7/4",
       decimal(abs_bound(growth_last - lift(seven_quarters, growth_last)), d)},
      {"outer_within_upper_bound_all", yes_no(within_all)},
      {"outer_within_refined_bound_all", yes_no(refined_all)},
      {"first_upper_bound_violation",
       first_violation.empty() ? "none" : first_violation},
  };
  rep.provenance = {std::string("theorem2: ") + kCertified,
                    std::string("outer_boundary: ") + kExactNormalForm + " " +
                        kExactDp};
  if (!k0) {
    rep.status = Status::not_certified;
    rep.message = "3 xi_k < 1 not certified for any k <= " +
                  std::to_string(kmax);
  } else if (!within_all) {
    rep.status = Status::not_certified;
    rep.message = "outer boundary exceeds the categorized bound at " +
                  first_violation;
  }
  return rep;
}

// ---------------------------------------------------------------- embedding

bool stats_transport(const Embedding& e) {
  const ForestCounts counts = census_enumerate(e.params);
  for (const GenSet& g :
       {GenSet::standard(), GenSet::symmetric(), GenSet::extended()}) {
    if (!(stats_elements(e.elements, g) == stats_from_counts(counts, g))) {
      return false;
    }
  }
  return true;
}

Report embed_report(const RunConfig& c) {
  Report rep;
  if (c.list) {
    const Embedding e = embed({*c.n, *c.k});
    Table t{"embedding", {"forest", "element"}, {}};
    for (std::size_t i = 0; i < e.forests.size(); ++i) {
      t.rows.push_back({encode(e.forests[i]), to_string(e.elements[i])});
    }
    rep.tables.push_back(std::move(t));
    rep.summary = {{"forests", std::to_string(e.forests.size())},
                   {"edges_checked", std::to_string(e.edges_checked)}};
    rep.provenance = {std::string("embedding: ") + kExactNormalForm};
    return rep;
  }

  const std::size_t nmax = c.nmax.value_or(c.n.value_or(10));
  const unsigned kmax = c.kmax.value_or(c.k.value_or(3));
  Table t{"embed_verify",
          {"n", "k", "forests", "distinct_elements", "edges_checked",
           "consistent", "stats_match", "detail"},
          {}};
  if (c.perturb) t.name = "embed_verify_perturbed";
  std::size_t failures = 0, detected = 0, detectable = 0;
  for (std::size_t n = 1; n <= nmax; ++n) {
    for (unsigned k = 0; k <= kmax; ++k) {
      const BBParams p{n, k};
      try {
        const Embedding e =
            c.perturb ? embed(p, perturbed_apply) : embed(p);
        const bool match = c.perturb || stats_transport(e);
        if (!match) ++failures;
        t.rows.push_back({std::to_string(n), std::to_string(k),
                          std::to_string(e.forests.size()),
                          std::to_string(e.elements.size()),
                          std::to_string(e.edges_checked), "true",
                          c.perturb ? "NA" : yes_no(match), ""});
      } catch (const Error& err) {
        if (err.code() != Errc::invariant_violation) throw;
        if (c.perturb) {
          ++detected;
        } else {
          ++failures;
        }
        t.rows.push_back({std::to_string(n), std::to_string(k), "NA", "NA",
                          "NA", "false", "NA", err.what()});
      }
      // The perturbation only touches x1, which needs a caret.
      if (n >= 2 && k >= 1) ++detectable;
    }
  }
  rep.tables.push_back(std::move(t));
  rep.provenance = {std::string("embed_verify: ") + kExactNormalForm + " " +
                    kExactEnumeration};
  if (c.perturb) {
    rep.summary = {{"perturbed_cases_rejected", std::to_string(detected)},
                   {"perturbed_cases_with_carets", std::to_string(detectable)}};
    if (detected < detectable) {
      rep.status = Status::not_certified;
      rep.message = "perturbed action rule went undetected";
    }
  } else {
    rep.summary = {{"cases", std::to_string(nmax * (kmax + 1))},
                   {"failures", std::to_string(failures)}};
    if (failures > 0) {
      rep.status = Status::invariant_violation;
      rep.message = "embedding check failed";
    }
  }
  return rep;
}

// ---------------------------------------------------------------- forests

Report enumerate_report(const RunConfig& c) {
  const BBParams p{*c.n, *c.k};
  Table t{"forests", {"index", "forest", "trees", "mark", "marked_height"}, {}};
  const auto all = enumerate_bb(p, c.cap);
  for (std::size_t i = 0; i < all.size(); ++i) {
    const MarkedForest& f = all[i];
    t.rows.push_back({std::to_string(i), encode(f), std::to_string(f.size()),
                      std::to_string(f.mark()),
                      std::to_string(f.marked().height())});
  }
  Report rep;
  rep.tables.push_back(std::move(t));
  rep.summary = {{"count", std::to_string(all.size())},
                 {"beta", str(psi(p.k, std::max<std::size_t>(p.n, 1))[p.n])}};
  rep.provenance = {std::string("forests: ") + kExactEnumeration,
                    std::string("beta: ") + kExactDp};
  return rep;
}

Report isolated_report(const RunConfig& c) {
  const int d = c.digits;
  FamilyCache families(c.truncation);
  const CensusOptions opts = options(c);
  Table t{"isolated",
          {"n", "k", "beta", "trivial_marked", "x1inv_blocked", "leftmost",
           "rightmost", "isolated", "isolated_fraction", "mode"},
          {}};
  const auto ns = n_range(c, 1);
  const auto ks = k_range(c, 0);
  mpq_class last = 0;
  for (unsigned k : ks) {
    for (std::size_t n : ns) {
      const ForestCounts f = counts_for({n, k}, c.mode, families, opts);
      last = ratio(f.isolated, f.beta);
      t.rows.push_back({std::to_string(n), std::to_string(k), str(f.beta),
                        str(f.trivial_marked),
                        str(f.blocked_for(ActionLabel::x1_inv)),
                        str(f.leftmost), str(f.rightmost), str(f.isolated),
                        decimal(last, d), mode_name(c.mode)});
    }
  }
  Report rep;
  rep.tables.push_back(std::move(t));
  rep.provenance = {std::string("isolated: ") + counts_provenance(c.mode)};
  if (ks.size() == 1 && ks[0] >= 1) {
    const LimitFractions lf = limit_fractions(ks[0], c.tol);
    rep.summary.emplace_back("p_inf", lf.isolated.mid_decimal(d));
    rep.summary.emplace_back(
        "gap_at_last_n",
        decimal(abs(last - lf.isolated.lo_exact()), d));
    rep.provenance.push_back(std::string("p_inf: ") + kCertified + " " +
                             kDerivedLimit);
  }
  return rep;
}

// ---------------------------------------------------------------- rendering

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void csv_line(std::ostringstream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) os << ',';
    os << csv_cell(cells[i]);
  }
  os << '\n';
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> all{
      "group-verify", "xi",           "density",   "theorem1",
      "theorem2",     "embed-verify", "enumerate", "isolated"};
  return all;
}

std::string decimal(const mpq_class& q, int digits) {
  if (digits < 0) bad("digits must be non-negative");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const mpq_class scaled = abs(q) * scale + mpq_class(1, 2);
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  std::string s = r.get_str();
  const auto width = static_cast<std::size_t>(digits) + 1;
  if (s.size() < width) s.insert(0, width - s.size(), '0');
  if (digits > 0) s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  if (q < 0 && r != 0) s.insert(0, "-");
  return s;
}

void validate(const RunConfig& c) {
  const auto& cmds = commands();
  if (std::find(cmds.begin(), cmds.end(), c.command) == cmds.end()) {
    bad("unknown command \"" + c.command + "\"");
  }
  const std::string& cmd = c.command;
  auto uses = [&](std::initializer_list<const char*> list) {
    for (const char* s : list) {
      if (cmd == s) return true;
    }
    return false;
  };
  if (!(c.tol > 0.0 && c.tol < 1.0)) bad("--tol must lie in (0, 1)");
  if (c.digits < 1 || c.digits > 200) bad("--digits must lie in [1, 200]");
  if (c.truncation < 1) bad("--trunc must be >= 1");
  if (!(c.cap > 0.0)) bad("--cap must be positive");
  if (c.threads < 1) bad("--threads must be >= 1");
  if (c.n && *c.n < 1) bad("--n must be >= 1");
  if (c.nmax && *c.nmax < 1) bad("--nmax must be >= 1");
  if (c.n && c.nmax && *c.nmax < *c.n) bad("--nmax must be >= --n");
  if (c.kmax && *c.kmax > kMaxKmax) {
    bad("--kmax must be <= " + std::to_string(kMaxKmax));
  }
  if (c.k && *c.k > kMaxKmax) bad("--k must be <= " + std::to_string(kMaxKmax));
  if (c.mode == RunMode::both && !uses({"density", "isolated"})) {
    bad("--mode both applies to density and isolated only");
  }
  if (!c.checks.empty() && cmd != "group-verify") {
    bad("--check applies to group-verify only");
  }
  if (c.outer && cmd != "density") bad("--outer applies to density only");
  if ((c.perturb || c.list) && cmd != "embed-verify") {
    bad("--perturb and --list apply to embed-verify only");
  }
  if (c.genset != "standard" && cmd != "density") {
    bad("--genset applies to density only");
  }

  if (cmd == "group-verify") {
    if (c.mn < 1 || c.mn > 12) bad("--mn must lie in [1, 12]");
    for (const std::string& text : c.checks) {
      const auto [l, r] = split_check(text);
      parse_word(l);
      parse_word(r);
    }
  } else if (cmd == "xi") {
    if (c.n || c.nmax || c.k) bad("xi takes --kmax only");
  } else if (cmd == "theorem1") {
    if (c.nmax) bad("theorem1 takes --n for the validation size, not --nmax");
    if (c.kmax && *c.kmax < 1) bad("--kmax must be >= 1");
    if (c.k && *c.k < 1) bad("--k must be >= 1");
  } else if (cmd == "theorem2") {
    if (c.n && c.nmax) bad("theorem2 takes one of --n and --nmax");
    if (c.kmax && *c.kmax < 1) bad("--kmax must be >= 1");
    if (c.nmax.value_or(c.n.value_or(10)) > kDefaultEmbedCap) {
      bad("theorem2 small cases need n <= " + std::to_string(kDefaultEmbedCap));
    }
  } else if (cmd == "embed-verify") {
    if (c.list) {
      if (!c.n || !c.k || c.nmax || c.kmax) {
        bad("--list needs exactly --n and --k");
      }
      if (c.perturb) bad("--list and --perturb conflict");
    } else {
      if ((c.n && c.nmax) || (c.k && c.kmax)) {
        bad("embed-verify takes --nmax/--kmax (or --n/--k as their values)");
      }
    }
    if (c.nmax.value_or(c.n.value_or(10)) > kDefaultEmbedCap) {
      bad("embedding needs n <= " + std::to_string(kDefaultEmbedCap));
    }
  } else {  // density, enumerate, isolated
    if (!c.n && !c.nmax) bad(cmd + " needs --n or --nmax");
    if (c.n && c.nmax) bad("--n and --nmax conflict");
    if (!c.k && !c.kmax) bad(cmd + " needs --k or --kmax");
    if (c.k && c.kmax) bad("--k and --kmax conflict");
    const std::size_t top = c.nmax.value_or(c.n.value_or(1));
    if (cmd == "enumerate") {
      if (c.nmax || c.kmax) bad("enumerate takes a single --n and --k");
    } else if (c.mode != RunMode::enumerate && top > c.truncation) {
      bad("n = " + std::to_string(top) + " exceeds --trunc " +
          std::to_string(c.truncation));
    }
    if (cmd == "density") {
      const GenSet g = GenSet::parse(c.genset);
      if ((c.outer || g.kind() == GenSetKind::custom) &&
          top > kDefaultEmbedCap) {
        bad("outer boundaries and custom sets need n <= " +
            std::to_string(kDefaultEmbedCap));
      }
    }
  }
}

Report run(const RunConfig& c) {
  Report rep;
  try {
    validate(c);
    if (c.command == "group-verify") {
      rep = group_verify(c);
    } else if (c.command == "xi") {
      rep = xi_report(c);
    } else if (c.command == "density") {
      rep = density_report(c);
    } else if (c.command == "theorem1") {
      rep = theorem1_report(c);
    } else if (c.command == "theorem2") {
      rep = theorem2_report(c);
    } else if (c.command == "embed-verify") {
      rep = embed_report(c);
    } else if (c.command == "enumerate") {
      rep = enumerate_report(c);
    } else {
      rep = isolated_report(c);
    }
  } catch (const Error& e) {
    rep.tables.clear();
    rep.summary.clear();
    rep.message = e.what();
    switch (e.code()) {
      case Errc::invalid_argument:
      case Errc::parse_error:
      case Errc::cap_exceeded:
        rep.status = Status::invalid_config;
        break;
      case Errc::precision_exhausted:
        rep.status = Status::not_certified;
        break;
      case Errc::invariant_violation:
        rep.status = Status::invariant_violation;
        break;
    }
  }
  rep.command = c.command;
  rep.config = echo(c);
  return rep;
}

std::string render_csv(const Report& report) {
  std::ostringstream os;
  for (std::size_t i = 0; i < report.tables.size(); ++i) {
    const Table& t = report.tables[i];
    if (i > 0) os << "\n# table: " << t.name << '\n';
    csv_line(os, t.columns);
    for (const auto& row : t.rows) csv_line(os, row);
  }
  return os.str();
}

std::string render_json(const Report& report) {
  using nlohmann::ordered_json;
  auto rows = [](const Table& t) {
    ordered_json arr = ordered_json::array();
    for (const auto& row : t.rows) {
      ordered_json obj = ordered_json::object();
      for (std::size_t j = 0; j < t.columns.size(); ++j) {
        obj[t.columns[j]] = row[j];
      }
      arr.push_back(std::move(obj));
    }
    return arr;
  };
  ordered_json j = ordered_json::object();
  ordered_json config = ordered_json::object();
  for (const auto& [key, value] : report.config) config[key] = value;
  j["meta"] = {{"version", kVersion},
               {"command", report.command},
               {"config", config}};
  j["rows"] = report.tables.empty() ? ordered_json::array()
                                    : rows(report.tables.front());
  ordered_json extra = ordered_json::object();
  for (std::size_t i = 1; i < report.tables.size(); ++i) {
    extra[report.tables[i].name] = rows(report.tables[i]);
  }
  j["tables"] = extra;
  ordered_json summary = ordered_json::object();
  for (const auto& [key, value] : report.summary) summary[key] = value;
  j["summary"] = summary;
  j["provenance"] = report.provenance;
  j["status"] = static_cast<int>(report.status);
  j["message"] = report.message;
  return j.dump(2) + "\n";
}

std::string render_summary(const Report& report) {
  std::ostringstream os;
  for (const auto& [key, value] : report.summary) {
    os << key << ": " << value << '\n';
  }
  for (const std::string& p : report.provenance) {
    os << "provenance: " << p << '\n';
  }
  if (!report.message.empty()) os << "message: " << report.message << '\n';
  return os.str();
}

}  // namespace thompson::reports
