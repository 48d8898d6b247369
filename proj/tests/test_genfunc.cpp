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


#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "thompson/error.hpp"
#include "thompson/forest.hpp"
#include "thompson/genfunc.hpp"

using namespace thompson;

namespace {

TruncatedSeries from(std::size_t degree, std::vector<long> cs) {
  TruncatedSeries s(degree);
  for (std::size_t i = 0; i < cs.size() && i <= degree; ++i) s[i] = cs[i];
  return s;
}

// beta_{n,k} by summing over the leaf count of the marked tree and the two
// sides, with sequences of trees counted by a plain DP.
std::uint64_t beta_oracle(std::size_t n, int k) {
  std::vector<std::uint64_t> seq(n + 1, 0);  // forests with j leaves
  seq[0] = 1;
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t a = 1; a <= j; ++a) {
      seq[j] += oracle::count_trees(a, k) * seq[j - a];
    }
  }
  std::uint64_t total = 0;
  for (std::size_t m = 1; m <= n; ++m) {
    const std::uint64_t t = oracle::count_trees(m, k);
    for (std::size_t l = 0; l + m <= n; ++l) {
      total += seq[l] * t * seq[n - m - l];
    }
  }
  return total;
}

}  // namespace

TEST_CASE("series arithmetic") {
  const auto a = from(5, {0, 1, 1});
  CHECK(a * a == from(5, {0, 0, 1, 2, 1}));
  CHECK(geometric(TruncatedSeries::z(5)) == from(5, {1, 1, 1, 1, 1, 1}));
  CHECK(geometric(a) * (TruncatedSeries::one(5) - a) == TruncatedSeries::one(5));
  CHECK_THROWS_AS(geometric(TruncatedSeries::one(5)), Error);
  CHECK((a * a).degree() == 5);
  CHECK(a - a == TruncatedSeries::zero(5));
}

TEST_CASE("phi") {
  CHECK(phi(0, 6) == TruncatedSeries::z(6));
  CHECK(phi(1, 6) == from(6, {0, 1, 1}));
  CHECK(phi(2, 6) == from(6, {0, 1, 1, 2, 1}));
  for (unsigned k = 0; k <= 12; ++k) {
    const TruncatedSeries p = phi(k, 40);
    for (unsigned n = 0; n <= k; ++n) CHECK(p[n + 1] == catalan(n));
    CHECK(p[0] == 0);
    for (std::size_t n = 1; n <= 14; ++n) {
      CHECK(p[n] == oracle::count_trees(n, static_cast<int>(k)));
    }
  }
  CHECK_THROWS_AS(phi(1, 0), Error);
}

TEST_CASE("catalan") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(4) == 14);
  CHECK(catalan(4) == enumerate_trees(5, 4).size());
  mpz_class c = 1;
  for (unsigned n = 0; n < 60; ++n) {
    CHECK(catalan(n) == c);
    c = c * 2 * (2 * n + 1) / (n + 2);
  }
}

TEST_CASE("psi counts B(n, k)") {
  const TruncatedSeries p0 = psi(0, 30);
  for (std::size_t n = 0; n <= 30; ++n) CHECK(p0[n] == n);
  const TruncatedSeries p1 = psi(1, 10);
  CHECK(p1[1] == 1);
  CHECK(p1[2] == 3);
  CHECK(p1[3] == 7);
  for (unsigned k = 0; k <= 4; ++k) {
    const TruncatedSeries p = psi(k, 16);
    for (std::size_t n = 1; n <= 16; ++n) {
      CHECK(p[n] == beta_oracle(n, static_cast<int>(k)));
    }
  }
  CHECK(psi(4, 14)[14] == 1433465);
}

TEST_CASE("count series: small cases and per-label equalities") {
  const CountSeriesFamily f = count_series(1, 10);
  CHECK(f.trivial_marked[2] == 2);
  CHECK(f.x1inv_blocked[2] == 2);
  CHECK(f.beta[2] == 3);
  for (unsigned k = 0; k <= 6; ++k) {
    const CountSeriesFamily c = count_series(k, 64);
    CHECK(c.beta == psi(k, 64));
    CHECK(c.trivial_marked == c.x1inv_blocked);
    CHECK(c.trivial_marked == c.x1barinv_blocked);
    for (std::size_t n = 0; n <= 64; ++n) {
      for (const TruncatedSeries* s :
           {&c.trivial_marked, &c.marked_leftmost, &c.marked_rightmost,
            &c.isolated}) {
        CHECK((*s)[n] >= 0);
        CHECK((*s)[n] <= c.beta[n]);
      }
    }
  }
  // k = 0: every forest is all leaves and isolated.
  const CountSeriesFamily z = count_series(0, 20);
  for (std::size_t n = 1; n <= 20; ++n) CHECK(z.isolated[n] == n);
}

TEST_CASE("catalan closed form") {
  CHECK(catalan_series_check(1));
  CHECK(catalan_series_check(10));
  CHECK(catalan_series_check(200));
  const auto n = catalan_prefix_exceeding(mpq_class(13, 50), 1, 100000);
  REQUIRE(n.has_value());
  CHECK(*n > 10);
  // At z = 1/4 the limit is exactly 1/2, never exceeded.
  CHECK_FALSE(catalan_prefix_exceeding(mpq_class(1, 4), mpq_class(1, 2), 3000));
}

TEST_CASE("xi: exact and golden values") {
  const CertifiedInterval x0 = xi(0, 1e-20);
  CHECK(x0.is_point());
  CHECK(x0.contains(mpq_class(1)));

  const CertifiedInterval x1 = xi(1, 1e-15);
  CHECK(x1.width() <= 1e-15);
  // Independent certificate: z + z^2 - 1 changes sign across the enclosure.
  const mpq_class lo = x1.lo_exact(), hi = x1.hi_exact();
  CHECK(lo + lo * lo < 1);
  CHECK(hi + hi * hi > 1);
  CHECK(std::abs(std::stod(x1.mid_decimal(18)) - 0.6180339887498949) < 1e-12);
  CHECK(x1.lo_decimal(10) == "0.6180339887");
}

TEST_CASE("xi: monotone, above one quarter, nested under refinement") {
  CertifiedInterval prev = xi(0, 1e-30);
  for (unsigned k = 1; k <= 64; ++k) {
    const CertifiedInterval cur = xi(k, 1e-30);
    CHECK(cur.less_than(prev));
    CHECK(cur.greater_than(mpq_class(1, 4)));
    CHECK(phi_at(k, cur).contains(mpq_class(1)));
    const CertifiedInterval root =
        cur + sqr(phi_at(k - 1, cur));
    CHECK(root.contains(mpq_class(1)));
    const CertifiedInterval gap =
        lift(mpq_class(1), cur) - sqr(phi_at(k - 1, cur));
    CHECK_FALSE(gap.less_than(cur));
    CHECK_FALSE(cur.less_than(gap));
    const CertifiedInterval coarse = xi(k, 1e-8);
    CHECK(coarse.contains(cur));
    prev = cur;
  }
  CHECK(std::abs(std::stod(xi(64, 1e-12).mid_decimal(12)) - 0.25203750647) <
        1e-10);
  CHECK_THROWS_AS(xi(3, 0.0), Error);
}

TEST_CASE("xi: precision budget refusal") {
  PrecisionBudget tiny;
  tiny.initial = 16;
  tiny.max = 20;
  try {
    xi(40, 1e-30, tiny);
    FAIL("no refusal");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::precision_exhausted);
  }
}

TEST_CASE("phi_at one quarter") {
  const CertifiedInterval q = CertifiedInterval::point(mpq_class(1, 4));
  for (unsigned k = 0; k <= 200; ++k) {
    CHECK(phi_at(k, q).less_than(mpq_class(1, 2)));
  }
  CHECK_THROWS_AS(phi_at(2, CertifiedInterval(mpq_class(1, 2), mpq_class(2))),
                  Error);
}

TEST_CASE("interval arithmetic encloses exact rationals") {
  const mpq_class a(1, 3), b(-2, 7), c(5, 11);
  const auto ia = CertifiedInterval::point(a, 53);
  const auto ib = CertifiedInterval::point(b, 53);
  const auto ic = CertifiedInterval(c, mpq_class(6, 11), 53);
  CHECK((ia + ib).contains(a + b));
  CHECK((ia - ib).contains(a - b));
  CHECK((ia * ib).contains(a * b));
  CHECK((ia / ib).contains(a / b));
  CHECK(sqr(ib).contains(b * b));
  CHECK((ib * ic).contains(b * mpq_class(6, 11)));
  CHECK((ib * ic).contains(b * c));
  CHECK(ia.width() > 0);
  CHECK(ia.lo_exact() <= a);
  CHECK(ia.hi_exact() >= a);
}

TEST_CASE("limit fractions") {
  for (unsigned k : {1u, 2u, 3u, 8u, 30u, 64u}) {
    const LimitFractions lf = limit_fractions(k, 1e-25);
    const CertifiedInterval quarter_cube =
        lift(mpq_class(1, 4), lf.xi) * lf.xi * lf.xi * lf.xi;
    CHECK(quarter_cube.less_than(lf.isolated));
    CHECK(lf.leftmost.contains(mpq_class(0)));
    CHECK(lf.density_symmetric.less_than(lf.bprime_density));
    CHECK(lf.density_symmetric.less_than(lf.density_standard));
  }
  const LimitFractions l64 = limit_fractions(64, 1e-25);
  CHECK(l64.density_standard.greater_than(mpq_class(349, 100)));
  CHECK(l64.density_standard.less_than(mpq_class(351, 100)));
  CHECK(l64.density_symmetric.greater_than(mpq_class(149, 50)));
  CHECK(l64.bprime_density.greater_than(3));
  CHECK_THROWS_AS(limit_fractions(0, 1e-10), Error);
}
