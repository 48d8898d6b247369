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

#include "thompson/genfunc.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "thompson/error.hpp"

namespace thompson {

TruncatedSeries phi(unsigned k, std::size_t degree) {
  if (degree < 1) {
    throw Error(Errc::invalid_argument, "truncation degree must be >= 1");
  }
  const TruncatedSeries z = TruncatedSeries::z(degree);
  TruncatedSeries p = z;
  for (unsigned j = 0; j < k; ++j) {
    p = z + p * p;
  }
  return p;
}

mpz_class catalan(unsigned n) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), 2 * static_cast<unsigned long>(n), n);
  c /= n + 1;
  return c;
}

TruncatedSeries psi(unsigned k, std::size_t degree) {
  const TruncatedSeries p = phi(k, degree);
  const TruncatedSeries g = geometric(p);
  return p * (g * g);
}

namespace {

// Scoped pair of MPFR temporaries.
struct Scratch {
  explicit Scratch(mpfr_prec_t p) {
    mpfr_init2(a, p);
    mpfr_init2(b, p);
  }
  ~Scratch() {
    mpfr_clear(a);
    mpfr_clear(b);
  }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;
  mpfr_t a;
  mpfr_t b;
};

// Sign of Phi_k(m) - 1 certified at precision p: -1, +1, 0 for an exact
// root, nullopt when the enclosure straddles 1.
std::optional<int> certified_sign(unsigned k, mpfr_srcptr m, mpfr_prec_t p) {
  Scratch s(p);
  mpfr_set(s.a, m, MPFR_RNDD);
  mpfr_set(s.b, m, MPFR_RNDU);
  for (unsigned j = 0; j < k; ++j) {
    if (mpfr_cmp_ui(s.a, 1) > 0) {
      return 1;  // Phi_k >= Phi_j on z >= 0
    }
    mpfr_sqr(s.a, s.a, MPFR_RNDD);
    mpfr_add(s.a, s.a, m, MPFR_RNDD);
    mpfr_sqr(s.b, s.b, MPFR_RNDU);
    mpfr_add(s.b, s.b, m, MPFR_RNDU);
  }
  if (mpfr_cmp_ui(s.b, 1) < 0) {
    return -1;
  }
  if (mpfr_cmp_ui(s.a, 1) > 0) {
    return 1;
  }
  if (mpfr_cmp_ui(s.a, 1) == 0 && mpfr_cmp_ui(s.b, 1) == 0) {
    return 0;
  }
  return std::nullopt;
}

}  // namespace

CertifiedInterval xi(unsigned k, double tol, const PrecisionBudget& budget) {
  if (!(tol > 0.0)) {
    throw Error(Errc::invalid_argument, "tolerance must be positive");
  }
  const auto bits = static_cast<mpfr_prec_t>(std::ceil(-std::log2(tol))) + 8;
  const mpfr_prec_t endpoint_prec = std::max<mpfr_prec_t>(64, bits + 8);
  mpfr_prec_t working = std::max(budget.initial, endpoint_prec + 32);

  CertifiedInterval out(endpoint_prec);
  mpfr_ptr lo = out.lo();
  mpfr_ptr hi = out.hi();
  mpfr_set_ui_2exp(lo, 1, -2, MPFR_RNDN);  // Phi_k(1/4) < 1/2
  mpfr_set_ui(hi, 1, MPFR_RNDN);           // Phi_k(1) >= 1
  if (working > budget.max) {
    std::ostringstream msg;
    msg << "precision budget of " << budget.max << " bits cannot reach width "
        << tol << " for xi_" << k << "; achieved width " << out.width();
    throw Error(Errc::precision_exhausted, msg.str());
  }

  if (certified_sign(k, hi, working) == std::optional<int>(0)) {
    mpfr_set(lo, hi, MPFR_RNDN);
    return out;
  }

  mpfr_t mid;
  mpfr_init2(mid, endpoint_prec);
  for (;;) {
    if (out.width() <= tol) {
      break;
    }
    mpfr_add(mid, lo, hi, MPFR_RNDN);
    mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
    std::optional<int> s = certified_sign(k, mid, working);
    while (!s) {
      working *= 2;
      if (working > budget.max) {
        std::ostringstream msg;
        msg << "precision budget of " << budget.max
            << " bits exhausted for xi_" << k << " at width " << out.width();
        mpfr_clear(mid);
        throw Error(Errc::precision_exhausted, msg.str());
      }
      s = certified_sign(k, mid, working);
    }
    if (*s < 0) {
      mpfr_set(lo, mid, MPFR_RNDN);
    } else if (*s > 0) {
      mpfr_set(hi, mid, MPFR_RNDN);
    } else {
      mpfr_set(lo, mid, MPFR_RNDN);
      mpfr_set(hi, mid, MPFR_RNDN);
      break;
    }
  }
  mpfr_clear(mid);
  return out;
}

CertifiedInterval phi_at(unsigned k, const CertifiedInterval& z) {
  if (mpfr_sgn(z.lo()) < 0 || mpfr_cmp_ui(z.hi(), 1) > 0) {
    throw Error(Errc::invalid_argument, "phi_at expects z inside [0, 1]");
  }
  CertifiedInterval p = z;
  for (unsigned j = 0; j < k; ++j) {
    p = z + sqr(p);
  }
  return p;
}

bool catalan_series_check(std::size_t degree) {
  if (degree < 1) {
    throw Error(Errc::invalid_argument, "truncation degree must be >= 1");
  }
  TruncatedSeries c(degree);
  for (std::size_t d = 1; d <= degree; ++d) {
    c[d] = catalan(static_cast<unsigned>(d - 1));
  }
  return c == TruncatedSeries::z(degree) + c * c;
}

std::optional<std::size_t> catalan_prefix_exceeding(const mpq_class& z,
                                                    const mpq_class& threshold,
                                                    std::size_t max_terms) {
  mpq_class sum = 0;
  mpq_class zpow = z;  // z^{n+1}
  mpz_class c = 1;     // c_n
  for (std::size_t n = 0; n <= max_terms; ++n) {
    sum += c * zpow;
    if (sum > threshold) {
      return n;
    }
    // c_{n+1} = c_n * 2 (2n + 1) / (n + 2)
    c *= 2 * (2 * static_cast<unsigned long>(n) + 1);
    c /= static_cast<unsigned long>(n) + 2;
    zpow *= z;
  }
  return std::nullopt;
}

CountSeriesFamily count_series(unsigned k, std::size_t degree) {
  const TruncatedSeries z = TruncatedSeries::z(degree);
  const TruncatedSeries one = TruncatedSeries::one(degree);
  const TruncatedSeries p = phi(k, degree);
  const TruncatedSeries prev =
      k > 0 ? phi(k - 1, degree) : TruncatedSeries::zero(degree);
  const TruncatedSeries g = geometric(p);
  const TruncatedSeries g2 = g * g;
  const TruncatedSeries height_k = p - prev;  // trees of height exactly k

  CountSeriesFamily out;
  out.k = k;
  out.beta = p * g2;
  out.trivial_marked = z * g2;
  out.marked_leftmost = p * g;
  out.marked_rightmost = out.marked_leftmost;
  // Rightmost, or the pair (marked, right neighbour) reaches height k.
  out.x1inv_blocked = p * g + (p * p - prev * prev) * g2;
  out.x1barinv_blocked = out.x1inv_blocked;
  // Trivial marked tree; each side is empty or ends next to the mark with a
  // tree of height exactly k.
  const TruncatedSeries side = one + height_k * g;
  out.isolated = z * side * side;
  return out;
}

LimitFractions limit_fractions(unsigned k, double tol,
                               const PrecisionBudget& budget) {
  if (k < 1) {
    throw Error(Errc::invalid_argument, "limit fractions need k >= 1");
  }
  LimitFractions out;
  out.k = k;
  out.xi = xi(k, tol, budget);
  const CertifiedInterval& x = out.xi;
  auto c = [&x](long v) { return lift(mpq_class(v), x); };

  const CertifiedInterval gap = c(1) - phi_at(k - 1, x);
  out.trivial = x;
  out.leftmost = c(0);
  out.isolated = x * sqr(gap);
  out.density_standard = c(4) - c(2) * x;
  out.density_symmetric = c(4) - c(4) * x;
  out.bprime_density = out.density_symmetric / (c(1) - out.isolated);
  out.doubling_ratio = c(3) * x;
  return out;
}

}  // namespace thompson
