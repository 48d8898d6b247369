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

// Closed intervals [lo, hi] with dyadic (binary floating-point) endpoints.
// Every operation rounds lo toward -inf and hi toward +inf, so the exact
// result of the corresponding real operation is always enclosed.

#ifndef THOMPSON_INTERVAL_HPP_
#define THOMPSON_INTERVAL_HPP_

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace thompson {

class CertifiedInterval {
 public:
  static constexpr mpfr_prec_t kDefaultPrecision = 128;

  explicit CertifiedInterval(mpfr_prec_t precision = kDefaultPrecision);
  // Smallest representable enclosure of [lo, hi].
  CertifiedInterval(const mpq_class& lo, const mpq_class& hi,
                    mpfr_prec_t precision = kDefaultPrecision);
  static CertifiedInterval point(const mpq_class& q,
                                 mpfr_prec_t precision = kDefaultPrecision) {
    return CertifiedInterval(q, q, precision);
  }

  CertifiedInterval(const CertifiedInterval& o);
  CertifiedInterval(CertifiedInterval&& o) noexcept;
  CertifiedInterval& operator=(const CertifiedInterval& o);
  CertifiedInterval& operator=(CertifiedInterval&& o) noexcept;
  ~CertifiedInterval();

  mpfr_prec_t precision() const noexcept { return prec_; }
  mpfr_srcptr lo() const noexcept { return lo_; }
  mpfr_srcptr hi() const noexcept { return hi_; }
  mpfr_ptr lo() noexcept { return lo_; }
  mpfr_ptr hi() noexcept { return hi_; }

  // Exact endpoint values; throw on infinities.
  mpq_class lo_exact() const;
  mpq_class hi_exact() const;
  // Upper bound on hi - lo.
  double width() const;
  bool is_point() const noexcept;

  bool contains(const mpq_class& q) const;
  bool contains(const CertifiedInterval& o) const;
  // Certified comparisons: true only when every enclosed value satisfies the
  // relation.
  bool less_than(const mpq_class& q) const;
  bool greater_than(const mpq_class& q) const;
  bool less_than(const CertifiedInterval& o) const;

  // Decimal strings with `digits` fractional digits; lo rounds down and hi
  // rounds up. mid rounds to nearest and is for display only.
  std::string lo_decimal(int digits) const;
  std::string hi_decimal(int digits) const;
  std::string mid_decimal(int digits) const;

  friend CertifiedInterval operator+(const CertifiedInterval& a,
                                     const CertifiedInterval& b);
  friend CertifiedInterval operator-(const CertifiedInterval& a,
                                     const CertifiedInterval& b);
  friend CertifiedInterval operator*(const CertifiedInterval& a,
                                     const CertifiedInterval& b);
  friend CertifiedInterval operator/(const CertifiedInterval& a,
                                     const CertifiedInterval& b);
  friend CertifiedInterval sqr(const CertifiedInterval& a);

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_;
  mpfr_t hi_;
};

// Lifts an exact rational into an interval at the precision of `like`.
CertifiedInterval lift(const mpq_class& q, const CertifiedInterval& like);

}  // namespace thompson

#endif  // THOMPSON_INTERVAL_HPP_
