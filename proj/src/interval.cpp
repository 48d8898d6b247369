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

#include "thompson/interval.hpp"

#include <algorithm>

#include "thompson/error.hpp"

namespace thompson {

namespace {

std::string format(mpfr_srcptr x, int digits, char rounding) {
  char* buf = nullptr;
  const std::string spec = std::string("%.*R") + rounding + "f";
  if (mpfr_asprintf(&buf, spec.c_str(), digits, x) < 0 || buf == nullptr) {
    throw Error(Errc::invalid_argument, "decimal formatting failed");
  }
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

void min_of(mpfr_ptr out, mpfr_srcptr a, mpfr_srcptr b) {
  mpfr_min(out, a, b, MPFR_RNDD);
}

void max_of(mpfr_ptr out, mpfr_srcptr a, mpfr_srcptr b) {
  mpfr_max(out, a, b, MPFR_RNDU);
}

}  // namespace

CertifiedInterval::CertifiedInterval(mpfr_prec_t precision) : prec_(precision) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

CertifiedInterval::CertifiedInterval(const mpq_class& lo, const mpq_class& hi,
                                     mpfr_prec_t precision)
    : CertifiedInterval(precision) {
  if (lo > hi) {
    throw Error(Errc::invalid_argument, "interval with lo > hi");
  }
  mpfr_set_q(lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, hi.get_mpq_t(), MPFR_RNDU);
}

CertifiedInterval::CertifiedInterval(const CertifiedInterval& o)
    : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

CertifiedInterval::CertifiedInterval(CertifiedInterval&& o) noexcept
    : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

CertifiedInterval& CertifiedInterval::operator=(const CertifiedInterval& o) {
  if (this != &o) {
    prec_ = o.prec_;
    mpfr_set_prec(lo_, prec_);
    mpfr_set_prec(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

CertifiedInterval& CertifiedInterval::operator=(
    CertifiedInterval&& o) noexcept {
  std::swap(prec_, o.prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  return *this;
}

CertifiedInterval::~CertifiedInterval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

mpq_class CertifiedInterval::lo_exact() const {
  if (!mpfr_number_p(lo_)) {
    throw Error(Errc::precision_exhausted, "interval endpoint is not finite");
  }
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), lo_);
  return q;
}

mpq_class CertifiedInterval::hi_exact() const {
  if (!mpfr_number_p(hi_)) {
    throw Error(Errc::precision_exhausted, "interval endpoint is not finite");
  }
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), hi_);
  return q;
}

double CertifiedInterval::width() const {
  mpfr_t w;
  mpfr_init2(w, prec_ + 2);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  const double out = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return out;
}

bool CertifiedInterval::is_point() const noexcept {
  return mpfr_equal_p(lo_, hi_) != 0;
}

bool CertifiedInterval::contains(const mpq_class& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 &&
         mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool CertifiedInterval::contains(const CertifiedInterval& o) const {
  return mpfr_lessequal_p(lo_, o.lo_) && mpfr_greaterequal_p(hi_, o.hi_);
}

bool CertifiedInterval::less_than(const mpq_class& q) const {
  return mpfr_cmp_q(hi_, q.get_mpq_t()) < 0;
}

bool CertifiedInterval::greater_than(const mpq_class& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) > 0;
}

bool CertifiedInterval::less_than(const CertifiedInterval& o) const {
  return mpfr_less_p(hi_, o.lo_) != 0;
}

std::string CertifiedInterval::lo_decimal(int digits) const {
  return format(lo_, digits, 'D');
}

std::string CertifiedInterval::hi_decimal(int digits) const {
  return format(hi_, digits, 'U');
}

std::string CertifiedInterval::mid_decimal(int digits) const {
  mpfr_t m;
  mpfr_init2(m, prec_ + 2);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  std::string out = format(m, digits, 'N');
  mpfr_clear(m);
  return out;
}

CertifiedInterval operator+(const CertifiedInterval& a,
                            const CertifiedInterval& b) {
  CertifiedInterval out(std::max(a.prec_, b.prec_));
  mpfr_add(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

CertifiedInterval operator-(const CertifiedInterval& a,
                            const CertifiedInterval& b) {
  CertifiedInterval out(std::max(a.prec_, b.prec_));
  mpfr_sub(out.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(out.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return out;
}

CertifiedInterval operator*(const CertifiedInterval& a,
                            const CertifiedInterval& b) {
  const mpfr_prec_t p = std::max(a.prec_, b.prec_);
  CertifiedInterval out(p);
  mpfr_srcptr as[2] = {a.lo_, a.hi_};
  mpfr_srcptr bs[2] = {b.lo_, b.hi_};
  mpfr_t down;
  mpfr_t up;
  mpfr_init2(down, p);
  mpfr_init2(up, p);
  mpfr_set_inf(out.lo_, 1);
  mpfr_set_inf(out.hi_, -1);
  for (mpfr_srcptr x : as) {
    for (mpfr_srcptr y : bs) {
      mpfr_mul(down, x, y, MPFR_RNDD);
      mpfr_mul(up, x, y, MPFR_RNDU);
      min_of(out.lo_, out.lo_, down);
      max_of(out.hi_, out.hi_, up);
    }
  }
  mpfr_clear(down);
  mpfr_clear(up);
  return out;
}

CertifiedInterval operator/(const CertifiedInterval& a,
                            const CertifiedInterval& b) {
  if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0) {
    throw Error(Errc::invalid_argument, "interval division by zero");
  }
  const mpfr_prec_t p = std::max(a.prec_, b.prec_);
  CertifiedInterval out(p);
  mpfr_srcptr as[2] = {a.lo_, a.hi_};
  mpfr_srcptr bs[2] = {b.lo_, b.hi_};
  mpfr_t down;
  mpfr_t up;
  mpfr_init2(down, p);
  mpfr_init2(up, p);
  mpfr_set_inf(out.lo_, 1);
  mpfr_set_inf(out.hi_, -1);
  for (mpfr_srcptr x : as) {
    for (mpfr_srcptr y : bs) {
      mpfr_div(down, x, y, MPFR_RNDD);
      mpfr_div(up, x, y, MPFR_RNDU);
      min_of(out.lo_, out.lo_, down);
      max_of(out.hi_, out.hi_, up);
    }
  }
  mpfr_clear(down);
  mpfr_clear(up);
  return out;
}

CertifiedInterval sqr(const CertifiedInterval& a) {
  CertifiedInterval out(a.prec_);
  if (mpfr_sgn(a.lo_) >= 0) {
    mpfr_sqr(out.lo_, a.lo_, MPFR_RNDD);
    mpfr_sqr(out.hi_, a.hi_, MPFR_RNDU);
  } else if (mpfr_sgn(a.hi_) <= 0) {
    mpfr_sqr(out.lo_, a.hi_, MPFR_RNDD);
    mpfr_sqr(out.hi_, a.lo_, MPFR_RNDU);
  } else {
    mpfr_t t;
    mpfr_init2(t, a.prec_);
    mpfr_set_zero(out.lo_, 1);
    mpfr_sqr(out.hi_, a.lo_, MPFR_RNDU);
    mpfr_sqr(t, a.hi_, MPFR_RNDU);
    max_of(out.hi_, out.hi_, t);
    mpfr_clear(t);
  }
  return out;
}

CertifiedInterval lift(const mpq_class& q, const CertifiedInterval& like) {
  return CertifiedInterval::point(q, like.precision());
}

}  // namespace thompson
