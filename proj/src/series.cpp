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

#include "thompson/series.hpp"

#include <algorithm>

#include "thompson/error.hpp"

namespace thompson {

namespace {

void check_degrees(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.degree() != b.degree()) {
    throw Error(Errc::invalid_argument, "truncation degrees differ");
  }
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t degree) : coeffs_(degree + 1) {}

TruncatedSeries::TruncatedSeries(std::size_t degree,
                                 std::vector<mpz_class> coeffs)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(degree + 1);
}

TruncatedSeries TruncatedSeries::one(std::size_t degree) {
  TruncatedSeries s(degree);
  s.coeffs_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::z(std::size_t degree) {
  TruncatedSeries s(degree);
  if (degree >= 1) {
    s.coeffs_[1] = 1;
  }
  return s;
}

std::size_t TruncatedSeries::last_nonzero() const noexcept {
  std::size_t i = coeffs_.size();
  while (i > 0 && coeffs_[i - 1] == 0) {
    --i;
  }
  return i;  // one past the last nonzero coefficient
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  check_degrees(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] += o.coeffs_[i];
  }
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  check_degrees(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] -= o.coeffs_[i];
  }
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_degrees(a, b);
  const std::size_t n = a.coeffs_.size();
  const std::size_t la = a.last_nonzero();
  const std::size_t lb = b.last_nonzero();
  TruncatedSeries out(a.degree());
  for (std::size_t i = 0; i < la; ++i) {
    if (a.coeffs_[i] == 0) {
      continue;
    }
    const std::size_t jmax = std::min(lb, n - i);
    for (std::size_t j = 0; j < jmax; ++j) {
      mpz_addmul(out.coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                 b.coeffs_[j].get_mpz_t());
    }
  }
  return out;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o) {
  *this = *this * o;
  return *this;
}

TruncatedSeries geometric(const TruncatedSeries& a) {
  if (a[0] != 0) {
    throw Error(Errc::invalid_argument,
                "geometric series needs a vanishing constant term");
  }
  const std::size_t n = a.degree();
  std::size_t support = n;
  while (support > 0 && a[support] == 0) {
    --support;
  }
  // g = 1 + a g, so g_m = sum_{i=1}^{m} a_i g_{m-i}.
  TruncatedSeries g(n);
  g[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    mpz_class acc = 0;
    for (std::size_t i = 1; i <= std::min(m, support); ++i) {
      mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), g[m - i].get_mpz_t());
    }
    g[m] = acc;
  }
  return g;
}

}  // namespace thompson
