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

#ifndef THOMPSON_SERIES_HPP_
#define THOMPSON_SERIES_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace thompson {

// Power series c_0 + c_1 z + ... + c_N z^N with exact integer coefficients;
// every operation is exact through the truncation degree N.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t degree);
  TruncatedSeries(std::size_t degree, std::vector<mpz_class> coeffs);

  static TruncatedSeries zero(std::size_t degree) {
    return TruncatedSeries(degree);
  }
  static TruncatedSeries one(std::size_t degree);
  static TruncatedSeries z(std::size_t degree);

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  const mpz_class& operator[](std::size_t i) const { return coeffs_.at(i); }
  mpz_class& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const TruncatedSeries& o);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
    return a += b;
  }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
    return a -= b;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a,
                                   const TruncatedSeries& b);

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::size_t last_nonzero() const noexcept;

  std::vector<mpz_class> coeffs_;
};

// 1 / (1 - a); requires a[0] == 0.
TruncatedSeries geometric(const TruncatedSeries& a);

}  // namespace thompson

#endif  // THOMPSON_SERIES_HPP_
