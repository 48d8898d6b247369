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

// Generating functions of height-bounded binary trees and of the marked
// forests in B(n, k), plus certified enclosures of the roots xi_k of
// Phi_k(z) = 1 and of the limiting fractions evaluated there.

#ifndef THOMPSON_GENFUNC_HPP_
#define THOMPSON_GENFUNC_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <optional>

#include "thompson/interval.hpp"
#include "thompson/series.hpp"

namespace thompson {

inline constexpr std::size_t kDefaultTruncation = 512;

// Phi_0 = z, Phi_k = z + Phi_{k-1}^2: trees of height <= k counted by leaves.
TruncatedSeries phi(unsigned k, std::size_t degree);

// c_n = (2n)! / (n! (n+1)!)
mpz_class catalan(unsigned n);

// Psi_k = Phi_k / (1 - Phi_k)^2; coefficient n is #B(n, k).
TruncatedSeries psi(unsigned k, std::size_t degree);

struct PrecisionBudget {
  mpfr_prec_t initial = CertifiedInterval::kDefaultPrecision;
  mpfr_prec_t max = mpfr_prec_t{1} << 16;
};

// Enclosure of width <= tol of the unique positive root of Phi_k(z) = 1,
// found by bisection with certified sign tests. Throws
// Error(precision_exhausted) when the budget cannot separate a midpoint.
CertifiedInterval xi(unsigned k, double tol, const PrecisionBudget& budget = {});

// Enclosure of Phi_k(z) for z inside [0, 1].
CertifiedInterval phi_at(unsigned k, const CertifiedInterval& z);

// True iff sum_n c_n z^{n+1} satisfies Phi = z + Phi^2 through degree N.
bool catalan_series_check(std::size_t degree);

// Smallest n with c_0 z + c_1 z^2 + ... + c_n z^{n+1} > threshold, searched up
// to max_terms.
std::optional<std::size_t> catalan_prefix_exceeding(const mpq_class& z,
                                                    const mpq_class& threshold,
                                                    std::size_t max_terms);

// Exact per-n counts over B(n, k), as series in z. k = 0 is allowed and uses
// Phi_{-1} = 0.
struct CountSeriesFamily {
  unsigned k = 0;
  TruncatedSeries beta{0};
  TruncatedSeries trivial_marked{0};
  TruncatedSeries marked_leftmost{0};
  TruncatedSeries marked_rightmost{0};
  TruncatedSeries x1inv_blocked{0};
  TruncatedSeries x1barinv_blocked{0};
  // Forests with no symmetric-set move inside B(n, k).
  TruncatedSeries isolated{0};
};

CountSeriesFamily count_series(unsigned k, std::size_t degree);

// n -> infinity limits of the count ratios against beta. Each count series
// has the shape A + B / (1 - Phi_k)^2 with A at most a simple pole at xi_k,
// so its ratio to Psi_k tends to B(xi_k).
struct LimitFractions {
  unsigned k = 0;
  CertifiedInterval xi;
  CertifiedInterval trivial;            // xi_k
  CertifiedInterval leftmost;           // 0
  CertifiedInterval isolated;           // xi_k (1 - Phi_{k-1}(xi_k))^2
  CertifiedInterval density_standard;   // 4 - 2 xi_k
  CertifiedInterval density_symmetric;  // 4 - 4 xi_k
  CertifiedInterval bprime_density;     // (4 - 4 xi_k) / (1 - isolated)
  CertifiedInterval doubling_ratio;     // 3 xi_k
};

LimitFractions limit_fractions(unsigned k, double tol,
                               const PrecisionBudget& budget = {});

}  // namespace thompson

#endif  // THOMPSON_GENFUNC_HPP_
