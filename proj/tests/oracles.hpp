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

// Test-only helpers: independent oracles and random generators.

#ifndef THOMPSON_TESTS_ORACLES_HPP_
#define THOMPSON_TESTS_ORACLES_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

#include "thompson/group.hpp"

namespace oracle {

// F acting on [0, 1] by piecewise-linear maps with dyadic breakpoints. A word
// a_1 ... a_n acts as a_1 o a_2 o ... o a_n, which makes both defining
// relators act trivially. Faithful, so it separates distinct elements.
inline mpq_class pl_x0(const mpq_class& t) {
  if (t <= mpq_class(1, 2)) return t / 2;
  if (t <= mpq_class(3, 4)) return t - mpq_class(1, 4);
  return 2 * t - 1;
}

inline mpq_class pl_x0_inv(const mpq_class& s) {
  if (s <= mpq_class(1, 4)) return 2 * s;
  if (s <= mpq_class(1, 2)) return s + mpq_class(1, 4);
  return (s + 1) / 2;
}

// x_n: identity on [0, 1 - 2^-n], a rescaled copy of x0 above it.
inline mpq_class pl_x(thompson::Index n, const mpq_class& t, bool inverse) {
  mpz_class scale = 1;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), n);
  const mpq_class start = 1 - mpq_class(1, scale);
  if (t <= start) return t;
  const mpq_class local = (t - start) * scale;
  const mpq_class moved = inverse ? pl_x0_inv(local) : pl_x0(local);
  return start + moved / scale;
}

inline mpq_class pl_eval(const thompson::GeneratorWord& w, mpq_class t) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    t = pl_x(it->index, t, it->inverse);
  }
  return t;
}

inline std::vector<mpq_class> pl_sample_points() {
  std::vector<mpq_class> pts;
  for (int d : {3, 5, 7, 11, 13, 97, 101}) {
    for (int i = 1; i < d; i += (d > 20 ? 7 : 1)) {
      pts.emplace_back(i, d);
    }
  }
  return pts;
}

inline bool pl_equal(const thompson::GeneratorWord& a,
                     const thompson::GeneratorWord& b) {
  for (const mpq_class& t : pl_sample_points()) {
    if (pl_eval(a, t) != pl_eval(b, t)) return false;
  }
  return true;
}

inline thompson::GeneratorWord random_word(std::mt19937_64& rng,
                                           std::size_t max_len,
                                           thompson::Index max_index) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<thompson::Index> idx(0, max_index);
  std::bernoulli_distribution inv(0.5);
  thompson::GeneratorWord w;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) {
    w.letters.push_back(thompson::Letter{idx(rng), inv(rng)});
  }
  return w;
}

// Number of binary trees with n leaves and height <= k, by plain recursion.
inline std::uint64_t count_trees(std::size_t n, int k) {
  if (n == 1) return 1;
  if (k <= 0) return 0;
  std::uint64_t total = 0;
  for (std::size_t a = 1; a < n; ++a) {
    total += count_trees(a, k - 1) * count_trees(n - a, k - 1);
  }
  return total;
}

}  // namespace oracle

#endif  // THOMPSON_TESTS_ORACLES_HPP_
