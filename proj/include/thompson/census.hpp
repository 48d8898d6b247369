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

// Statistics of finite subgraphs of the Cayley graph of F: the sets B(n, k)
// in the forest model, their embedding as group elements, and arbitrary
// element sets.

#ifndef THOMPSON_CENSUS_HPP_
#define THOMPSON_CENSUS_HPP_

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "thompson/forest.hpp"
#include "thompson/genfunc.hpp"
#include "thompson/group.hpp"

namespace thompson {

enum class Mode { enumerate, dp };

struct CensusOptions {
  unsigned threads = 1;
  double cap = kDefaultEnumerationCap;
};

// Raw counts over B(n, k). blocked[a] counts forests where label a has no
// move inside B(n, k); isolated is relative to the symmetric set.
struct ForestCounts {
  BBParams params;
  mpz_class beta;
  std::array<mpz_class, 6> blocked;
  mpz_class trivial_marked;
  mpz_class leftmost;
  mpz_class rightmost;
  mpz_class isolated;

  const mpz_class& blocked_for(ActionLabel a) const {
    return blocked[static_cast<std::size_t>(a)];
  }

  friend bool operator==(const ForestCounts& a, const ForestCounts& b) {
    return a.params.n == b.params.n && a.params.k == b.params.k &&
           a.beta == b.beta && a.blocked == b.blocked &&
           a.trivial_marked == b.trivial_marked && a.leftmost == b.leftmost &&
           a.rightmost == b.rightmost && a.isolated == b.isolated;
  }
};

// Exhaustive pass over B(n, k), split over the size of the first tree.
ForestCounts census_enumerate(const BBParams& params,
                              const CensusOptions& options = {});
// Coefficient n of each series in `family` (n <= truncation degree).
ForestCounts census_dp(const CountSeriesFamily& family, std::size_t n);
ForestCounts census(const BBParams& params, Mode mode,
                    const CensusOptions& options = {});

struct SubgraphStats {
  std::vector<std::string> labels;
  std::vector<std::size_t> inverse;  // label index of a^{-1}
  mpz_class vertices;
  std::vector<mpz_class> internal;
  std::vector<mpz_class> blocked;
  mpz_class degree_sum;
  mpq_class density;  // 0 for an empty vertex set
  mpz_class cheeger_total;
  unsigned m = 0;

  // density + cheeger_total / vertices == 2m, exactly.
  bool satisfies_density_identity() const;
  // Cheeger edges labelled a and a^{-1} are equinumerous.
  bool satisfies_lemma1() const;

  friend bool operator==(const SubgraphStats&, const SubgraphStats&) = default;
};

// Action labels realising the standard, symmetric or extended set, in the
// label order of GenSet::labels().
std::vector<ActionLabel> action_labels(GenSetKind kind);

SubgraphStats stats_from_counts(const ForestCounts& counts,
                                const GenSet& genset);
SubgraphStats stats_bb(const BBParams& params, const GenSet& genset,
                       Mode mode, const CensusOptions& options = {});

mpz_class isolated_census(const BBParams& params, Mode mode,
                          const CensusOptions& options = {});

// B'(n, k): B(n, k) without its isolated vertices, symmetric set.
SubgraphStats bprime_from_counts(const ForestCounts& counts);
SubgraphStats bprime_stats(const BBParams& params, Mode mode,
                           const CensusOptions& options = {});

struct DoublingBound {
  mpz_class upper_bound;  // 3 trivial_marked + leftmost + rightmost
  mpq_class ratio;        // upper_bound / beta
  // upper_bound plus the xbar1^{-1} edges leaving leftmost forests, which
  // the selection above does not charge. Same limit ratio.
  mpz_class refined_bound;
  mpq_class refined_ratio;
};

DoublingBound doubling_from_counts(const ForestCounts& counts);
DoublingBound doubling_bound(const BBParams& params, Mode mode,
                             const CensusOptions& options = {});

// Group element carried by an action label.
const NormalForm& label_element(ActionLabel a);

using ActionRule =
    std::function<std::optional<MarkedForest>(ActionLabel, const MarkedForest&)>;

// A deliberately wrong rule (x1 marks the right half) for negative controls.
std::optional<MarkedForest> perturbed_apply(ActionLabel a,
                                            const MarkedForest& f);

inline constexpr std::size_t kDefaultEmbedCap = 12;

struct Embedding {
  BBParams params;
  std::vector<MarkedForest> forests;  // ordered by encoding
  std::vector<NormalForm> elements;   // aligned with forests
  std::size_t edges_checked = 0;

  const NormalForm& element_of(const MarkedForest& f) const;

 private:
  friend Embedding embed(const BBParams&, const ActionRule&, std::size_t);
  std::unordered_map<std::string, std::size_t> index_;
};

// Breadth-first assignment of group elements from the base forest. Throws
// Error(invariant_violation) if an action edge disagrees with right
// multiplication, if two forests share an element, or if B(n, k) is not
// connected.
Embedding embed(const BBParams& params, const ActionRule& rule = {},
                std::size_t n_cap = kDefaultEmbedCap);

// Distinct elements of B_1(Y) \ Y for Y the embedded B(n, k).
std::size_t outer_boundary_exact(const Embedding& embedding,
                                 const GenSet& genset);

// Induced-subgraph statistics of an element set under right multiplication.
SubgraphStats stats_elements(std::span<const NormalForm> ys,
                             const GenSet& genset);

}  // namespace thompson

#endif  // THOMPSON_CENSUS_HPP_
