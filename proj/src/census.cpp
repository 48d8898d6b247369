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

#include "thompson/census.hpp"

#include <algorithm>
#include <deque>

#include "parallel.hpp"
#include "thompson/error.hpp"
#include "thompson/rational.hpp"

namespace thompson {

namespace {

struct LocalCounts {
  std::uint64_t beta = 0;
  std::array<std::uint64_t, 6> blocked{};
  std::uint64_t trivial = 0;
  std::uint64_t leftmost = 0;
  std::uint64_t rightmost = 0;
  std::uint64_t isolated = 0;
};

mpz_class to_mpz(std::uint64_t v) {
  mpz_class out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return out;
}

std::string bb_name(const BBParams& p) {
  return "B(" + std::to_string(p.n) + "," + std::to_string(p.k) + ")";
}

}  // namespace

ForestCounts census_enumerate(const BBParams& params,
                              const CensusOptions& options) {
  if (params.n == 0) {
    throw Error(Errc::invalid_argument, "B(n,k) needs n >= 1");
  }
  const double estimate = estimate_bb(params);
  if (estimate > options.cap) {
    throw Error(Errc::cap_exceeded,
                bb_name(params) + " has an estimated " +
                    std::to_string(static_cast<long double>(estimate)) +
                    " forests, above the enumeration cap");
  }
  TreeCatalog catalog;
  for (std::size_t s = 1; s <= params.n; ++s) {
    catalog.trees(s, params.k);  // warm before sharing across workers
  }
  std::size_t max_first = params.n;
  if (params.k < 63) {
    max_first = std::min<std::size_t>(max_first, std::size_t{1} << params.k);
  }
  std::vector<LocalCounts> parts(max_first);
  const unsigned k = params.k;
  detail::parallel_for(max_first, options.threads, [&](std::size_t task) {
    LocalCounts& c = parts[task];
    for_each_bb(
        params, catalog,
        [&c, k](const MarkedForest& f) {
          ++c.beta;
          bool open[6];
          for (ActionLabel a : kAllLabels) {
            const auto i = static_cast<std::size_t>(a);
            open[i] = accepts_within(a, f, k);
            if (!open[i]) {
              ++c.blocked[i];
            }
          }
          if (f.marked().is_leaf()) ++c.trivial;
          if (f.leftmost()) ++c.leftmost;
          if (f.rightmost()) ++c.rightmost;
          auto shut = [&open](ActionLabel a) {
            return !open[static_cast<std::size_t>(a)];
          };
          if (shut(ActionLabel::x1) && shut(ActionLabel::x1_inv) &&
              shut(ActionLabel::x1bar) && shut(ActionLabel::x1bar_inv)) {
            ++c.isolated;
          }
        },
        task + 1);
  });

  ForestCounts out;
  out.params = params;
  LocalCounts total;
  for (const LocalCounts& c : parts) {
    total.beta += c.beta;
    for (std::size_t i = 0; i < 6; ++i) total.blocked[i] += c.blocked[i];
    total.trivial += c.trivial;
    total.leftmost += c.leftmost;
    total.rightmost += c.rightmost;
    total.isolated += c.isolated;
  }
  out.beta = to_mpz(total.beta);
  for (std::size_t i = 0; i < 6; ++i) out.blocked[i] = to_mpz(total.blocked[i]);
  out.trivial_marked = to_mpz(total.trivial);
  out.leftmost = to_mpz(total.leftmost);
  out.rightmost = to_mpz(total.rightmost);
  out.isolated = to_mpz(total.isolated);
  return out;
}

ForestCounts census_dp(const CountSeriesFamily& family, std::size_t n) {
  if (n == 0) {
    throw Error(Errc::invalid_argument, "B(n,k) needs n >= 1");
  }
  if (n > family.beta.degree()) {
    throw Error(Errc::cap_exceeded,
                "n = " + std::to_string(n) + " exceeds the series truncation " +
                    std::to_string(family.beta.degree()));
  }
  ForestCounts out;
  out.params = BBParams{n, family.k};
  out.beta = family.beta[n];
  out.trivial_marked = family.trivial_marked[n];
  out.leftmost = family.marked_leftmost[n];
  out.rightmost = family.marked_rightmost[n];
  out.isolated = family.isolated[n];
  auto set = [&out](ActionLabel a, const mpz_class& v) {
    out.blocked[static_cast<std::size_t>(a)] = v;
  };
  set(ActionLabel::x0, out.leftmost);
  set(ActionLabel::x0_inv, out.rightmost);
  set(ActionLabel::x1, out.trivial_marked);
  set(ActionLabel::x1bar, out.trivial_marked);
  set(ActionLabel::x1_inv, family.x1inv_blocked[n]);
  set(ActionLabel::x1bar_inv, family.x1barinv_blocked[n]);
  return out;
}

ForestCounts census(const BBParams& params, Mode mode,
                    const CensusOptions& options) {
  if (mode == Mode::enumerate) {
    return census_enumerate(params, options);
  }
  if (params.n == 0) {
    throw Error(Errc::invalid_argument, "B(n,k) needs n >= 1");
  }
  return census_dp(count_series(params.k, params.n), params.n);
}

bool SubgraphStats::satisfies_density_identity() const {
  if (vertices == 0) {
    return degree_sum == 0 && cheeger_total == 0;
  }
  return density + ratio(cheeger_total, vertices) == mpq_class(2 * m);
}

bool SubgraphStats::satisfies_lemma1() const {
  for (std::size_t a = 0; a < blocked.size(); ++a) {
    if (blocked[a] != blocked[inverse[a]]) {
      return false;
    }
  }
  return true;
}

std::vector<ActionLabel> action_labels(GenSetKind kind) {
  using A = ActionLabel;
  switch (kind) {
    case GenSetKind::standard: return {A::x0, A::x0_inv, A::x1, A::x1_inv};
    case GenSetKind::symmetric:
      return {A::x1, A::x1_inv, A::x1bar, A::x1bar_inv};
    case GenSetKind::extended:
      return {A::x0, A::x0_inv, A::x1, A::x1_inv, A::x1bar, A::x1bar_inv};
    case GenSetKind::custom: break;
  }
  throw Error(Errc::invalid_argument,
              "the forest model carries only the standard, symmetric and "
              "extended generating sets");
}

namespace {

SubgraphStats finish(SubgraphStats s) {
  s.degree_sum = 0;
  for (const mpz_class& v : s.internal) {
    s.degree_sum += v;
  }
  s.density = s.vertices == 0 ? mpq_class(0) : ratio(s.degree_sum, s.vertices);
  s.density.canonicalize();
  s.cheeger_total = 2 * s.m * s.vertices - s.degree_sum;
  return s;
}

SubgraphStats skeleton(const GenSet& genset) {
  SubgraphStats s;
  s.m = static_cast<unsigned>(genset.rank());
  for (const SignedGenerator& g : genset.labels()) {
    s.labels.push_back(g.name);
    s.inverse.push_back(g.inverse);
  }
  return s;
}

}  // namespace

SubgraphStats stats_from_counts(const ForestCounts& counts,
                                const GenSet& genset) {
  const std::vector<ActionLabel> actions = action_labels(genset.kind());
  SubgraphStats s = skeleton(genset);
  s.vertices = counts.beta;
  for (ActionLabel a : actions) {
    s.blocked.push_back(counts.blocked_for(a));
    s.internal.push_back(counts.beta - counts.blocked_for(a));
  }
  return finish(std::move(s));
}

SubgraphStats stats_bb(const BBParams& params, const GenSet& genset,
                       Mode mode, const CensusOptions& options) {
  action_labels(genset.kind());  // reject custom sets before counting
  return stats_from_counts(census(params, mode, options), genset);
}

mpz_class isolated_census(const BBParams& params, Mode mode,
                          const CensusOptions& options) {
  return census(params, mode, options).isolated;
}

SubgraphStats bprime_from_counts(const ForestCounts& counts) {
  SubgraphStats s = stats_from_counts(counts, GenSet::symmetric());
  // Isolated vertices carry no internal edge and block all four labels.
  s.vertices -= counts.isolated;
  for (mpz_class& b : s.blocked) {
    b -= counts.isolated;
  }
  return finish(std::move(s));
}

SubgraphStats bprime_stats(const BBParams& params, Mode mode,
                           const CensusOptions& options) {
  return bprime_from_counts(census(params, mode, options));
}

DoublingBound doubling_from_counts(const ForestCounts& counts) {
  DoublingBound out;
  out.upper_bound = 3 * counts.trivial_marked + counts.leftmost + counts.rightmost;
  out.ratio = ratio(out.upper_bound, counts.beta);
  out.refined_bound = out.upper_bound + counts.leftmost;
  out.refined_ratio = ratio(out.refined_bound, counts.beta);
  return out;
}

DoublingBound doubling_bound(const BBParams& params, Mode mode,
                             const CensusOptions& options) {
  return doubling_from_counts(census(params, mode, options));
}

const NormalForm& label_element(ActionLabel a) {
  static const std::array<NormalForm, 6> table = [] {
    using namespace words;
    return std::array<NormalForm, 6>{
        normalize(x(0)),         normalize(x_inv(0)),
        normalize(x(1)),         normalize(x_inv(1)),
        normalize(xbar1()),      normalize(inverse(xbar1()))};
  }();
  return table[static_cast<std::size_t>(a)];
}

std::optional<MarkedForest> perturbed_apply(ActionLabel a,
                                            const MarkedForest& f) {
  return apply(a == ActionLabel::x1 ? ActionLabel::x1bar : a, f);
}

const NormalForm& Embedding::element_of(const MarkedForest& f) const {
  auto it = index_.find(encode(f));
  if (it == index_.end()) {
    throw Error(Errc::invalid_argument,
                "forest " + encode(f) + " is not in " + bb_name(params));
  }
  return elements[it->second];
}

Embedding embed(const BBParams& params, const ActionRule& rule,
                std::size_t n_cap) {
  if (params.n > n_cap) {
    throw Error(Errc::cap_exceeded, "embedding is limited to n <= " +
                                        std::to_string(n_cap));
  }
  const ActionRule act =
      rule ? rule : ActionRule([](ActionLabel a, const MarkedForest& f) {
        return apply(a, f);
      });
  Embedding e;
  e.params = params;
  e.forests = enumerate_bb(params);
  for (std::size_t i = 0; i < e.forests.size(); ++i) {
    e.index_.emplace(encode(e.forests[i]), i);
  }
  std::vector<std::optional<NormalForm>> assigned(e.forests.size());
  const std::size_t base = e.index_.at(encode(MarkedForest::base(params.n)));
  assigned[base] = NormalForm{};
  std::deque<std::size_t> queue{base};
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    const MarkedForest& f = e.forests[i];
    for (ActionLabel a : kAllLabels) {
      std::optional<MarkedForest> g = act(a, f);
      if (!g || !in_bb(*g, params)) {
        continue;
      }
      auto it = e.index_.find(encode(*g));
      if (it == e.index_.end()) {
        throw Error(Errc::invariant_violation,
                    "action produced a forest outside " + bb_name(params));
      }
      NormalForm expected = multiply(*assigned[i], label_element(a));
      ++e.edges_checked;
      auto& slot = assigned[it->second];
      if (!slot) {
        slot = std::move(expected);
        queue.push_back(it->second);
      } else if (*slot != expected) {
        throw Error(Errc::invariant_violation,
                    "edge " + encode(f) + " --" + std::string(name(a)) + "--> " +
                        encode(*g) + " disagrees with right multiplication");
      }
    }
  }
  ElementSet distinct;
  e.elements.reserve(e.forests.size());
  for (std::size_t i = 0; i < assigned.size(); ++i) {
    if (!assigned[i]) {
      throw Error(Errc::invariant_violation,
                  bb_name(params) + " is not connected: " +
                      encode(e.forests[i]) + " unreachable");
    }
    if (!distinct.insert(*assigned[i]).second) {
      throw Error(Errc::invariant_violation,
                  "two forests of " + bb_name(params) + " share the element " +
                      to_string(*assigned[i]));
    }
    e.elements.push_back(std::move(*assigned[i]));
  }
  return e;
}

std::size_t outer_boundary_exact(const Embedding& embedding,
                                 const GenSet& genset) {
  const ElementSet image(embedding.elements.begin(), embedding.elements.end());
  ElementSet boundary;
  for (const NormalForm& y : embedding.elements) {
    for (const SignedGenerator& a : genset.labels()) {
      NormalForm h = multiply(y, a.element);
      if (!image.contains(h)) {
        boundary.insert(std::move(h));
      }
    }
  }
  return boundary.size();
}

SubgraphStats stats_elements(std::span<const NormalForm> ys,
                             const GenSet& genset) {
  const ElementSet members(ys.begin(), ys.end());
  SubgraphStats s = skeleton(genset);
  const std::size_t labels = genset.labels().size();
  std::vector<std::uint64_t> internal(labels, 0);
  for (const NormalForm& y : members) {
    for (std::size_t a = 0; a < labels; ++a) {
      if (members.contains(multiply(y, genset.labels()[a].element))) {
        ++internal[a];
      }
    }
  }
  s.vertices = to_mpz(members.size());
  for (std::size_t a = 0; a < labels; ++a) {
    s.internal.push_back(to_mpz(internal[a]));
    s.blocked.push_back(s.vertices - s.internal.back());
  }
  return finish(std::move(s));
}

}  // namespace thompson
