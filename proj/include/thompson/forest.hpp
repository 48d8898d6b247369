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

// Marked rooted binary forests and the partial action of x0, x1 and xbar1.
//
// Textual grammar:
//
//     tree   := "." | "(" tree tree ")"
//     item   := tree | "*" tree
//     forest := item (" " item)*        exactly one item carries the star

#ifndef THOMPSON_FOREST_HPP_
#define THOMPSON_FOREST_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace thompson {

class Tree {
 public:
  Tree() = default;  // the trivial tree

  static Tree leaf() { return Tree(); }
  static Tree caret(Tree left, Tree right);

  bool is_leaf() const noexcept { return !node_; }
  const Tree& left() const;
  const Tree& right() const;
  std::size_t leaves() const noexcept;
  unsigned height() const noexcept;

  friend bool operator==(const Tree& a, const Tree& b);

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

struct Tree::Node {
  Tree left;
  Tree right;
  std::size_t leaves;
  unsigned height;
};

class MarkedForest {
 public:
  // Throws Error(invalid_argument) on an empty sequence or bad mark.
  MarkedForest(std::vector<Tree> trees, std::size_t mark);

  const std::vector<Tree>& trees() const noexcept { return trees_; }
  std::size_t mark() const noexcept { return mark_; }
  const Tree& marked() const { return trees_[mark_]; }
  std::size_t size() const noexcept { return trees_.size(); }
  std::size_t leaves() const noexcept;
  bool leftmost() const noexcept { return mark_ == 0; }
  bool rightmost() const noexcept { return mark_ + 1 == trees_.size(); }

  // n trivial trees, leftmost marked.
  static MarkedForest base(std::size_t n);

  friend bool operator==(const MarkedForest&, const MarkedForest&) = default;

 private:
  friend class ForestCursor;
  std::vector<Tree> trees_;
  std::size_t mark_;
};

struct BBParams {
  std::size_t n = 1;  // total leaves, >= 1
  unsigned k = 0;     // height bound
};

bool in_bb(const MarkedForest& f, const BBParams& params);

enum class ActionLabel : std::uint8_t {
  x0,
  x0_inv,
  x1,
  x1_inv,
  x1bar,
  x1bar_inv,
};

inline constexpr std::array<ActionLabel, 6> kAllLabels = {
    ActionLabel::x0,    ActionLabel::x0_inv,    ActionLabel::x1,
    ActionLabel::x1_inv, ActionLabel::x1bar, ActionLabel::x1bar_inv};

ActionLabel inverse(ActionLabel a) noexcept;
std::string_view name(ActionLabel a) noexcept;

// The unbounded partial action on n-leaf forests; nullopt when undefined.
std::optional<MarkedForest> apply(ActionLabel a, const MarkedForest& f);

// The action restricted to B(n, k); nullopt when undefined or when the result
// leaves B(n, k). Only x1^{-1} and xbar1^{-1} can exit through the height
// bound.
std::optional<MarkedForest> apply_within(ActionLabel a, const MarkedForest& f,
                                         const BBParams& params);

// Same predicate as apply_within without building the image.
bool accepts_within(ActionLabel a, const MarkedForest& f, unsigned k) noexcept;

std::string encode(const Tree& t);
std::string encode(const MarkedForest& f);
Tree decode_tree(std::string_view text);
MarkedForest decode(std::string_view text);

// Memoized catalogue of trees by (leaves, height bound). Not thread-safe for
// concurrent first use of a new key; callers warm it before fanning out.
class TreeCatalog {
 public:
  const std::vector<Tree>& trees(std::size_t leaves, unsigned k);

 private:
  std::map<std::pair<std::size_t, unsigned>, std::vector<Tree>> memo_;
};

// All trees with n leaves and height <= k, ordered by encoding.
std::vector<Tree> enumerate_trees(std::size_t n, unsigned k);

inline constexpr double kDefaultEnumerationCap = 1e8;

// Floating-point estimate of #B(n, k) used for refusal checks.
double estimate_bb(const BBParams& params);

// Visits every forest of B(n, k) whose first tree has `first_leaves` leaves
// (0 = no restriction). The forest passed to the visitor is reused between
// calls.
void for_each_bb(const BBParams& params, TreeCatalog& catalog,
                 const std::function<void(const MarkedForest&)>& visit,
                 std::size_t first_leaves = 0);

// Exactly B(n, k) ordered by encoding; refuses when the estimate exceeds cap.
std::vector<MarkedForest> enumerate_bb(const BBParams& params,
                                       double cap = kDefaultEnumerationCap);

}  // namespace thompson

#endif  // THOMPSON_FOREST_HPP_
