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

#include "thompson/forest.hpp"

#include <algorithm>
#include <cmath>

#include "thompson/error.hpp"

namespace thompson {

Tree Tree::caret(Tree left, Tree right) {
  const std::size_t leaves = left.leaves() + right.leaves();
  const unsigned height = std::max(left.height(), right.height()) + 1;
  Tree t;
  t.node_ = std::make_shared<const Node>(
      Node{std::move(left), std::move(right), leaves, height});
  return t;
}

const Tree& Tree::left() const {
  if (!node_) {
    throw Error(Errc::invalid_argument, "trivial tree has no children");
  }
  return node_->left;
}

const Tree& Tree::right() const {
  if (!node_) {
    throw Error(Errc::invalid_argument, "trivial tree has no children");
  }
  return node_->right;
}

std::size_t Tree::leaves() const noexcept { return node_ ? node_->leaves : 1; }

unsigned Tree::height() const noexcept { return node_ ? node_->height : 0; }

bool operator==(const Tree& a, const Tree& b) {
  if (a.node_ == b.node_) {
    return true;
  }
  if (!a.node_ || !b.node_) {
    return false;
  }
  return a.node_->leaves == b.node_->leaves &&
         a.node_->height == b.node_->height && a.node_->left == b.node_->left &&
         a.node_->right == b.node_->right;
}

MarkedForest::MarkedForest(std::vector<Tree> trees, std::size_t mark)
    : trees_(std::move(trees)), mark_(mark) {
  if (trees_.empty()) {
    throw Error(Errc::invalid_argument, "a forest needs at least one tree");
  }
  if (mark_ >= trees_.size()) {
    throw Error(Errc::invalid_argument, "mark index out of range");
  }
}

std::size_t MarkedForest::leaves() const noexcept {
  std::size_t total = 0;
  for (const Tree& t : trees_) {
    total += t.leaves();
  }
  return total;
}

MarkedForest MarkedForest::base(std::size_t n) {
  return MarkedForest(std::vector<Tree>(n), 0);
}

bool in_bb(const MarkedForest& f, const BBParams& params) {
  return f.leaves() == params.n &&
         std::all_of(f.trees().begin(), f.trees().end(),
                     [&](const Tree& t) { return t.height() <= params.k; });
}

ActionLabel inverse(ActionLabel a) noexcept {
  switch (a) {
    case ActionLabel::x0: return ActionLabel::x0_inv;
    case ActionLabel::x0_inv: return ActionLabel::x0;
    case ActionLabel::x1: return ActionLabel::x1_inv;
    case ActionLabel::x1_inv: return ActionLabel::x1;
    case ActionLabel::x1bar: return ActionLabel::x1bar_inv;
    case ActionLabel::x1bar_inv: return ActionLabel::x1bar;
  }
  return a;
}

std::string_view name(ActionLabel a) noexcept {
  switch (a) {
    case ActionLabel::x0: return "x0";
    case ActionLabel::x0_inv: return "x0^-1";
    case ActionLabel::x1: return "x1";
    case ActionLabel::x1_inv: return "x1^-1";
    case ActionLabel::x1bar: return "xbar1";
    case ActionLabel::x1bar_inv: return "xbar1^-1";
  }
  return "?";
}

std::optional<MarkedForest> apply(ActionLabel a, const MarkedForest& f) {
  const std::size_t m = f.mark();
  const auto& ts = f.trees();
  switch (a) {
    case ActionLabel::x0:
      if (f.leftmost()) return std::nullopt;
      return MarkedForest(ts, m - 1);
    case ActionLabel::x0_inv:
      if (f.rightmost()) return std::nullopt;
      return MarkedForest(ts, m + 1);
    case ActionLabel::x1:
    case ActionLabel::x1bar: {
      if (f.marked().is_leaf()) return std::nullopt;
      std::vector<Tree> out;
      out.reserve(ts.size() + 1);
      out.insert(out.end(), ts.begin(), ts.begin() + m);
      out.push_back(ts[m].left());
      out.push_back(ts[m].right());
      out.insert(out.end(), ts.begin() + m + 1, ts.end());
      return MarkedForest(std::move(out), a == ActionLabel::x1 ? m : m + 1);
    }
    case ActionLabel::x1_inv:
    case ActionLabel::x1bar_inv: {
      const bool right = a == ActionLabel::x1_inv;
      if (right ? f.rightmost() : f.leftmost()) return std::nullopt;
      const std::size_t at = right ? m : m - 1;
      std::vector<Tree> out;
      out.reserve(ts.size() - 1);
      out.insert(out.end(), ts.begin(), ts.begin() + at);
      out.push_back(Tree::caret(ts[at], ts[at + 1]));
      out.insert(out.end(), ts.begin() + at + 2, ts.end());
      return MarkedForest(std::move(out), at);
    }
  }
  return std::nullopt;
}

std::optional<MarkedForest> apply_within(ActionLabel a, const MarkedForest& f,
                                         const BBParams& params) {
  if (!in_bb(f, params)) {
    throw Error(Errc::invalid_argument, "forest " + encode(f) +
                                            " is not in B(" +
                                            std::to_string(params.n) + "," +
                                            std::to_string(params.k) + ")");
  }
  auto g = apply(a, f);
  if (g && !in_bb(*g, params)) {
    return std::nullopt;
  }
  return g;
}

bool accepts_within(ActionLabel a, const MarkedForest& f,
                    unsigned k) noexcept {
  const std::size_t m = f.mark();
  const auto& ts = f.trees();
  switch (a) {
    case ActionLabel::x0: return !f.leftmost();
    case ActionLabel::x0_inv: return !f.rightmost();
    case ActionLabel::x1:
    case ActionLabel::x1bar: return !ts[m].is_leaf();
    case ActionLabel::x1_inv:
      return !f.rightmost() && ts[m].height() < k && ts[m + 1].height() < k;
    case ActionLabel::x1bar_inv:
      return !f.leftmost() && ts[m - 1].height() < k && ts[m].height() < k;
  }
  return false;
}

namespace {

void encode_into(const Tree& t, std::string& out) {
  if (t.is_leaf()) {
    out += '.';
    return;
  }
  out += '(';
  encode_into(t.left(), out);
  encode_into(t.right(), out);
  out += ')';
}

Tree parse_tree(std::string_view text, std::size_t& pos) {
  if (pos >= text.size()) {
    throw ParseError(pos, "expected '.' or '('");
  }
  if (text[pos] == '.') {
    ++pos;
    return Tree::leaf();
  }
  if (text[pos] != '(') {
    throw ParseError(pos, std::string("unexpected character '") + text[pos] +
                              "', expected '.' or '('");
  }
  ++pos;
  Tree left = parse_tree(text, pos);
  Tree right = parse_tree(text, pos);
  if (pos >= text.size() || text[pos] != ')') {
    throw ParseError(pos, "expected ')'");
  }
  ++pos;
  return Tree::caret(std::move(left), std::move(right));
}

}  // namespace

std::string encode(const Tree& t) {
  std::string out;
  encode_into(t, out);
  return out;
}

std::string encode(const MarkedForest& f) {
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i > 0) {
      out += ' ';
    }
    if (i == f.mark()) {
      out += '*';
    }
    encode_into(f.trees()[i], out);
  }
  return out;
}

Tree decode_tree(std::string_view text) {
  std::size_t pos = 0;
  Tree t = parse_tree(text, pos);
  if (pos != text.size()) {
    throw ParseError(pos, "trailing characters after tree");
  }
  return t;
}

MarkedForest decode(std::string_view text) {
  std::vector<Tree> trees;
  std::optional<std::size_t> mark;
  std::size_t pos = 0;
  for (;;) {
    if (pos < text.size() && text[pos] == '*') {
      if (mark) {
        throw ParseError(pos, "second marked tree");
      }
      mark = trees.size();
      ++pos;
    }
    trees.push_back(parse_tree(text, pos));
    if (pos == text.size()) {
      break;
    }
    if (text[pos] != ' ') {
      throw ParseError(pos, "expected ' ' between trees");
    }
    ++pos;
  }
  if (!mark) {
    throw ParseError(text.size(), "no marked tree");
  }
  return MarkedForest(std::move(trees), *mark);
}

const std::vector<Tree>& TreeCatalog::trees(std::size_t leaves, unsigned k) {
  const auto key = std::make_pair(leaves, k);
  if (auto it = memo_.find(key); it != memo_.end()) {
    return it->second;
  }
  std::vector<Tree> out;
  if (leaves == 1) {
    out.push_back(Tree::leaf());
  } else if (leaves > 1 && k > 0 &&
             (k >= 64 || leaves <= (std::size_t{1} << k))) {
    for (std::size_t a = 1; a < leaves; ++a) {
      const auto& lefts = trees(a, k - 1);
      const auto& rights = trees(leaves - a, k - 1);
      for (const Tree& l : lefts) {
        for (const Tree& r : rights) {
          out.push_back(Tree::caret(l, r));
        }
      }
    }
  }
  return memo_.emplace(key, std::move(out)).first->second;
}

std::vector<Tree> enumerate_trees(std::size_t n, unsigned k) {
  if (n == 0) {
    throw Error(Errc::invalid_argument, "a tree has at least one leaf");
  }
  TreeCatalog catalog;
  std::vector<std::pair<std::string, Tree>> keyed;
  for (const Tree& t : catalog.trees(n, k)) {
    keyed.emplace_back(encode(t), t);
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Tree> out;
  out.reserve(keyed.size());
  for (auto& [key, t] : keyed) {
    out.push_back(std::move(t));
  }
  return out;
}

double estimate_bb(const BBParams& params) {
  const std::size_t n = params.n;
  // trees[s]: trees with s leaves and height <= h, for increasing h.
  std::vector<double> trees(n + 1, 0.0);
  if (n >= 1) trees[1] = 1.0;
  for (unsigned h = 1; h <= params.k && h <= n; ++h) {
    std::vector<double> next(n + 1, 0.0);
    next[1] = 1.0;
    for (std::size_t s = 2; s <= n; ++s) {
      for (std::size_t a = 1; a < s; ++a) {
        next[s] += trees[a] * trees[s - a];
      }
    }
    trees = std::move(next);
  }
  std::vector<double> seq(n + 1, 0.0);  // unmarked tree sequences
  seq[0] = 1.0;
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t s = 1; s <= m; ++s) {
      seq[m] += trees[s] * seq[m - s];
    }
  }
  double total = 0.0;
  for (std::size_t s = 1; s <= n; ++s) {
    for (std::size_t a = 0; a + s <= n; ++a) {
      total += seq[a] * trees[s] * seq[n - s - a];
    }
  }
  return total;
}

class ForestCursor {
 public:
  ForestCursor(const BBParams& params, TreeCatalog& catalog,
               const std::function<void(const MarkedForest&)>& visit)
      : params_(params),
        catalog_(catalog),
        visit_(visit),
        forest_(std::vector<Tree>(1), 0) {
    forest_.trees_.clear();
  }

  void run(std::size_t first_leaves) {
    if (first_leaves == 0) {
      extend(params_.n);
      return;
    }
    if (first_leaves > params_.n) {
      return;
    }
    for (const Tree& t : catalog_.trees(first_leaves, params_.k)) {
      forest_.trees_.push_back(t);
      extend(params_.n - first_leaves);
      forest_.trees_.pop_back();
    }
  }

 private:
  void extend(std::size_t remaining) {
    if (remaining == 0) {
      for (std::size_t m = 0; m < forest_.trees_.size(); ++m) {
        forest_.mark_ = m;
        visit_(forest_);
      }
      return;
    }
    for (std::size_t s = 1; s <= remaining; ++s) {
      const auto& choices = catalog_.trees(s, params_.k);
      if (choices.empty()) {
        break;  // no tree of height <= k has s or more leaves
      }
      for (const Tree& t : choices) {
        forest_.trees_.push_back(t);
        extend(remaining - s);
        forest_.trees_.pop_back();
      }
    }
  }

  const BBParams& params_;
  TreeCatalog& catalog_;
  const std::function<void(const MarkedForest&)>& visit_;
  MarkedForest forest_;
};

void for_each_bb(const BBParams& params, TreeCatalog& catalog,
                 const std::function<void(const MarkedForest&)>& visit,
                 std::size_t first_leaves) {
  if (params.n == 0) {
    throw Error(Errc::invalid_argument, "B(n,k) needs n >= 1");
  }
  ForestCursor cursor(params, catalog, visit);
  cursor.run(first_leaves);
}

std::vector<MarkedForest> enumerate_bb(const BBParams& params, double cap) {
  const double estimate = estimate_bb(params);
  if (estimate > cap) {
    throw Error(Errc::cap_exceeded,
                "B(" + std::to_string(params.n) + "," +
                    std::to_string(params.k) + ") has an estimated " +
                    std::to_string(static_cast<long double>(estimate)) +
                    " forests, above the cap");
  }
  TreeCatalog catalog;
  std::vector<std::pair<std::string, MarkedForest>> keyed;
  for_each_bb(params, catalog, [&](const MarkedForest& f) {
    keyed.emplace_back(encode(f), f);
  });
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<MarkedForest> out;
  out.reserve(keyed.size());
  for (auto& [key, f] : keyed) {
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace thompson
