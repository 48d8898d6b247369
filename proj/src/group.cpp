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

#include "thompson/group.hpp"

#include <algorithm>
#include <cctype>

#include "thompson/error.hpp"

namespace thompson {

GeneratorWord operator*(const GeneratorWord& a, const GeneratorWord& b) {
  std::vector<Letter> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.letters.begin(), a.letters.end());
  out.insert(out.end(), b.letters.begin(), b.letters.end());
  return GeneratorWord(std::move(out));
}

namespace words {

GeneratorWord x(Index i) { return GeneratorWord{Letter{i, false}}; }
GeneratorWord x_inv(Index i) { return GeneratorWord{Letter{i, true}}; }

GeneratorWord inverse(const GeneratorWord& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    out.push_back(Letter{it->index, !it->inverse});
  }
  return GeneratorWord(std::move(out));
}

GeneratorWord power(const GeneratorWord& w, int e) {
  const GeneratorWord base = e < 0 ? inverse(w) : w;
  GeneratorWord out;
  for (int i = 0; i < (e < 0 ? -e : e); ++i) {
    out = out * base;
  }
  return out;
}

GeneratorWord conjugate(const GeneratorWord& a, const GeneratorWord& b) {
  return inverse(b) * a * b;
}

GeneratorWord commutator(const GeneratorWord& a, const GeneratorWord& b) {
  return inverse(a) * inverse(b) * a * b;
}

GeneratorWord commuting_lhs(const GeneratorWord& a, const GeneratorWord& b) {
  return a * b;
}

GeneratorWord commuting_rhs(const GeneratorWord& a, const GeneratorWord& b) {
  return b * a;
}

GeneratorWord alpha() { return x_inv(1); }
GeneratorWord beta() { return x(0) * x_inv(1); }
GeneratorWord xbar1() { return x(1) * x_inv(0); }

}  // namespace words

GeneratorWord parse_word(std::string_view text) {
  std::vector<Letter> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == 'e') {
      ++i;
      continue;
    }
    if (c != 'x' && c != 'X') {
      throw ParseError(i, std::string("unexpected character '") + c + "'");
    }
    std::size_t j = i + 1;
    if (j >= text.size() || !std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw ParseError(j, "expected generator index");
    }
    Index value = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
      const Index digit = static_cast<Index>(text[j] - '0');
      if (value > (~Index{0} - digit) / 10) {
        throw ParseError(i, "generator index overflows");
      }
      value = value * 10 + digit;
      ++j;
    }
    out.push_back(Letter{value, c == 'X'});
    i = j;
  }
  return GeneratorWord(std::move(out));
}

std::string to_string(const GeneratorWord& w) {
  if (w.empty()) {
    return "e";
  }
  std::string out;
  for (const Letter& l : w.letters) {
    if (!out.empty()) {
      out += ' ';
    }
    out += l.inverse ? 'X' : 'x';
    out += std::to_string(l.index);
  }
  return out;
}

bool NormalForm::is_valid(std::span<const Index> pos,
                          std::span<const Index> neg) {
  if (!std::is_sorted(pos.begin(), pos.end()) ||
      !std::is_sorted(neg.begin(), neg.end())) {
    return false;
  }
  auto contains = [](std::span<const Index> v, Index i) {
    return std::binary_search(v.begin(), v.end(), i);
  };
  for (Index i : pos) {
    if (contains(neg, i) && !contains(pos, i + 1) && !contains(neg, i + 1)) {
      return false;
    }
  }
  return true;
}

NormalForm NormalForm::from_parts(std::vector<Index> pos,
                                  std::vector<Index> neg) {
  if (!is_valid(pos, neg)) {
    throw Error(Errc::invalid_argument, "not a reduced normal form");
  }
  NormalForm g;
  g.pos_ = std::move(pos);
  g.neg_ = std::move(neg);
  return g;
}

GeneratorWord NormalForm::word() const {
  std::vector<Letter> out;
  out.reserve(length());
  for (Index i : pos_) {
    out.push_back(Letter{i, false});
  }
  for (auto it = neg_.rbegin(); it != neg_.rend(); ++it) {
    out.push_back(Letter{*it, true});
  }
  return GeneratorWord(std::move(out));
}

void NormalForm::right_multiply(Letter l) {
  if (l.inverse) {
    // g x_i^{-1} = P (x_i N)^{-1}; x_i moves right through the ascending word
    // N, using x_i x_j = x_j x_{i+1} for j < i.
    Index cur = l.index;
    std::size_t r = 0;
    while (r < neg_.size() && neg_[r] < cur) {
      ++cur;
      ++r;
    }
    neg_.insert(neg_.begin() + static_cast<std::ptrdiff_t>(r), cur);
  } else {
    // g x_i = P N^{-1} x_i; x_i moves left through N^{-1}, smallest index
    // first.
    Index cur = l.index;
    std::size_t r = 0;
    bool cancelled = false;
    while (r < neg_.size()) {
      if (neg_[r] < cur) {
        ++cur;
        ++r;
      } else if (neg_[r] == cur) {
        neg_.erase(neg_.begin() + static_cast<std::ptrdiff_t>(r));
        cancelled = true;
        break;
      } else {
        for (std::size_t q = r; q < neg_.size(); ++q) {
          ++neg_[q];
        }
        break;
      }
    }
    if (!cancelled) {
      // P x_cur: x_cur moves left past larger indices p, which become p + 1.
      auto it = std::upper_bound(pos_.begin(), pos_.end(), cur);
      for (auto q = it; q != pos_.end(); ++q) {
        ++*q;
      }
      pos_.insert(it, cur);
    }
  }
  reduce();
}

void NormalForm::reduce() {
  auto contains = [](const std::vector<Index>& v, Index i) {
    return std::binary_search(v.begin(), v.end(), i);
  };
  for (;;) {
    bool changed = false;
    // Scan from the largest index down; removing a pair can only expose a
    // violation at the same or a smaller index.
    for (auto it = pos_.rbegin(); it != pos_.rend(); ++it) {
      const Index i = *it;
      if (!contains(neg_, i) || contains(pos_, i + 1) ||
          contains(neg_, i + 1)) {
        continue;
      }
      // x_i w x_i^{-1} with every index in w at least i + 2 equals w with
      // every index lowered by one.
      auto p = std::upper_bound(pos_.begin(), pos_.end(), i) - 1;
      auto n = std::upper_bound(neg_.begin(), neg_.end(), i) - 1;
      p = pos_.erase(p);
      for (; p != pos_.end(); ++p) {
        --*p;
      }
      n = neg_.erase(n);
      for (; n != neg_.end(); ++n) {
        --*n;
      }
      changed = true;
      break;
    }
    if (!changed) {
      return;
    }
  }
}

std::string to_string(const NormalForm& g) { return to_string(g.word()); }

NormalForm parse_element(std::string_view text) {
  return normalize(parse_word(text));
}

std::size_t NormalFormHash::operator()(const NormalForm& g) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (Index i : g.pos()) {
    mix(i);
  }
  mix(0xffffffffffffffffULL);
  for (Index i : g.neg()) {
    mix(i);
  }
  return static_cast<std::size_t>(h);
}

NormalForm normalize(const GeneratorWord& w) {
  NormalForm g;
  for (const Letter& l : w.letters) {
    g.right_multiply(l);
  }
  return g;
}

NormalForm multiply(const NormalForm& a, const GeneratorWord& w) {
  NormalForm g = a;
  for (const Letter& l : w.letters) {
    g.right_multiply(l);
  }
  return g;
}

NormalForm multiply(const NormalForm& a, const NormalForm& b) {
  NormalForm g = a;
  for (Index i : b.pos()) {
    g.right_multiply(Letter{i, false});
  }
  for (auto it = b.neg().rbegin(); it != b.neg().rend(); ++it) {
    g.right_multiply(Letter{*it, true});
  }
  return g;
}

NormalForm invert(const NormalForm& a) {
  // (P N^{-1})^{-1} = N P^{-1}, already reduced.
  return NormalForm::from_parts(a.neg(), a.pos());
}

Endomorphism symmetry_automorphism() {
  return Endomorphism{words::x_inv(0), words::x(1) * words::x_inv(0)};
}

namespace {

class ImageTable {
 public:
  explicit ImageTable(const Endomorphism& images)
      : x0_(normalize(images.x0)), x0_inv_(invert(x0_)) {
    table_.push_back(x0_);
    table_.push_back(normalize(images.x1));
  }

  const NormalForm& image(Index i) {
    while (table_.size() <= i) {
      // x_{n+1} = x0^{-1} x_n x0
      table_.push_back(multiply(multiply(x0_inv_, table_.back()), x0_));
    }
    return table_[i];
  }

 private:
  NormalForm x0_;
  NormalForm x0_inv_;
  std::vector<NormalForm> table_;
};

}  // namespace

NormalForm apply_endomorphism(const Endomorphism& images,
                              const GeneratorWord& w) {
  ImageTable table(images);
  NormalForm out;
  for (const Letter& l : w.letters) {
    const NormalForm& img = table.image(l.index);
    out = multiply(out, l.inverse ? invert(img) : img);
  }
  return out;
}

NormalForm apply_endomorphism(const Endomorphism& images, const NormalForm& g) {
  return apply_endomorphism(images, g.word());
}

bool verify_relation(const GeneratorWord& lhs, const GeneratorWord& rhs) {
  return normalize(lhs) == normalize(rhs);
}

GenSet::GenSet(GenSetKind kind, std::string name,
               std::vector<GeneratorWord> generators,
               std::vector<std::string> names)
    : kind_(kind), name_(std::move(name)), generators_(std::move(generators)) {
  if (generators_.empty()) {
    throw Error(Errc::invalid_argument, "generating set is empty");
  }
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    NormalForm g = normalize(generators_[i]);
    if (g.is_identity()) {
      throw Error(Errc::invalid_argument,
                  "generator " + names[i] + " is the identity");
    }
    labels_.push_back(SignedGenerator{names[i], g, 2 * i + 1});
    labels_.push_back(SignedGenerator{names[i] + "^-1", invert(g), 2 * i});
  }
}

GenSet GenSet::standard() {
  return GenSet(GenSetKind::standard, "standard", {words::x(0), words::x(1)},
                {"x0", "x1"});
}

GenSet GenSet::symmetric() {
  return GenSet(GenSetKind::symmetric, "symmetric",
                {words::x(1), words::xbar1()}, {"x1", "xbar1"});
}

GenSet GenSet::extended() {
  return GenSet(GenSetKind::extended, "extended",
                {words::x(0), words::x(1), words::xbar1()},
                {"x0", "x1", "xbar1"});
}

GenSet GenSet::custom(std::vector<GeneratorWord> generators) {
  std::vector<std::string> names;
  std::string joined;
  for (const auto& g : generators) {
    names.push_back(to_string(g));
    joined += (joined.empty() ? "" : ",") + names.back();
  }
  return GenSet(GenSetKind::custom, "custom:" + joined, std::move(generators),
                std::move(names));
}

GenSet GenSet::parse(std::string_view text) {
  if (text == "standard") {
    return standard();
  }
  if (text == "symmetric") {
    return symmetric();
  }
  if (text == "extended") {
    return extended();
  }
  constexpr std::string_view prefix = "custom:";
  if (text.substr(0, prefix.size()) != prefix) {
    throw ParseError(0, "unknown generating set '" + std::string(text) + "'");
  }
  std::vector<GeneratorWord> gens;
  std::size_t start = prefix.size();
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) {
      comma = text.size();
    }
    std::string_view piece = text.substr(start, comma - start);
    try {
      gens.push_back(parse_word(piece));
    } catch (const ParseError& e) {
      throw ParseError(start + e.position(), "bad generator word");
    }
    if (gens.back().empty()) {
      throw ParseError(start, "empty generator word");
    }
    start = comma + 1;
  }
  return custom(std::move(gens));
}

std::vector<NormalForm> ball(const GenSet& genset, unsigned radius,
                             unsigned radius_cap) {
  if (radius > radius_cap) {
    throw Error(Errc::cap_exceeded, "ball radius " + std::to_string(radius) +
                                        " exceeds the cap of " +
                                        std::to_string(radius_cap));
  }
  ElementSet seen{NormalForm{}};
  std::vector<NormalForm> frontier{NormalForm{}};
  for (unsigned r = 0; r < radius; ++r) {
    std::vector<NormalForm> next;
    for (const NormalForm& g : frontier) {
      for (const SignedGenerator& a : genset.labels()) {
        NormalForm h = multiply(g, a.element);
        if (seen.insert(h).second) {
          next.push_back(std::move(h));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<NormalForm> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> cheeger_per_label(std::span<const NormalForm> ys,
                                             const GenSet& genset) {
  const ElementSet members(ys.begin(), ys.end());
  std::vector<std::uint64_t> counts(genset.labels().size(), 0);
  for (const NormalForm& y : members) {
    for (std::size_t a = 0; a < genset.labels().size(); ++a) {
      if (!members.contains(multiply(y, genset.labels()[a].element))) {
        ++counts[a];
      }
    }
  }
  return counts;
}

}  // namespace thompson
