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

// Exact arithmetic in Thompson's group F.
//
// Elements are kept in the unique normal form
//
//     x_{i_1} x_{i_2} ... x_{i_s} x_{j_t}^{-1} ... x_{j_2}^{-1} x_{j_1}^{-1}
//
// with i_1 <= ... <= i_s, j_1 <= ... <= j_t, and the reduction condition: if
// some index i occurs in both parts then i + 1 occurs in one of them.
//
// Words are read left to right: the word a_1 a_2 ... a_n applies a_1 first,
// so edges of the right Cayley graph g -> g a follow the letters in order.

#ifndef THOMPSON_GROUP_HPP_
#define THOMPSON_GROUP_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace thompson {

using Index = std::uint64_t;

// x_index or its inverse.
struct Letter {
  Index index = 0;
  bool inverse = false;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

struct GeneratorWord {
  std::vector<Letter> letters;

  GeneratorWord() = default;
  GeneratorWord(std::initializer_list<Letter> ls) : letters(ls) {}
  explicit GeneratorWord(std::vector<Letter> ls) : letters(std::move(ls)) {}

  bool empty() const noexcept { return letters.empty(); }
  std::size_t size() const noexcept { return letters.size(); }

  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;
};

// Concatenation.
GeneratorWord operator*(const GeneratorWord& a, const GeneratorWord& b);

namespace words {

GeneratorWord x(Index i);
GeneratorWord x_inv(Index i);
GeneratorWord inverse(const GeneratorWord& w);
// w^e for any integer e; negative exponents invert.
GeneratorWord power(const GeneratorWord& w, int e);
// a^b = b^{-1} a b
GeneratorWord conjugate(const GeneratorWord& a, const GeneratorWord& b);
// [a, b] = a^{-1} b^{-1} a b
GeneratorWord commutator(const GeneratorWord& a, const GeneratorWord& b);
// Word for the relation "a commutes with b", i.e. the pair (ab, ba).
GeneratorWord commuting_lhs(const GeneratorWord& a, const GeneratorWord& b);
GeneratorWord commuting_rhs(const GeneratorWord& a, const GeneratorWord& b);

// alpha = x1^{-1}, beta = x0 x1^{-1}, xbar1 = x1 x0^{-1}
GeneratorWord alpha();
GeneratorWord beta();
GeneratorWord xbar1();

}  // namespace words

// Token format: "x<i>" for x_i, "X<i>" for x_i^{-1}, "e" for the empty word.
// Tokens are separated by whitespace; "x1X0" without spaces is also accepted.
GeneratorWord parse_word(std::string_view text);
std::string to_string(const GeneratorWord& w);

class NormalForm {
 public:
  NormalForm() = default;

  // Validates every normal-form invariant; throws Error(invalid_argument).
  static NormalForm from_parts(std::vector<Index> pos, std::vector<Index> neg);
  static bool is_valid(std::span<const Index> pos, std::span<const Index> neg);

  const std::vector<Index>& pos() const noexcept { return pos_; }
  const std::vector<Index>& neg() const noexcept { return neg_; }
  bool is_identity() const noexcept { return pos_.empty() && neg_.empty(); }
  std::size_t length() const noexcept { return pos_.size() + neg_.size(); }

  // The normal-form word itself: positive letters ascending, then inverse
  // letters with descending indices.
  GeneratorWord word() const;

  // In-place right multiplication by a single letter, then reduction.
  void right_multiply(Letter l);

  friend auto operator<=>(const NormalForm&, const NormalForm&) = default;

 private:
  void reduce();

  std::vector<Index> pos_;
  std::vector<Index> neg_;
};

std::string to_string(const NormalForm& g);
NormalForm parse_element(std::string_view text);

struct NormalFormHash {
  std::size_t operator()(const NormalForm& g) const noexcept;
};

using ElementSet = std::unordered_set<NormalForm, NormalFormHash>;

NormalForm normalize(const GeneratorWord& w);
NormalForm multiply(const NormalForm& a, const NormalForm& b);
NormalForm multiply(const NormalForm& a, const GeneratorWord& w);
NormalForm invert(const NormalForm& a);

// Substitution x0 -> images.x0, x1 -> images.x1, extended to x_n through
// x_n = x0^{-(n-1)} x1 x0^{n-1}.
struct Endomorphism {
  GeneratorWord x0;
  GeneratorWord x1;
};

// x0 -> x0^{-1}, x1 -> x1 x0^{-1}; an automorphism of order two.
Endomorphism symmetry_automorphism();

NormalForm apply_endomorphism(const Endomorphism& images, const NormalForm& g);
NormalForm apply_endomorphism(const Endomorphism& images,
                              const GeneratorWord& w);

bool verify_relation(const GeneratorWord& lhs, const GeneratorWord& rhs);

enum class GenSetKind { standard, symmetric, extended, custom };

// A signed generator a or a^{-1}; `inverse` indexes its partner in the same
// label list.
struct SignedGenerator {
  std::string name;
  NormalForm element;
  std::size_t inverse = 0;
};

class GenSet {
 public:
  static GenSet standard();   // {x0, x1}
  static GenSet symmetric();  // {x1, xbar1}
  static GenSet extended();   // {x0, x1, xbar1}
  static GenSet custom(std::vector<GeneratorWord> generators);
  // "standard" | "symmetric" | "extended" | "custom:<w>,<w>,..."
  static GenSet parse(std::string_view text);

  GenSetKind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  const std::vector<GeneratorWord>& generators() const noexcept {
    return generators_;
  }
  // 2m labels: generator i at 2i, its inverse at 2i + 1.
  const std::vector<SignedGenerator>& labels() const noexcept {
    return labels_;
  }
  std::size_t rank() const noexcept { return generators_.size(); }

 private:
  GenSet(GenSetKind kind, std::string name,
         std::vector<GeneratorWord> generators,
         std::vector<std::string> names);

  GenSetKind kind_;
  std::string name_;
  std::vector<GeneratorWord> generators_;
  std::vector<SignedGenerator> labels_;
};

inline constexpr unsigned kDefaultBallRadiusCap = 12;

// Elements at Cayley distance <= radius from the identity, sorted.
std::vector<NormalForm> ball(const GenSet& genset, unsigned radius,
                             unsigned radius_cap = kDefaultBallRadiusCap);

// Cheeger-boundary edge count per signed label, aligned with
// genset.labels().
std::vector<std::uint64_t> cheeger_per_label(std::span<const NormalForm> ys,
                                             const GenSet& genset);

}  // namespace thompson

#endif  // THOMPSON_GROUP_HPP_
