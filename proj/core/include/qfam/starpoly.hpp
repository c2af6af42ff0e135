// Copyright 2026 The qfam Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qfam/rational.hpp"

namespace qfam::starpoly {

/// The generator universe: self-adjoint idempotents c[x,k] with
/// x in [0,rows) and k in [0,cols). Row x corresponds to a point of the
/// domain space, column k to a basis element of the target algebra.
struct GeneratorSet {
  int rows = 0;
  int cols = 0;
  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;
};

struct Generator {
  std::int16_t row = 0;
  std::int16_t col = 0;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

inline Generator gen(int x, int k) {
  return Generator{static_cast<std::int16_t>(x), static_cast<std::int16_t>(k)};
}

/// A monomial in the free *-algebra: a finite product of generators.
/// The empty word is the unit.
using NCWord = std::vector<Generator>;

/// Total order on words: length first, then lexicographic by (row,col).
struct WordOrder {
  bool operator()(const NCWord& a, const NCWord& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Relation presets for the quotient algebra.
///
/// kAllMaps: for each row x, the c[x,k] are self-adjoint idempotents,
/// pairwise orthogonal along the row, summing to 1. This presents the
/// quantum family of all maps from an m-point space into an n-point space.
///
/// kMagicSquare: kAllMaps plus column orthogonality and column sums equal
/// to 1 (the magic-unitary relations). Equality modulo kMagicSquare is a
/// semi-decision: the rewriting system is sound but not proven complete,
/// so a nonzero remainder yields Inconclusive rather than NotEqual.
enum class RelationPreset { kAllMaps, kMagicSquare };

enum class Verdict { kEqual, kNotEqual, kInconclusive };

std::string to_string(RelationPreset preset);
std::string to_string(Verdict v);

/// Exact noncommutative *-polynomial over a fixed generator universe.
/// Terms are kept in canonical (length-then-lex) order with no stored zero
/// coefficients. Values are immutable from the outside except through
/// add_term; every operation returns a fresh polynomial.
class StarPoly {
 public:
  using TermMap = std::map<NCWord, GaussianRational, WordOrder>;

  explicit StarPoly(GeneratorSet universe) : universe_(universe) {}

  static StarPoly zero(GeneratorSet u) { return StarPoly(u); }
  static StarPoly unit(GeneratorSet u) {
    StarPoly p(u);
    p.add_term({}, 1);
    return p;
  }
  static StarPoly generator(GeneratorSet u, int x, int k) {
    StarPoly p(u);
    p.add_term({gen(x, k)}, 1);
    return p;
  }
  static StarPoly monomial(GeneratorSet u, NCWord w, GaussianRational c) {
    StarPoly p(u);
    p.add_term(std::move(w), std::move(c));
    return p;
  }

  const GeneratorSet& universe() const { return universe_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Merges a term in, validating generator indices and dropping the entry
  /// if the coefficient cancels.
  void add_term(NCWord word, GaussianRational coeff);

  friend StarPoly operator+(const StarPoly& a, const StarPoly& b);
  friend StarPoly operator-(const StarPoly& a, const StarPoly& b);
  friend StarPoly operator*(const GaussianRational& c, const StarPoly& a);
  friend bool operator==(const StarPoly& a, const StarPoly& b) {
    return a.universe_ == b.universe_ && a.terms_ == b.terms_;
  }

 private:
  GeneratorSet universe_;
  TermMap terms_;
};

/// Free-algebra product: bilinear word concatenation. Not reduced modulo
/// relations; compose with normal_form for that.
StarPoly poly_mul(const StarPoly& a, const StarPoly& b);

/// The *-operation: reverses words, conjugates coefficients. Generators are
/// self-adjoint, so they are fixed pointwise.
StarPoly poly_adjoint(const StarPoly& a);

/// One-step rewriting interface, exposed so tests can drive rule
/// applications in arbitrary order. A redex is an adjacent pair
/// (word[i], word[i+1]) matching a rule of the preset:
///   same row, same col  ->  idempotency, drop one letter
///   same row, diff col  ->  row orthogonality, word dies
///   diff row, same col  ->  column orthogonality (kMagicSquare only)
std::vector<size_t> redex_positions(const NCWord& w, RelationPreset preset);

/// Applies the rule at redex position i. nullopt means the word rewrote
/// to zero.
std::optional<NCWord> rewrite_at(const NCWord& w, size_t i,
                                 RelationPreset preset);

/// Full reduction of a single word; nullopt when it collapses to zero.
std::optional<NCWord> reduce_word(NCWord w, RelationPreset preset);

/// Exhaustive application of the preset's rewrite rules. Every rule strictly
/// shrinks a word, so this terminates; the rule sets are confluent, so the
/// result is the unique normal form regardless of application order.
StarPoly normal_form(const StarPoly& a, RelationPreset preset);

/// Substitutes c[x,n-1] := 1 - sum_{k<n-1} c[x,k] per row (all generators
/// become 1 when n = 1) and reduces. After this substitution the row-sum
/// relations are used up and the remaining rule set decides equality in the
/// kAllMaps quotient.
StarPoly eliminate_row_sums(const StarPoly& a, RelationPreset preset);

/// Equality modulo the preset's relation ideal.
/// kAllMaps: a decision procedure (Equal / NotEqual).
/// kMagicSquare: sound but incomplete (Equal / Inconclusive).
Verdict eq_mod(const StarPoly& a, const StarPoly& b, RelationPreset preset);

/// Canonical rendering: terms in canonical order, generators as "c[x,k]",
/// letters joined by "·", the unit word as "1", zero as "0". Bit-exact;
/// golden files depend on it.
std::string to_string(const NCWord& w);
std::string to_string(const StarPoly& a);

/// Renders a coefficient as a term prefix: 1 -> "", -1 -> "-",
/// anything else -> "<coeff>·".
std::string coeff_prefix(const GaussianRational& c);

/// Joins already-rendered terms with " + ", folding a leading minus of the
/// follower into " - ".
std::string join_terms(const std::vector<std::string>& rendered);

}  // namespace qfam::starpoly
