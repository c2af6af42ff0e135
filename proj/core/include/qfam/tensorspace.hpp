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

// Multi-leg tensor calculus over mixed products of commutative point algebras
// (ℂ^d legs with basis e_0..e_{d-1}) and copies of the presented *-algebra C.
// Elements are flat term sums; structural maps (flip, point multiplication,
// algebra multiplication, per-leg homomorphism substitution) act term-wise.
// Relations apply within a single algebra leg only; words on different legs
// are independent.

#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "qfam/rational.hpp"
#include "qfam/semigroup.hpp"
#include "qfam/starpoly.hpp"

namespace qfam::tensorspace {

// One tensor factor position: a commutative ℂ^dim leg or a copy of C.
struct Leg {
  enum class Kind { kPoint, kAlg };

  Kind kind = Kind::kAlg;
  int dim = 0;  // meaningful for point legs only

  static Leg point(int dim);
  static Leg alg() { return Leg{Kind::kAlg, 0}; }

  bool is_point() const { return kind == Kind::kPoint; }
  bool is_alg() const { return kind == Kind::kAlg; }

  friend bool operator==(const Leg&, const Leg&) = default;
};

using Signature = std::vector<Leg>;

std::string to_string(const Leg& leg);
std::string to_string(const Signature& sig);

// Per-leg content of one term: a basis index on a point leg, a word on an
// algebra leg.
using Factor = std::variant<int, starpoly::NCWord>;
using FactorList = std::vector<Factor>;

// Term order: point-index tuple lexicographic first, then the algebra words
// leg by leg under length-then-lex. Total on factor lists of one signature.
struct TermOrder {
  bool operator()(const FactorList& a, const FactorList& b) const;
};

// A finite sum of coefficiented elementary tensors over a fixed signature.
// Generator indices on algebra legs live in a shared universe.
class TensorElem {
 public:
  using TermMap = std::map<FactorList, GaussianRational, TermOrder>;

  TensorElem(Signature signature, starpoly::GeneratorSet universe)
      : signature_(std::move(signature)), universe_(universe) {}

  static TensorElem zero(Signature signature,
                         starpoly::GeneratorSet universe) {
    return TensorElem(std::move(signature), universe);
  }
  static TensorElem monomial(Signature signature,
                             starpoly::GeneratorSet universe,
                             FactorList factors,
                             GaussianRational coeff = GaussianRational(1)) {
    TensorElem out(std::move(signature), universe);
    out.add_term(std::move(factors), std::move(coeff));
    return out;
  }
  // The all-units element 1⊗…⊗1 (basis index sums are not units; point legs
  // are not allowed here — signature must be all algebra legs).
  static TensorElem alg_unit(Signature signature,
                             starpoly::GeneratorSet universe);

  const Signature& signature() const { return signature_; }
  const starpoly::GeneratorSet& universe() const { return universe_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Adds coeff·factors, validating against the signature and universe and
  // merging like terms; zero coefficients are dropped.
  void add_term(FactorList factors, GaussianRational coeff);

  friend bool operator==(const TensorElem& a, const TensorElem& b) {
    return a.signature_ == b.signature_ && a.terms_ == b.terms_;
  }

 private:
  Signature signature_;
  starpoly::GeneratorSet universe_;
  TermMap terms_;
};

TensorElem operator+(const TensorElem& a, const TensorElem& b);
TensorElem operator-(const TensorElem& a, const TensorElem& b);
TensorElem operator*(const GaussianRational& c, const TensorElem& a);

// Concatenation of signatures; terms are all pairwise coefficient products
// with concatenated factor lists. Universes must agree.
TensorElem tensor_concat(const TensorElem& u, const TensorElem& v);

// Swaps adjacent legs at positions `at`, `at`+1 in the signature and in every
// term. Throws std::out_of_range for an invalid position.
TensorElem apply_flip(const TensorElem& u, std::size_t at);

// Merges two adjacent point legs of equal dimension; a term with indices
// (x, y) survives with index x iff x == y. Throws std::invalid_argument on a
// kind or dimension mismatch.
TensorElem apply_mult(const TensorElem& u, std::size_t at);

// Merges two adjacent algebra legs by word concatenation followed by the
// preset's normal form. Throws std::invalid_argument on a kind mismatch.
TensorElem apply_alg_mult(const TensorElem& u, std::size_t at,
                          starpoly::RelationPreset preset);

// Leg-wise adjoint: coefficients conjugated, algebra words reversed, point
// factors fixed. (a⊗b)* = a*⊗b*.
TensorElem tensor_adjoint(const TensorElem& u);

// Homomorphism descriptor for substitute_hom. The map acts on a single leg
// and replaces it by an image signature fragment:
//   identity : leg           -> [leg]
//   phi      : PointLeg n    -> [PointLeg m, AlgLeg],  e_k -> Σ_x e_x⊗c[x,k]
//   delta    : PointLeg n    -> [PointLeg n, PointLeg n],
//                               e_k -> Σ_{ξ(r,s)=k} e_r⊗e_s
//   alg_hom  : AlgLeg        -> images' signature (all algebra legs);
//              generators map to the supplied images, words to the leg-wise
//              product of letter images reduced under the carried preset.
class LegHom {
 public:
  enum class Kind { kIdentity, kPhi, kDelta, kAlgHom };

  static LegHom identity();
  static LegHom phi(int points, int order);
  static LegHom delta(const semigroup::CayleyTable& table);
  static LegHom alg_hom(
      std::map<starpoly::Generator, TensorElem> images,
      starpoly::RelationPreset preset);

  Kind kind() const { return kind_; }
  // Signature fragment replacing a leg of the given kind; validates the
  // domain kind and throws std::invalid_argument on mismatch.
  Signature image_signature(const Leg& domain) const;
  // Image of a single point-basis index (phi/delta) or of an algebra word
  // (alg_hom); identity handles both.
  TensorElem image_of_point(int index, const Leg& domain,
                            const starpoly::GeneratorSet& universe) const;
  TensorElem image_of_word(const starpoly::NCWord& word, const Leg& domain,
                           const starpoly::GeneratorSet& universe) const;

 private:
  LegHom() = default;

  Kind kind_ = Kind::kIdentity;
  int points_ = 0;                           // phi
  int order_ = 0;                            // phi
  std::vector<std::vector<int>> table_;      // delta: ξ(r,s)
  std::map<starpoly::Generator, TensorElem> images_;  // alg_hom
  Signature alg_signature_;                  // alg_hom image signature
  starpoly::RelationPreset preset_ =
      starpoly::RelationPreset::kAllMaps;    // alg_hom
};

// Replaces leg `at` by its image under h, distributing over the term sum.
// Throws std::invalid_argument on a kind mismatch.
TensorElem substitute_hom(const TensorElem& u, std::size_t at,
                          const LegHom& h);

// Algebra product of two elements sharing one all-algebra-leg signature,
// computed compositionally: concatenate, interleave with adjacent flips,
// then merge each pair with apply_alg_mult.
TensorElem legwise_alg_product(const TensorElem& u, const TensorElem& v,
                               starpoly::RelationPreset preset);

// Rewrites every algebra-leg word to the preset's normal form after row-sum
// elimination, distributing the per-leg expansions and merging like terms.
// Under AllMaps the surviving factor lists are linearly independent, so the
// result is zero iff the element is zero in the quotient.
TensorElem reduce_modulo(const TensorElem& u,
                         starpoly::RelationPreset preset);

// Decides u = v modulo the per-leg relations. Point factors compare exactly.
// AllMaps: Equal / NotEqual. MagicSquare: Equal / Inconclusive.
// Throws std::invalid_argument on a signature mismatch.
starpoly::Verdict eq_tensor(const TensorElem& u, const TensorElem& v,
                            starpoly::RelationPreset preset);

// Canonical rendering: factors joined by "⊗", point factors "e[i]", algebra
// factors in word form; terms in map order with signed joining. Zero is "0".
std::string to_string(const FactorList& factors);
std::string to_string(const TensorElem& u);

}  // namespace qfam::tensorspace
