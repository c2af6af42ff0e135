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

#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "qfam/semigroup.hpp"
#include "qfam/starpoly.hpp"
#include "qfam/tensorspace.hpp"

using namespace qfam;
using namespace qfam::tensorspace;
using starpoly::gen;
using starpoly::GeneratorSet;
using starpoly::NCWord;
using starpoly::RelationPreset;

namespace {

const GeneratorSet u22{2, 2};
const GeneratorSet u23{2, 3};

TensorElem random_elem(std::mt19937_64& rng, const Signature& sig,
                       const GeneratorSet& u, int terms) {
  TensorElem e = TensorElem::zero(sig, u);
  for (int t = 0; t < terms; ++t) {
    FactorList fl;
    for (const Leg& leg : sig) {
      if (leg.is_point()) {
        fl.emplace_back(static_cast<int>(rng() % leg.dim));
      } else {
        NCWord w;
        const int len = static_cast<int>(rng() % 3);
        for (int i = 0; i < len; ++i) {
          w.push_back(gen(static_cast<int>(rng() % u.rows),
                          static_cast<int>(rng() % u.cols)));
        }
        fl.emplace_back(std::move(w));
      }
    }
    const int re = static_cast<int>(rng() % 5) - 2;
    const int im = static_cast<int>(rng() % 5) - 2;
    e.add_term(std::move(fl), GaussianRational(re, im));
  }
  return e;
}

}  // namespace

TEST_CASE("legs validate and render") {
  CHECK_THROWS_AS(Leg::point(0), std::invalid_argument);
  CHECK(Leg::point(3).dim == 3);
  CHECK(to_string(Leg::point(2)) == "P2");
  CHECK(to_string(Leg::alg()) == "A");
  CHECK(to_string(Signature{Leg::point(2), Leg::alg()}) == "[P2,A]");
}

TEST_CASE("add_term validates shape") {
  const Signature sig{Leg::point(2), Leg::alg()};
  TensorElem e = TensorElem::zero(sig, u22);
  // Wrong arity.
  CHECK_THROWS_AS(e.add_term({Factor(0)}, 1), std::invalid_argument);
  // Kind mismatch: word on a point leg.
  CHECK_THROWS_AS(e.add_term({Factor(NCWord{}), Factor(NCWord{})}, 1),
                  std::invalid_argument);
  // Kind mismatch: index on an algebra leg.
  CHECK_THROWS_AS(e.add_term({Factor(0), Factor(1)}, 1),
                  std::invalid_argument);
  // Point index out of range.
  CHECK_THROWS_AS(e.add_term({Factor(2), Factor(NCWord{})}, 1),
                  std::out_of_range);
  // Generator outside the universe.
  CHECK_THROWS_AS(e.add_term({Factor(0), Factor(NCWord{gen(0, 2)})}, 1),
                  std::out_of_range);
  CHECK_NOTHROW(e.add_term({Factor(1), Factor(NCWord{gen(1, 1)})}, 1));
}

TEST_CASE("alg_unit requires an all-algebra signature") {
  CHECK_THROWS_AS(TensorElem::alg_unit({Leg::point(2), Leg::alg()}, u22),
                  std::invalid_argument);
  const TensorElem one = TensorElem::alg_unit({Leg::alg(), Leg::alg()}, u22);
  CHECK(to_string(one) == "1⊗1");
}

TEST_CASE("rendering is canonical") {
  const Signature sig{Leg::point(2), Leg::alg()};
  TensorElem e = TensorElem::zero(sig, u22);
  e.add_term({Factor(1), Factor(NCWord{gen(0, 0), gen(1, 0)})}, -1);
  e.add_term({Factor(0), Factor(NCWord{})}, GaussianRational(Rational(1, 2)));
  CHECK(to_string(e) == "1/2·e[0]⊗1 - e[1]⊗c[0,0]·c[1,0]");
  CHECK(to_string(TensorElem::zero(sig, u22)) == "0");
}

TEST_CASE("tensor_concat multiplies coefficients and concatenates factors") {
  const Signature p{Leg::point(2)};
  const Signature a{Leg::alg()};
  TensorElem left = TensorElem::monomial(p, u22, {Factor(1)}, 2);
  TensorElem right = TensorElem::monomial(
      a, u22, {Factor(NCWord{gen(0, 0)})}, GaussianRational(Rational(1, 2)));
  const TensorElem prod = tensor_concat(left, right);
  CHECK(prod.signature() == Signature{Leg::point(2), Leg::alg()});
  CHECK(to_string(prod) == "e[1]⊗c[0,0]");
}

TEST_CASE("flip is an involution and reorders the signature") {
  std::mt19937_64 rng(17);
  const Signature sig{Leg::point(2), Leg::alg(), Leg::point(3)};
  for (int trial = 0; trial < 40; ++trial) {
    const TensorElem e = random_elem(rng, sig, u22, 4);
    for (std::size_t at = 0; at + 1 < sig.size(); ++at) {
      const TensorElem flipped = apply_flip(e, at);
      CHECK(apply_flip(flipped, at) == e);
    }
  }
  const TensorElem e = random_elem(rng, sig, u22, 2);
  CHECK(apply_flip(e, 0).signature() ==
        Signature{Leg::alg(), Leg::point(2), Leg::point(3)});
  CHECK_THROWS_AS(apply_flip(e, 2), std::out_of_range);
}

TEST_CASE("distant flips commute") {
  std::mt19937_64 rng(23);
  const Signature sig{Leg::point(2), Leg::alg(), Leg::point(2), Leg::alg()};
  for (int trial = 0; trial < 40; ++trial) {
    const TensorElem e = random_elem(rng, sig, u22, 4);
    CHECK(apply_flip(apply_flip(e, 0), 2) ==
          apply_flip(apply_flip(e, 2), 0));
  }
}

TEST_CASE("point multiplication keeps the diagonal") {
  const Signature sig{Leg::point(2), Leg::point(2)};
  TensorElem e = TensorElem::zero(sig, u22);
  e.add_term({Factor(0), Factor(0)}, 1);
  e.add_term({Factor(0), Factor(1)}, 5);
  e.add_term({Factor(1), Factor(1)}, -2);
  const TensorElem m = apply_mult(e, 0);
  CHECK(m.signature() == Signature{Leg::point(2)});
  CHECK(to_string(m) == "e[0] - 2·e[1]");

  // Dimension mismatch is rejected.
  const Signature bad{Leg::point(2), Leg::point(3)};
  CHECK_THROWS_AS(apply_mult(TensorElem::zero(bad, u22), 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(apply_mult(TensorElem::zero(sig, u22), 1),
                  std::out_of_range);
}

TEST_CASE("point multiplication is associative") {
  std::mt19937_64 rng(29);
  const Signature sig{Leg::point(3), Leg::point(3), Leg::point(3)};
  for (int trial = 0; trial < 40; ++trial) {
    const TensorElem e = random_elem(rng, sig, u22, 5);
    CHECK(apply_mult(apply_mult(e, 0), 0) ==
          apply_mult(apply_mult(e, 1), 0));
  }
}

TEST_CASE("algebra multiplication reduces words") {
  const Signature sig{Leg::alg(), Leg::alg()};
  // Idempotency merges.
  TensorElem sq = TensorElem::monomial(
      sig, u22, {Factor(NCWord{gen(0, 0)}), Factor(NCWord{gen(0, 0)})});
  CHECK(to_string(apply_alg_mult(sq, 0, RelationPreset::kAllMaps)) ==
        "c[0,0]");
  // Row orthogonality kills the term.
  TensorElem orth = TensorElem::monomial(
      sig, u22, {Factor(NCWord{gen(0, 0)}), Factor(NCWord{gen(0, 1)})});
  CHECK(apply_alg_mult(orth, 0, RelationPreset::kAllMaps).is_zero());
  // Distinct rows concatenate freely.
  TensorElem freeprod = TensorElem::monomial(
      sig, u22, {Factor(NCWord{gen(0, 0)}), Factor(NCWord{gen(1, 0)})});
  CHECK(to_string(apply_alg_mult(freeprod, 0, RelationPreset::kAllMaps)) ==
        "c[0,0]·c[1,0]");
  // …but die under the magic square preset (same column).
  CHECK(apply_alg_mult(freeprod, 0, RelationPreset::kMagicSquare).is_zero());
}

TEST_CASE("substitution distributes over sums") {
  std::mt19937_64 rng(31);
  const semigroup::CayleyTable z2(2, {0, 1, 1, 0});
  const Signature sig{Leg::point(2), Leg::alg()};
  const LegHom d = LegHom::delta(z2);
  const LegHom f = LegHom::phi(2, 2);
  for (int trial = 0; trial < 30; ++trial) {
    const TensorElem a = random_elem(rng, sig, u22, 3);
    const TensorElem b = random_elem(rng, sig, u22, 3);
    CHECK(substitute_hom(a + b, 0, d) ==
          substitute_hom(a, 0, d) + substitute_hom(b, 0, d));
    CHECK(substitute_hom(a + b, 0, f) ==
          substitute_hom(a, 0, f) + substitute_hom(b, 0, f));
    CHECK(substitute_hom(a, 0, LegHom::identity()) == a);
  }
}

TEST_CASE("phi expands a point leg into the family algebra") {
  const Signature sig{Leg::point(2)};
  const TensorElem e0 = TensorElem::monomial(sig, u22, {Factor(0)});
  const TensorElem image = substitute_hom(e0, 0, LegHom::phi(2, 2));
  CHECK(image.signature() == Signature{Leg::point(2), Leg::alg()});
  CHECK(to_string(image) == "e[0]⊗c[0,0] + e[1]⊗c[1,0]");
}

TEST_CASE("delta expands a point leg by the table fibers") {
  const semigroup::CayleyTable z2(2, {0, 1, 1, 0});
  const Signature sig{Leg::point(2)};
  const TensorElem e1 = TensorElem::monomial(sig, u22, {Factor(1)});
  const TensorElem image = substitute_hom(e1, 0, LegHom::delta(z2));
  CHECK(to_string(image) == "e[0]⊗e[1] + e[1]⊗e[0]");
}

TEST_CASE("alg_hom maps words to products of letter images") {
  // h(c[x,k]) = c[x,k]⊗c[x,k] — the diagonal embedding on every generator —
  // extends multiplicatively: h(c[0,0]·c[1,0]) =
  // (c[0,0]·c[1,0])⊗(c[0,0]·c[1,0]).
  std::map<starpoly::Generator, TensorElem> images;
  const Signature two{Leg::alg(), Leg::alg()};
  for (int x = 0; x < 2; ++x) {
    for (int k = 0; k < 2; ++k) {
      images.emplace(gen(x, k),
                     TensorElem::monomial(two, u22,
                                          {Factor(NCWord{gen(x, k)}),
                                           Factor(NCWord{gen(x, k)})}));
    }
  }
  const LegHom h = LegHom::alg_hom(images, RelationPreset::kAllMaps);
  const Signature sig{Leg::alg()};
  const TensorElem w = TensorElem::monomial(
      sig, u22, {Factor(NCWord{gen(0, 0), gen(1, 0)})});
  const TensorElem image = substitute_hom(w, 0, h);
  CHECK(to_string(image) == "c[0,0]·c[1,0]⊗c[0,0]·c[1,0]");
  // The unit maps to the tensor unit.
  const TensorElem one = TensorElem::monomial(sig, u22, {Factor(NCWord{})});
  CHECK(substitute_hom(one, 0, h) == TensorElem::alg_unit(two, u22));
}

TEST_CASE("substitution rejects kind mismatches") {
  const Signature sig{Leg::alg()};
  const TensorElem one = TensorElem::alg_unit(sig, u22);
  CHECK_THROWS_AS(substitute_hom(one, 0, LegHom::phi(2, 2)),
                  std::invalid_argument);
  const semigroup::CayleyTable z2(2, {0, 1, 1, 0});
  CHECK_THROWS_AS(substitute_hom(one, 0, LegHom::delta(z2)),
                  std::invalid_argument);
}

TEST_CASE("legwise product multiplies algebra legs in parallel") {
  const Signature two{Leg::alg(), Leg::alg()};
  TensorElem u = TensorElem::zero(two, u22);
  u.add_term({Factor(NCWord{gen(0, 0)}), Factor(NCWord{gen(0, 0)})}, 1);
  u.add_term({Factor(NCWord{gen(0, 1)}), Factor(NCWord{gen(0, 1)})}, 1);
  // u is Γ(c[0,0]) for Z/2; it is idempotent: u·u = u (cross terms die by
  // row orthogonality, diagonal terms merge by idempotency).
  const TensorElem sq = legwise_alg_product(u, u, RelationPreset::kAllMaps);
  CHECK(sq == u);

  // Unit is neutral.
  const TensorElem one = TensorElem::alg_unit(two, u22);
  CHECK(legwise_alg_product(one, u, RelationPreset::kAllMaps) == u);
  CHECK(legwise_alg_product(u, one, RelationPreset::kAllMaps) == u);
}

TEST_CASE("legwise product matches the two-flip composition on one leg pair") {
  // On [A,A], the product is (m⊗m)(I⊗F⊗I) of the concatenation — spot-check
  // against a hand-computed instance with distinct rows:
  // (c00⊗c10)·(c10⊗c00) = (c00·c10)⊗(c10·c00).
  const Signature two{Leg::alg(), Leg::alg()};
  const TensorElem a = TensorElem::monomial(
      two, u22, {Factor(NCWord{gen(0, 0)}), Factor(NCWord{gen(1, 0)})});
  const TensorElem b = TensorElem::monomial(
      two, u22, {Factor(NCWord{gen(1, 0)}), Factor(NCWord{gen(0, 0)})});
  const TensorElem prod = legwise_alg_product(a, b, RelationPreset::kAllMaps);
  CHECK(to_string(prod) == "c[0,0]·c[1,0]⊗c[1,0]·c[0,0]");
}

TEST_CASE("tensor adjoint is involutive and fixes projections") {
  std::mt19937_64 rng(37);
  const Signature sig{Leg::point(2), Leg::alg(), Leg::alg()};
  for (int trial = 0; trial < 40; ++trial) {
    const TensorElem e = random_elem(rng, sig, u22, 4);
    CHECK(tensor_adjoint(tensor_adjoint(e)) == e);
  }
  const TensorElem word = TensorElem::monomial(
      Signature{Leg::alg()}, u22, {Factor(NCWord{gen(0, 0), gen(1, 0)})},
      GaussianRational::i());
  CHECK(to_string(tensor_adjoint(word)) == "-i·c[1,0]·c[0,0]");
}

TEST_CASE("reduce_modulo decides zero in the quotient") {
  const Signature sig{Leg::point(2), Leg::alg()};
  // Row sum minus unit vanishes modulo relations.
  TensorElem e = TensorElem::zero(sig, u22);
  e.add_term({Factor(0), Factor(NCWord{gen(0, 0)})}, 1);
  e.add_term({Factor(0), Factor(NCWord{gen(0, 1)})}, 1);
  e.add_term({Factor(0), Factor(NCWord{})}, -1);
  CHECK(reduce_modulo(e, RelationPreset::kAllMaps).is_zero());
  CHECK(eq_tensor(e, TensorElem::zero(sig, u22), RelationPreset::kAllMaps) ==
        starpoly::Verdict::kEqual);
  // A lone generator does not.
  const TensorElem g = TensorElem::monomial(
      sig, u22, {Factor(0), Factor(NCWord{gen(0, 0)})});
  CHECK(eq_tensor(g, TensorElem::zero(sig, u22), RelationPreset::kAllMaps) ==
        starpoly::Verdict::kNotEqual);
  // Point factors never mix: e[0]⊗1 ≠ e[1]⊗1.
  const TensorElem p0 =
      TensorElem::monomial(sig, u22, {Factor(0), Factor(NCWord{})});
  const TensorElem p1 =
      TensorElem::monomial(sig, u22, {Factor(1), Factor(NCWord{})});
  CHECK(eq_tensor(p0, p1, RelationPreset::kAllMaps) ==
        starpoly::Verdict::kNotEqual);
}

TEST_CASE("eq_tensor under magic square never refutes") {
  const Signature sig{Leg::alg()};
  const TensorElem g = TensorElem::monomial(
      sig, u22, {Factor(NCWord{gen(0, 0), gen(1, 1)})});
  CHECK(eq_tensor(g, TensorElem::zero(sig, u22),
                  RelationPreset::kMagicSquare) ==
        starpoly::Verdict::kInconclusive);
}

TEST_CASE("eq_tensor requires matching signatures") {
  const TensorElem a = TensorElem::alg_unit({Leg::alg()}, u22);
  const TensorElem b = TensorElem::alg_unit({Leg::alg(), Leg::alg()}, u22);
  CHECK_THROWS_AS(eq_tensor(a, b, RelationPreset::kAllMaps),
                  std::invalid_argument);
}
