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

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "qfam/family.hpp"
#include "qfam/numrep.hpp"
#include "qfam/semigroup.hpp"
#include "qfam/starpoly.hpp"
#include "qfam/tensorspace.hpp"

using namespace qfam;
using namespace qfam::numrep;
using semigroup::CayleyTable;
using starpoly::gen;
using starpoly::NCWord;
using starpoly::RelationPreset;
using tensorspace::Factor;
using tensorspace::Leg;
using tensorspace::Signature;
using tensorspace::TensorElem;

namespace {

CayleyTable z2() { return CayleyTable(2, {0, 1, 1, 0}); }
CayleyTable z3() { return CayleyTable(3, {0, 1, 2, 1, 2, 0, 2, 0, 1}); }

}  // namespace

TEST_CASE("sampling is deterministic in the seed") {
  const NumericRep a = sample_rep(2, 3, 4, 777);
  const NumericRep b = sample_rep(2, 3, 4, 777);
  const NumericRep c = sample_rep(2, 3, 4, 778);
  REQUIRE(a.mats.size() == 2);
  REQUIRE(a.mats[0].size() == 3);
  CHECK(a.mats[0][0] == b.mats[0][0]);
  CHECK(a.mats[1][2] == b.mats[1][2]);
  CHECK((a.mats[0][0] - c.mats[0][0]).norm() > 1e-6);
}

TEST_CASE("sampled representations satisfy the defining relations") {
  const Tolerances tol;
  for (int d : {2, 4, 8}) {
    for (int idx = 0; idx < 3; ++idx) {
      const NumericRep rep = sample_rep(3, 3, d, seed_for(5, d, idx));
      CHECK(relation_residual(rep, RelationPreset::kAllMaps) <=
            tol.construction);
    }
  }
  // Rectangular instances too.
  const NumericRep rect = sample_rep(2, 4, 8, 99);
  CHECK(relation_residual(rect, RelationPreset::kAllMaps) <=
        tol.construction);
}

TEST_CASE("row blocks resolve the identity") {
  const NumericRep rep = sample_rep(2, 3, 6, 4242);
  for (int x = 0; x < 2; ++x) {
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(6, 6);
    for (int k = 0; k < 3; ++k) sum += rep.mats[x][k];
    CHECK((sum - Eigen::MatrixXcd::Identity(6, 6)).norm() <= 1e-12);
  }
}

TEST_CASE("order one collapses to the exact identity") {
  const NumericRep rep = sample_rep(2, 1, 3, 1);
  for (int x = 0; x < 2; ++x) {
    CHECK((rep.mats[x][0] - Eigen::MatrixXcd::Identity(3, 3)).norm() == 0.0);
  }
}

TEST_CASE("two projection path hits its closed forms") {
  const double pi = std::acos(-1.0);
  // ‖p·q(t)‖_F = cos t.
  for (double t : {0.0, pi / 6, pi / 4, pi / 3, pi / 2}) {
    const NumericRep rep = rep_two_projection_path(t);
    REQUIRE(rep.m == 2);
    REQUIRE(rep.n == 2);
    const Eigen::MatrixXcd& p = rep.mats[0][0];
    const Eigen::MatrixXcd& q = rep.mats[1][0];
    CHECK(std::abs((p * q).norm() - std::cos(t)) <= 1e-10);
    // ‖[p,q]‖_F = √2·|cos t·sin t|.
    const double comm = (p * q - q * p).norm();
    CHECK(std::abs(comm - std::sqrt(2.0) * std::cos(t) * std::sin(t)) <=
          1e-10);
    // Both families remain honest projections along the path.
    CHECK(relation_residual(rep, RelationPreset::kAllMaps) <= 1e-12);
  }
  // At t = π/4 the product norm is 1/√2 and the projections are maximally
  // non-commuting among the sampled angles.
  const NumericRep mid = rep_two_projection_path(pi / 4);
  const Eigen::MatrixXcd pq = mid.mats[0][0] * mid.mats[1][0];
  CHECK(std::abs(pq.norm() - 0.7071067811865476) <= 1e-12);
  const Eigen::MatrixXcd comm =
      mid.mats[0][0] * mid.mats[1][0] - mid.mats[1][0] * mid.mats[0][0];
  CHECK(comm.norm() > 0.4);

  CHECK_THROWS_AS(rep_two_projection_path(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(rep_two_projection_path(2.0), std::invalid_argument);
}

TEST_CASE("polynomial evaluation is a homomorphism") {
  const starpoly::GeneratorSet u{2, 2};
  const NumericRep rep = sample_rep(2, 2, 4, 31);
  const starpoly::StarPoly c00 = starpoly::StarPoly::generator(u, 0, 0);
  const starpoly::StarPoly c10 = starpoly::StarPoly::generator(u, 1, 0);
  const Eigen::MatrixXcd lhs = evaluate_poly(starpoly::poly_mul(c00, c10), rep);
  const Eigen::MatrixXcd rhs =
      evaluate_poly(c00, rep) * evaluate_poly(c10, rep);
  CHECK((lhs - rhs).norm() <= 1e-13);
  CHECK((evaluate_poly(starpoly::StarPoly::unit(u), rep) -
         Eigen::MatrixXcd::Identity(4, 4))
            .norm() == 0.0);
  // Reduction preserves the evaluation: NF(w) evaluates like w.
  const starpoly::StarPoly word = starpoly::StarPoly::monomial(
      u, {gen(0, 0), gen(0, 0), gen(1, 1)}, 1);
  CHECK((evaluate_poly(word, rep) -
         evaluate_poly(starpoly::normal_form(word, RelationPreset::kAllMaps),
                       rep))
            .norm() <= 1e-13);
}

TEST_CASE("normal form is numerically sound on random words") {
  const starpoly::GeneratorSet u{3, 3};
  const NumericRep rep = sample_rep(3, 3, 5, 2025);
  std::mt19937_64 rng(64);
  for (int trial = 0; trial < 200; ++trial) {
    NCWord w;
    const int len = static_cast<int>(rng() % 7);
    for (int i = 0; i < len; ++i) {
      w.push_back(gen(static_cast<int>(rng() % 3),
                      static_cast<int>(rng() % 3)));
    }
    const starpoly::StarPoly p = starpoly::StarPoly::monomial(u, w, 1);
    const starpoly::StarPoly nf =
        starpoly::normal_form(p, RelationPreset::kAllMaps);
    CHECK((evaluate_poly(p, rep) - evaluate_poly(nf, rep)).norm() <= 1e-10);
  }
}

TEST_CASE("tensor evaluation distinguishes unequal elements") {
  const starpoly::GeneratorSet u{2, 2};
  const Signature sig{Leg::alg()};
  const TensorElem a =
      TensorElem::monomial(sig, u, {Factor(NCWord{gen(0, 0)})});
  const TensorElem b =
      TensorElem::monomial(sig, u, {Factor(NCWord{gen(1, 0)})});
  const NumericRep rep = sample_rep(2, 2, 4, 11);
  CHECK(pair_residual(a, b, rep) > 1e-2);
  CHECK(pair_residual(a, a, rep) == 0.0);
}

TEST_CASE("pair residual scans every point-basis assignment") {
  const starpoly::GeneratorSet u{2, 2};
  const Signature sig{Leg::point(2), Leg::alg()};
  // Differs only in the e[1] fiber.
  TensorElem lhs = TensorElem::zero(sig, u);
  lhs.add_term({Factor(0), Factor(NCWord{gen(0, 0)})}, 1);
  lhs.add_term({Factor(1), Factor(NCWord{gen(0, 0)})}, 1);
  TensorElem rhs = TensorElem::zero(sig, u);
  rhs.add_term({Factor(0), Factor(NCWord{gen(0, 0)})}, 1);
  rhs.add_term({Factor(1), Factor(NCWord{gen(0, 1)})}, 1);
  const NumericRep rep = sample_rep(2, 2, 4, 12);
  CHECK(pair_residual(lhs, rhs, rep) > 1e-2);
}

TEST_CASE("plan residuals stay below the identity tolerance") {
  const auto config = family::QFamConfig::make(2, z2());
  const auto gamma = family::build_gamma(config);
  std::vector<family::CheckPlan> plans = family::plan_gamma_well_defined(gamma);
  plans.push_back(family::plan_diagram_d1(gamma));
  plans.push_back(family::plan_coassoc_gamma(gamma));
  const Tolerances tol;
  for (int d : {2, 4}) {
    const NumericRep rep = sample_rep(2, 2, d, seed_for(1, d, 0));
    TensorEvaluator eval(rep);
    for (const auto& plan : plans) {
      for (const auto& pair : plan.pairs) {
        CHECK(eval.pair_residual(pair.lhs, pair.rhs) <= tol.identity);
      }
    }
  }
}

TEST_CASE("separation finds witnesses for genuinely different elements") {
  const starpoly::GeneratorSet u{2, 2};
  const Signature sig{Leg::alg(), Leg::alg()};
  const TensorElem a = TensorElem::monomial(
      sig, u, {Factor(NCWord{gen(0, 0)}), Factor(NCWord{gen(1, 0)})});
  const TensorElem b = TensorElem::monomial(
      sig, u, {Factor(NCWord{gen(1, 0)}), Factor(NCWord{gen(0, 0)})});
  const SeparationResult r = separate(a, b, {2, 4}, 2, 3, 1e-4);
  CHECK(r.separated);
  CHECK(r.best_residual >= 1e-4);

  const SeparationResult same = separate(a, a, {2, 4}, 2, 3, 1e-4);
  CHECK_FALSE(same.separated);
  CHECK(same.best_residual == 0.0);
}

TEST_CASE("numeric mirror follows the symbolic verdict") {
  const auto config = family::QFamConfig::make(2, z2());
  const auto gamma = family::build_gamma(config);
  const std::vector<int> dims{2, 4};

  SUBCASE("pass stays pass with small residuals") {
    const auto plan = family::plan_diagram_d1(gamma);
    const auto r = numeric_mirror(plan, family::CheckVerdict::kPass, dims, 2,
                                  9, Tolerances{});
    CHECK(r.name == "numeric.diagram.d1");
    CHECK(r.verdict == family::CheckVerdict::kPass);
    CHECK(r.residuals.size() == 4);  // 2 dims × 2 samples
    for (const auto& s : r.residuals) {
      CHECK(s.residual <= Tolerances{}.identity);
    }
    CHECK(r.residuals[0].seed == seed_for(9, 2, 0));
    CHECK(r.residuals[3].seed == seed_for(9, 4, 1));
  }

  SUBCASE("fail needs a separating representation") {
    const auto bad = gamma.with_image(gen(0, 0), gamma.image(gen(0, 1)));
    const auto plan = family::plan_diagram_d1(bad);
    REQUIRE(family::run_plan(plan, config.preset()).verdict ==
            family::CheckVerdict::kFail);
    const auto r = numeric_mirror(plan, family::CheckVerdict::kFail, dims, 2,
                                  9, Tolerances{});
    CHECK(r.verdict == family::CheckVerdict::kPass);
    CHECK(r.detail.find("separated") == 0);
  }

  SUBCASE("inconclusive symbolic verdicts are skipped") {
    const auto plan = family::plan_diagram_d1(gamma);
    const auto r = numeric_mirror(plan, family::CheckVerdict::kInconclusive,
                                  dims, 1, 9, Tolerances{});
    CHECK(r.verdict == family::CheckVerdict::kInconclusive);
    CHECK(r.residuals.empty());
  }
}

TEST_CASE("seed schedule is an injective ladder") {
  CHECK(seed_for(100, 2, 0) == 2100);
  CHECK(seed_for(100, 2, 1) == 2101);
  CHECK(seed_for(100, 8, 2) == 8102);
}
