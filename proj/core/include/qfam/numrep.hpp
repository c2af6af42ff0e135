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

// Floating-point matrix representations of the generator relations: an
// independent numerical oracle for the symbolic verdicts. Numeric results
// never override symbolic ones; disagreement is a bug in the artifact.

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <vector>

#include "qfam/family.hpp"
#include "qfam/starpoly.hpp"
#include "qfam/tensorspace.hpp"

namespace qfam::numrep {

struct Tolerances {
  double construction = 1e-12;  // relation residual of sampled reps, d <= 16
  double identity = 1e-9;       // residual bound confirming symbolic equality
  double separation = 1e-4;     // residual certifying symbolic inequality
  double path = 1e-10;          // identity residual on the projection path
};

/// A concrete *-representation: mats[x][k] is the d×d image of c[x,k].
/// Each matrix is a self-adjoint idempotent and each row sums to the
/// identity, up to the construction tolerance.
struct NumericRep {
  int m = 0;
  int n = 0;
  int d = 0;
  std::uint64_t seed = 0;  // 0 for analytic constructions
  std::vector<std::vector<Eigen::MatrixXcd>> mats;
};

/// Draws, per row, a Haar-ish random unitary U_x (QR of a complex Gaussian
/// matrix) and a uniform random composition d = d_0+…+d_{n-1} with zero
/// blocks allowed, and sets mats[x][k] = U_x P_k U_x*. Deterministic given
/// the seed, across platforms. n = 1 yields exact identity matrices.
NumericRep sample_rep(int m, int n, int d, std::uint64_t seed);

/// The two-projection pair at angle t in [0, π/2]: row 0 holds p = diag(1,0)
/// and 1-p, row 1 holds the rotated projection q(t) and 1-q(t). m = n = d = 2.
NumericRep rep_two_projection_path(double t);

/// Largest Frobenius residual over the preset's defining relations
/// (self-adjointness, idempotency, row orthogonality, row sums; plus the
/// column relations under kMagicSquare).
double relation_residual(const NumericRep& rep,
                         starpoly::RelationPreset preset =
                             starpoly::RelationPreset::kAllMaps);

/// Linear extension of the representation: words map to matrix products,
/// the empty word to the identity. Throws std::out_of_range for generators
/// outside the rep.
Eigen::MatrixXcd evaluate_poly(const starpoly::StarPoly& p,
                               const NumericRep& rep);

/// Evaluation of tensor elements against one representation, with a
/// word→matrix memo shared across calls. Point legs pair against supplied
/// coordinate vectors; algebra legs evaluate to matrices; legs combine by
/// Kronecker product (grouped by leading factor for speed).
class TensorEvaluator {
 public:
  explicit TensorEvaluator(const NumericRep& rep) : rep_(&rep) {}

  /// One coordinate vector per point leg, in leg order; vector length must
  /// equal the leg dimension. Result dimension is d^(#algebra legs).
  Eigen::MatrixXcd evaluate(const tensorspace::TensorElem& u,
                            const std::vector<Eigen::VectorXcd>& point_vectors);

  /// max over all point-leg basis assignments of the Frobenius norm of
  /// evaluate(lhs−rhs). Signatures must agree.
  double pair_residual(const tensorspace::TensorElem& lhs,
                       const tensorspace::TensorElem& rhs);

  const Eigen::MatrixXcd& word_matrix(const starpoly::NCWord& w);

 private:
  const NumericRep* rep_;
  std::map<starpoly::NCWord, Eigen::MatrixXcd, starpoly::WordOrder> memo_;
};

/// One-shot conveniences over a fresh evaluator.
Eigen::MatrixXcd evaluate_tensor(const tensorspace::TensorElem& u,
                                 const NumericRep& rep,
                                 const std::vector<Eigen::VectorXcd>&
                                     point_vectors);
double pair_residual(const tensorspace::TensorElem& lhs,
                     const tensorspace::TensorElem& rhs,
                     const NumericRep& rep);

/// Deterministic seed schedule for the oracle sweep.
inline std::uint64_t seed_for(std::uint64_t base_seed, int dim, int index) {
  return base_seed + 1000ull * static_cast<std::uint64_t>(dim) +
         static_cast<std::uint64_t>(index);
}

struct SeparationResult {
  bool separated = false;
  double best_residual = 0.0;
  int dim = 0;             // where the best residual was observed
  std::uint64_t seed = 0;  // ditto
};

/// Hunts for a sampled representation telling lhs and rhs apart: tries
/// samples_per_dim reps for each dim until some residual reaches the
/// threshold. An unseparated outcome is evidence, not proof, of equality.
SeparationResult separate(const tensorspace::TensorElem& lhs,
                          const tensorspace::TensorElem& rhs,
                          const std::vector<int>& dims, int samples_per_dim,
                          std::uint64_t base_seed, double threshold);

/// Numeric twin of a symbolic check: evaluates the plan's pairs on sampled
/// representations (one per (dim, sample) with seeds from seed_for) and
/// judges against the symbolic verdict:
///   Pass          -> every residual must be ≤ tol.identity, else Fail;
///   Fail          -> Pass when some rep separates (≥ tol.separation),
///                    Inconclusive with an "unseparated" note otherwise;
///   Inconclusive  -> skipped (no sampled rep models the undecided preset).
/// The result is named "numeric.<plan name>" and carries one residual
/// sample (the max across pairs) per representation.
family::CheckResult numeric_mirror(const family::CheckPlan& plan,
                                   family::CheckVerdict symbolic,
                                   const std::vector<int>& dims,
                                   int samples_per_dim,
                                   std::uint64_t base_seed,
                                   const Tolerances& tol = {});

}  // namespace qfam::numrep
