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

// Construction of the structure maps Φ, Δ, Γ for the quantum family of maps
// from an m-point space into an n-element semigroup, together with the
// mechanical verification of the comultiplication identities and the
// counit/antipode experiments.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qfam/report.hpp"
#include "qfam/semigroup.hpp"
#include "qfam/starpoly.hpp"
#include "qfam/tensorspace.hpp"

namespace qfam::family {

/// The instance under study: B = ℂ^points (functions on an m-point space),
/// A = ℂ^order with multiplication given by the Cayley table, and the
/// relation preset presenting the family algebra C.
class QFamConfig {
 public:
  /// Validates the table's associativity; throws std::invalid_argument with
  /// the witness rendering when it is not associative.
  static QFamConfig make(int points, semigroup::CayleyTable table,
                         starpoly::RelationPreset preset =
                             starpoly::RelationPreset::kAllMaps);

  /// Skips the associativity check. Deliberate escape hatch for the
  /// coassociativity ⟺ associativity experiments, which feed arbitrary
  /// magmas through Δ and Γ.
  static QFamConfig unchecked(int points, semigroup::CayleyTable table,
                              starpoly::RelationPreset preset =
                                  starpoly::RelationPreset::kAllMaps);

  int points() const { return points_; }                  // m
  int order() const { return table_.order(); }            // n
  const semigroup::CayleyTable& table() const { return table_; }
  starpoly::RelationPreset preset() const { return preset_; }
  bool associativity_checked() const { return associativity_checked_; }

  starpoly::GeneratorSet universe() const {
    return starpoly::GeneratorSet{points_, table_.order()};
  }

 private:
  QFamConfig(int points, semigroup::CayleyTable table,
             starpoly::RelationPreset preset, bool checked);

  int points_;
  semigroup::CayleyTable table_;
  starpoly::RelationPreset preset_;
  bool associativity_checked_;
};

/// Φ(e_k) = Σ_{x<m} e_x⊗c[x,k], indexed by k; signature [PointLeg m, AlgLeg].
std::vector<tensorspace::TensorElem> build_phi(const QFamConfig& config);

/// Δ(e_k) = Σ_{ξ(r,s)=k} e_r⊗e_s, indexed by k; signature [PointLeg n,
/// PointLeg n].
std::vector<tensorspace::TensorElem> build_delta(const QFamConfig& config);

/// The comultiplication presentation: for every generator c[x,k] an image
/// over [AlgLeg, AlgLeg]. Freshly built instances satisfy
/// Γ(c[x,k]) = Σ_{ξ(r,s)=k} c[x,r]⊗c[x,s]; with_image produces deliberately
/// corrupted variants for mutation testing.
class GammaPresentation {
 public:
  const QFamConfig& config() const { return config_; }
  const std::map<starpoly::Generator, tensorspace::TensorElem>& images()
      const {
    return images_;
  }
  const tensorspace::TensorElem& image(starpoly::Generator g) const;

  /// A copy with one generator's image replaced (signature must match).
  GammaPresentation with_image(starpoly::Generator g,
                               tensorspace::TensorElem image) const;

  /// The substitution descriptor for this presentation.
  tensorspace::LegHom hom() const;

 private:
  friend GammaPresentation build_gamma(const QFamConfig& config);
  GammaPresentation(QFamConfig config,
                    std::map<starpoly::Generator, tensorspace::TensorElem>
                        images)
      : config_(std::move(config)), images_(std::move(images)) {}

  QFamConfig config_;
  std::map<starpoly::Generator, tensorspace::TensorElem> images_;
};

GammaPresentation build_gamma(const QFamConfig& config);

/// One identity instance: two tensor elements that a check requires to agree.
struct TensorPair {
  std::string label;  // e.g. "k=0" or "c[1,0]"
  tensorspace::TensorElem lhs;
  tensorspace::TensorElem rhs;
};

/// A named check as data: the full list of identity instances it verifies.
/// `exact` requests structural equality (zero tolerance) instead of equality
/// modulo relations. Exposing plans lets the numeric layer evaluate exactly
/// the same tensors the symbolic verdict was computed from.
struct CheckPlan {
  std::string name;
  std::vector<TensorPair> pairs;
  bool exact = false;
};

/// Runs a plan symbolically: Pass when every pair agrees, Fail with the
/// offending labels and reduced differences as witness, Inconclusive when
/// nothing fails but some pair cannot be decided under the preset.
CheckResult run_plan(const CheckPlan& plan, starpoly::RelationPreset preset);

/// Well-definedness of Γ as a unital *-homomorphism: images are self-adjoint
/// idempotents with row sums 1⊗1 (plus column sums under MagicSquare, which
/// may be Inconclusive). Plans: gamma.self_adjoint, gamma.idempotent,
/// gamma.row_sum[, gamma.col_sum].
std::vector<CheckPlan> plan_gamma_well_defined(const GammaPresentation& g);

/// The defining diagram: (I⊗Γ)Φ(e_k) versus
/// (m⊗I⊗I)(I⊗F⊗I)(Φ⊗Φ)Δ(e_k) over [PointLeg m, AlgLeg, AlgLeg].
CheckPlan plan_diagram_d1(const GammaPresentation& g);

/// Coassociativity of Δ on ℂ^n: (Δ⊗I)Δ(e_k) = (I⊗Δ)Δ(e_k). Works for any
/// magma; passes exactly when the table is associative.
CheckPlan plan_coassoc_delta(const QFamConfig& config);

/// Coassociativity of Γ on generators: (Γ⊗I)Γ(c) = (I⊗Γ)Γ(c).
CheckPlan plan_coassoc_gamma(const GammaPresentation& g);

/// The lifted coassociativity identity on Φ:
/// (I⊗I⊗Γ)(I⊗Γ)Φ(e_k) = (I⊗Γ⊗I)(I⊗Γ)Φ(e_k).
CheckPlan plan_e1(const GammaPresentation& g);

/// The multiplicativity identity on spanning tensors: both bracketings of
/// the three-fold product map send e_{x1}⊗w1⊗e_{x2}⊗w2⊗e_{x3}⊗w3 to
/// δ_{x1x2}δ_{x2x3}·e_{x1}⊗w1⊗w2⊗w3. Exact structural equality; both sides
/// are paired against the expected value for every index triple.
CheckPlan plan_e2(const starpoly::GeneratorSet& universe, int points,
                  const std::array<starpoly::NCWord, 3>& probe_words);

/// Report-producing wrappers around the plans.
void check_gamma_well_defined(const GammaPresentation& g,
                              VerificationReport& report);
void check_diagram_d1(const GammaPresentation& g, VerificationReport& report);
void check_coassoc_delta(const QFamConfig& config,
                         VerificationReport& report);
void check_coassoc_gamma(const GammaPresentation& g,
                         VerificationReport& report);
void check_e1(const GammaPresentation& g, VerificationReport& report);
void check_e2(const starpoly::GeneratorSet& universe, int points,
              const std::array<starpoly::NCWord, 3>& probe_words,
              VerificationReport& report);

/// A candidate character ε(c[x,k]) = δ_{k,f(x)} — equivalently a classical
/// map from the m-point space into the n-element set.
struct CounitCandidate {
  std::vector<int> f;  // f[x] in [0,n)

  std::string to_string() const;  // "(0,1)"
  friend bool operator==(const CounitCandidate&,
                         const CounitCandidate&) = default;
};

/// A candidate antipode S(c[x,k]) = c[x,σ_x(k)], extended
/// anti-multiplicatively; one column permutation per row.
struct AntipodeCandidate {
  std::vector<std::vector<int>> sigma;  // sigma[x] a permutation of [0,n)

  std::string to_string() const;  // "[[0,1],[1,0]]"
  friend bool operator==(const AntipodeCandidate&,
                         const AntipodeCandidate&) = default;
};

/// ε extended multiplicatively to a word (1 on the empty word).
GaussianRational counit_value(const CounitCandidate& eps,
                              const starpoly::NCWord& w);

/// Evaluates ε on algebra leg `at`, removing the leg and scaling each term.
tensorspace::TensorElem apply_counit_leg(const tensorspace::TensorElem& u,
                                         std::size_t at,
                                         const CounitCandidate& eps);

/// Applies S to algebra leg `at` in place: words reversed, letters permuted
/// column-wise per row.
tensorspace::TensorElem apply_antipode_leg(const tensorspace::TensorElem& u,
                                           std::size_t at,
                                           const AntipodeCandidate& s);

/// True when both counit axioms (ε⊗I)Γ(c) = c and (I⊗ε)Γ(c) = c hold for
/// every generator.
bool is_counit(const GammaPresentation& g, const CounitCandidate& eps);

struct CounitSearchOptions {
  /// Largest candidate-space size n^m the search will enumerate; beyond it
  /// the search refuses with std::domain_error instead of truncating.
  std::uint64_t cap = 1'000'000;
};

/// Exhaustively enumerates all n^m candidates in lexicographic order and
/// returns those satisfying both axioms on every generator.
std::vector<CounitCandidate> search_counit(const GammaPresentation& g,
                                           const CounitSearchOptions& opts =
                                               {});

/// The antipode axiom plan for one candidate: per generator,
/// m((S⊗I)Γ(c)) = ε(c)·1 and m((I⊗S)Γ(c)) = ε(c)·1.
/// The counit is re-verified first; std::invalid_argument when it is not one.
CheckPlan plan_antipode_candidate(const GammaPresentation& g,
                                  const AntipodeCandidate& s,
                                  const CounitCandidate& eps);

/// Runs the antipode plan and names the result
/// "antipode.candidate[<sigma>]". A Fail is evidence against this candidate
/// only, never a proof that no antipode exists.
CheckResult check_antipode_candidate(const GammaPresentation& g,
                                     const AntipodeCandidate& s,
                                     const CounitCandidate& eps);

}  // namespace qfam::family
