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

#include "qfam/family.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <utility>

namespace qfam::family {

using starpoly::gen;
using starpoly::Generator;
using starpoly::GeneratorSet;
using starpoly::NCWord;
using starpoly::RelationPreset;
using starpoly::Verdict;
using tensorspace::apply_alg_mult;
using tensorspace::apply_flip;
using tensorspace::apply_mult;
using tensorspace::eq_tensor;
using tensorspace::Factor;
using tensorspace::FactorList;
using tensorspace::Leg;
using tensorspace::LegHom;
using tensorspace::legwise_alg_product;
using tensorspace::reduce_modulo;
using tensorspace::Signature;
using tensorspace::substitute_hom;
using tensorspace::tensor_adjoint;
using tensorspace::TensorElem;

QFamConfig::QFamConfig(int points, semigroup::CayleyTable table,
                       RelationPreset preset, bool checked)
    : points_(points), table_(std::move(table)), preset_(preset),
      associativity_checked_(checked) {
  if (points_ < 1) {
    throw std::invalid_argument("number of points must be at least 1");
  }
}

QFamConfig QFamConfig::make(int points, semigroup::CayleyTable table,
                            RelationPreset preset) {
  auto result = semigroup::validate_associativity(table);
  if (const auto* witness = std::get_if<semigroup::NonAssocWitness>(&result)) {
    throw std::invalid_argument("table is not associative: " +
                                witness->to_string());
  }
  return QFamConfig(points, std::move(table), preset, /*checked=*/true);
}

QFamConfig QFamConfig::unchecked(int points, semigroup::CayleyTable table,
                                 RelationPreset preset) {
  return QFamConfig(points, std::move(table), preset, /*checked=*/false);
}

std::vector<TensorElem> build_phi(const QFamConfig& config) {
  const Signature sig{Leg::point(config.points()), Leg::alg()};
  std::vector<TensorElem> phi;
  phi.reserve(static_cast<std::size_t>(config.order()));
  for (int k = 0; k < config.order(); ++k) {
    TensorElem elem(sig, config.universe());
    for (int x = 0; x < config.points(); ++x) {
      elem.add_term({Factor(x), Factor(NCWord{gen(x, k)})}, 1);
    }
    phi.push_back(std::move(elem));
  }
  return phi;
}

std::vector<TensorElem> build_delta(const QFamConfig& config) {
  const int n = config.order();
  const Signature sig{Leg::point(n), Leg::point(n)};
  std::vector<TensorElem> delta;
  delta.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    TensorElem elem(sig, config.universe());
    for (int r = 0; r < n; ++r) {
      for (int s = 0; s < n; ++s) {
        if (config.table().xi(r, s) == k) {
          elem.add_term({Factor(r), Factor(s)}, 1);
        }
      }
    }
    delta.push_back(std::move(elem));
  }
  return delta;
}

GammaPresentation build_gamma(const QFamConfig& config) {
  const Signature sig{Leg::alg(), Leg::alg()};
  std::map<Generator, TensorElem> images;
  for (int x = 0; x < config.points(); ++x) {
    for (int k = 0; k < config.order(); ++k) {
      TensorElem image(sig, config.universe());
      for (int r = 0; r < config.order(); ++r) {
        for (int s = 0; s < config.order(); ++s) {
          if (config.table().xi(r, s) == k) {
            image.add_term(
                {Factor(NCWord{gen(x, r)}), Factor(NCWord{gen(x, s)})}, 1);
          }
        }
      }
      images.emplace(gen(x, k), std::move(image));
    }
  }
  return GammaPresentation(config, std::move(images));
}

const TensorElem& GammaPresentation::image(Generator g) const {
  auto it = images_.find(g);
  if (it == images_.end()) {
    throw std::out_of_range("no image for generator c[" +
                            std::to_string(g.row) + "," +
                            std::to_string(g.col) + "]");
  }
  return it->second;
}

GammaPresentation GammaPresentation::with_image(Generator g,
                                                TensorElem image) const {
  auto it = images_.find(g);
  if (it == images_.end()) {
    throw std::out_of_range("no image for generator c[" +
                            std::to_string(g.row) + "," +
                            std::to_string(g.col) + "]");
  }
  if (image.signature() != it->second.signature() ||
      !(image.universe() == it->second.universe())) {
    throw std::invalid_argument("replacement image has the wrong shape");
  }
  GammaPresentation out = *this;
  out.images_.insert_or_assign(g, std::move(image));
  return out;
}

LegHom GammaPresentation::hom() const {
  return LegHom::alg_hom(images_, config_.preset());
}

namespace {

std::string generator_label(Generator g) {
  return "c[" + std::to_string(g.row) + "," + std::to_string(g.col) + "]";
}

}  // namespace

CheckResult run_plan(const CheckPlan& plan, RelationPreset preset) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult result;
  result.name = plan.name;
  std::vector<std::string> failures;
  std::vector<std::string> undecided;
  for (const TensorPair& pair : plan.pairs) {
    if (plan.exact) {
      if (!(pair.lhs == pair.rhs)) {
        failures.push_back(pair.label + ": difference = " +
                           tensorspace::to_string(pair.lhs - pair.rhs));
      }
      continue;
    }
    switch (eq_tensor(pair.lhs, pair.rhs, preset)) {
      case Verdict::kEqual:
        break;
      case Verdict::kNotEqual:
        failures.push_back(
            pair.label + ": residue = " +
            tensorspace::to_string(reduce_modulo(pair.lhs - pair.rhs,
                                                 preset)));
        break;
      case Verdict::kInconclusive:
        undecided.push_back(pair.label);
        break;
    }
  }
  if (!failures.empty()) {
    result.verdict = CheckVerdict::kFail;
    std::string witness;
    for (std::size_t i = 0; i < failures.size(); ++i) {
      if (i) witness += "; ";
      witness += failures[i];
    }
    result.witness = std::move(witness);
  } else if (!undecided.empty()) {
    result.verdict = CheckVerdict::kInconclusive;
    std::string detail = "undecided: ";
    for (std::size_t i = 0; i < undecided.size(); ++i) {
      if (i) detail += ", ";
      detail += undecided[i];
    }
    result.detail = std::move(detail);
  } else {
    result.verdict = CheckVerdict::kPass;
  }
  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

std::vector<CheckPlan> plan_gamma_well_defined(const GammaPresentation& g) {
  const QFamConfig& config = g.config();
  const RelationPreset preset = config.preset();
  const TensorElem unit2 =
      TensorElem::alg_unit({Leg::alg(), Leg::alg()}, config.universe());

  CheckPlan self_adjoint{"gamma.self_adjoint", {}, false};
  CheckPlan idempotent{"gamma.idempotent", {}, false};
  for (const auto& [gener, image] : g.images()) {
    self_adjoint.pairs.push_back(
        {generator_label(gener), tensor_adjoint(image), image});
    idempotent.pairs.push_back(
        {generator_label(gener), legwise_alg_product(image, image, preset),
         image});
  }

  CheckPlan row_sum{"gamma.row_sum", {}, false};
  for (int x = 0; x < config.points(); ++x) {
    TensorElem sum(unit2.signature(), config.universe());
    for (int k = 0; k < config.order(); ++k) {
      sum = sum + g.image(gen(x, k));
    }
    row_sum.pairs.push_back({"row " + std::to_string(x), sum, unit2});
  }

  std::vector<CheckPlan> plans{std::move(self_adjoint), std::move(idempotent),
                               std::move(row_sum)};
  if (preset == RelationPreset::kMagicSquare) {
    CheckPlan col_sum{"gamma.col_sum", {}, false};
    for (int k = 0; k < config.order(); ++k) {
      TensorElem sum(unit2.signature(), config.universe());
      for (int x = 0; x < config.points(); ++x) {
        sum = sum + g.image(gen(x, k));
      }
      col_sum.pairs.push_back({"col " + std::to_string(k), sum, unit2});
    }
    plans.push_back(std::move(col_sum));
  }
  return plans;
}

CheckPlan plan_diagram_d1(const GammaPresentation& g) {
  const QFamConfig& config = g.config();
  const auto phi = build_phi(config);
  const auto delta = build_delta(config);
  const LegHom gamma_hom = g.hom();
  const LegHom phi_hom = LegHom::phi(config.points(), config.order());

  CheckPlan plan{"diagram.d1", {}, false};
  for (int k = 0; k < config.order(); ++k) {
    // Left: (I⊗Γ)Φ(e_k) over [P_m, A, A].
    const TensorElem lhs =
        substitute_hom(phi[static_cast<std::size_t>(k)], 1, gamma_hom);
    // Right: (m⊗I⊗I)(I⊗F⊗I)(Φ⊗Φ)Δ(e_k).
    TensorElem rhs =
        substitute_hom(delta[static_cast<std::size_t>(k)], 0, phi_hom);
    rhs = substitute_hom(rhs, 2, phi_hom);
    rhs = apply_flip(rhs, 1);
    rhs = apply_mult(rhs, 0);
    plan.pairs.push_back({"k=" + std::to_string(k), lhs, rhs});
  }
  return plan;
}

CheckPlan plan_coassoc_delta(const QFamConfig& config) {
  const auto delta = build_delta(config);
  const LegHom delta_hom = LegHom::delta(config.table());
  CheckPlan plan{"coassoc.delta", {}, true};
  for (int k = 0; k < config.order(); ++k) {
    const TensorElem& d = delta[static_cast<std::size_t>(k)];
    plan.pairs.push_back({"k=" + std::to_string(k),
                          substitute_hom(d, 0, delta_hom),
                          substitute_hom(d, 1, delta_hom)});
  }
  return plan;
}

CheckPlan plan_coassoc_gamma(const GammaPresentation& g) {
  const LegHom gamma_hom = g.hom();
  CheckPlan plan{"coassoc.gamma", {}, false};
  for (const auto& [gener, image] : g.images()) {
    plan.pairs.push_back({generator_label(gener),
                          substitute_hom(image, 0, gamma_hom),
                          substitute_hom(image, 1, gamma_hom)});
  }
  return plan;
}

CheckPlan plan_e1(const GammaPresentation& g) {
  const QFamConfig& config = g.config();
  const auto phi = build_phi(config);
  const LegHom gamma_hom = g.hom();
  CheckPlan plan{"eq.e1", {}, false};
  for (int k = 0; k < config.order(); ++k) {
    const TensorElem base =
        substitute_hom(phi[static_cast<std::size_t>(k)], 1, gamma_hom);
    plan.pairs.push_back({"k=" + std::to_string(k),
                          substitute_hom(base, 2, gamma_hom),
                          substitute_hom(base, 1, gamma_hom)});
  }
  return plan;
}

CheckPlan plan_e2(const GeneratorSet& universe, int points,
                  const std::array<NCWord, 3>& probe_words) {
  if (points < 1) {
    throw std::invalid_argument("number of points must be at least 1");
  }
  const Leg p = Leg::point(points);
  const Signature six{p, Leg::alg(), p, Leg::alg(), p, Leg::alg()};
  const Signature four{p, Leg::alg(), Leg::alg(), Leg::alg()};

  CheckPlan plan{"eq.e2", {}, true};
  for (int x1 = 0; x1 < points; ++x1) {
    for (int x2 = 0; x2 < points; ++x2) {
      for (int x3 = 0; x3 < points; ++x3) {
        const TensorElem input = TensorElem::monomial(
            six, universe,
            {Factor(x1), Factor(probe_words[0]), Factor(x2),
             Factor(probe_words[1]), Factor(x3), Factor(probe_words[2])});
        // Bracketing b1(b2b3): bring the point legs together right-first.
        TensorElem lhs = apply_flip(input, 3);
        lhs = apply_mult(lhs, 2);
        lhs = apply_flip(lhs, 1);
        lhs = apply_mult(lhs, 0);
        // Bracketing (b1b2)b3: left-first.
        TensorElem rhs = apply_flip(input, 1);
        rhs = apply_mult(rhs, 0);
        rhs = apply_flip(rhs, 2);
        rhs = apply_flip(rhs, 1);
        rhs = apply_mult(rhs, 0);

        TensorElem expected(four, universe);
        if (x1 == x2 && x2 == x3) {
          expected.add_term({Factor(x1), Factor(probe_words[0]),
                             Factor(probe_words[1]), Factor(probe_words[2])},
                            1);
        }
        const std::string idx = "x=(" + std::to_string(x1) + "," +
                                std::to_string(x2) + "," +
                                std::to_string(x3) + ")";
        plan.pairs.push_back({idx + " left", lhs, expected});
        plan.pairs.push_back({idx + " right", rhs, expected});
      }
    }
  }
  return plan;
}

void check_gamma_well_defined(const GammaPresentation& g,
                              VerificationReport& report) {
  for (const CheckPlan& plan : plan_gamma_well_defined(g)) {
    report.add(run_plan(plan, g.config().preset()));
  }
}

void check_diagram_d1(const GammaPresentation& g, VerificationReport& report) {
  report.add(run_plan(plan_diagram_d1(g), g.config().preset()));
}

void check_coassoc_delta(const QFamConfig& config,
                         VerificationReport& report) {
  report.add(run_plan(plan_coassoc_delta(config), config.preset()));
}

void check_coassoc_gamma(const GammaPresentation& g,
                         VerificationReport& report) {
  report.add(run_plan(plan_coassoc_gamma(g), g.config().preset()));
}

void check_e1(const GammaPresentation& g, VerificationReport& report) {
  report.add(run_plan(plan_e1(g), g.config().preset()));
}

void check_e2(const GeneratorSet& universe, int points,
              const std::array<NCWord, 3>& probe_words,
              VerificationReport& report) {
  report.add(run_plan(plan_e2(universe, points, probe_words),
                      RelationPreset::kAllMaps));
}

std::string CounitCandidate::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(f[i]);
  }
  return out + ")";
}

std::string AntipodeCandidate::to_string() const {
  std::string out = "[";
  for (std::size_t x = 0; x < sigma.size(); ++x) {
    if (x) out += ",";
    out += "[";
    for (std::size_t k = 0; k < sigma[x].size(); ++k) {
      if (k) out += ",";
      out += std::to_string(sigma[x][k]);
    }
    out += "]";
  }
  return out + "]";
}

GaussianRational counit_value(const CounitCandidate& eps, const NCWord& w) {
  for (const Generator& g : w) {
    if (eps.f.at(static_cast<std::size_t>(g.row)) != g.col) {
      return GaussianRational(0);
    }
  }
  return GaussianRational(1);
}

TensorElem apply_counit_leg(const TensorElem& u, std::size_t at,
                            const CounitCandidate& eps) {
  if (at >= u.signature().size() || !u.signature()[at].is_alg()) {
    throw std::invalid_argument(
        "counit applies to an algebra leg; position " + std::to_string(at) +
        " of " + tensorspace::to_string(u.signature()));
  }
  Signature sig = u.signature();
  sig.erase(sig.begin() + static_cast<std::ptrdiff_t>(at));
  TensorElem out(std::move(sig), u.universe());
  for (const auto& [f, c] : u.terms()) {
    const GaussianRational scale =
        counit_value(eps, std::get<NCWord>(f[at]));
    if (scale.is_zero()) continue;
    FactorList g = f;
    g.erase(g.begin() + static_cast<std::ptrdiff_t>(at));
    out.add_term(std::move(g), c * scale);
  }
  return out;
}

TensorElem apply_antipode_leg(const TensorElem& u, std::size_t at,
                              const AntipodeCandidate& s) {
  if (at >= u.signature().size() || !u.signature()[at].is_alg()) {
    throw std::invalid_argument(
        "antipode applies to an algebra leg; position " + std::to_string(at) +
        " of " + tensorspace::to_string(u.signature()));
  }
  TensorElem out(u.signature(), u.universe());
  for (const auto& [f, c] : u.terms()) {
    const NCWord& w = std::get<NCWord>(f[at]);
    NCWord image;
    image.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      const auto& row = s.sigma.at(static_cast<std::size_t>(it->row));
      image.push_back(gen(it->row, row.at(static_cast<std::size_t>(it->col))));
    }
    FactorList g = f;
    g[at] = std::move(image);
    out.add_term(std::move(g), c);
  }
  return out;
}

namespace {

void validate_counit_shape(const QFamConfig& config,
                           const CounitCandidate& eps) {
  if (static_cast<int>(eps.f.size()) != config.points()) {
    throw std::invalid_argument("counit candidate has " +
                                std::to_string(eps.f.size()) +
                                " values for " +
                                std::to_string(config.points()) + " points");
  }
  for (int v : eps.f) {
    if (v < 0 || v >= config.order()) {
      throw std::invalid_argument("counit candidate value " +
                                  std::to_string(v) + " out of range");
    }
  }
}

void validate_antipode_shape(const QFamConfig& config,
                             const AntipodeCandidate& s) {
  if (static_cast<int>(s.sigma.size()) != config.points()) {
    throw std::invalid_argument("antipode candidate has " +
                                std::to_string(s.sigma.size()) +
                                " rows for " +
                                std::to_string(config.points()) + " points");
  }
  for (const auto& row : s.sigma) {
    if (static_cast<int>(row.size()) != config.order()) {
      throw std::invalid_argument("antipode row is not a permutation of [0," +
                                  std::to_string(config.order()) + ")");
    }
    std::vector<bool> seen(row.size(), false);
    for (int v : row) {
      if (v < 0 || v >= config.order() ||
          seen[static_cast<std::size_t>(v)]) {
        throw std::invalid_argument(
            "antipode row is not a permutation of [0," +
            std::to_string(config.order()) + ")");
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
}

}  // namespace

bool is_counit(const GammaPresentation& g, const CounitCandidate& eps) {
  const QFamConfig& config = g.config();
  validate_counit_shape(config, eps);
  const Signature one{Leg::alg()};
  for (const auto& [gener, image] : g.images()) {
    const TensorElem as_leg = TensorElem::monomial(
        one, config.universe(), {Factor(NCWord{gener})});
    if (eq_tensor(apply_counit_leg(image, 0, eps), as_leg,
                  config.preset()) != Verdict::kEqual) {
      return false;
    }
    if (eq_tensor(apply_counit_leg(image, 1, eps), as_leg,
                  config.preset()) != Verdict::kEqual) {
      return false;
    }
  }
  return true;
}

std::vector<CounitCandidate> search_counit(const GammaPresentation& g,
                                           const CounitSearchOptions& opts) {
  const QFamConfig& config = g.config();
  const auto n = static_cast<std::uint64_t>(config.order());
  std::uint64_t space = 1;
  for (int x = 0; x < config.points(); ++x) {
    if (space > opts.cap / n) {
      throw std::domain_error(
          "counit search space n^m exceeds the cap of " +
          std::to_string(opts.cap) + " candidates; refusing to truncate");
    }
    space *= n;
  }
  std::vector<CounitCandidate> found;
  CounitCandidate eps{std::vector<int>(
      static_cast<std::size_t>(config.points()), 0)};
  for (std::uint64_t i = 0; i < space; ++i) {
    if (is_counit(g, eps)) found.push_back(eps);
    // Lexicographic increment: last coordinate fastest.
    for (int x = config.points() - 1; x >= 0; --x) {
      auto& v = eps.f[static_cast<std::size_t>(x)];
      if (++v < config.order()) break;
      v = 0;
    }
  }
  return found;
}

CheckPlan plan_antipode_candidate(const GammaPresentation& g,
                                  const AntipodeCandidate& s,
                                  const CounitCandidate& eps) {
  const QFamConfig& config = g.config();
  validate_antipode_shape(config, s);
  if (!is_counit(g, eps)) {
    throw std::invalid_argument("counit candidate " + eps.to_string() +
                                " fails the counit axioms; antipode probe "
                                "refused");
  }
  const Signature one{Leg::alg()};
  CheckPlan plan{"antipode.candidate[" + s.to_string() + "]", {}, false};
  for (const auto& [gener, image] : g.images()) {
    TensorElem scaled_unit(one, config.universe());
    scaled_unit.add_term({Factor(NCWord{})},
                         counit_value(eps, NCWord{gener}));
    plan.pairs.push_back(
        {generator_label(gener) + " left",
         apply_alg_mult(apply_antipode_leg(image, 0, s), 0, config.preset()),
         scaled_unit});
    plan.pairs.push_back(
        {generator_label(gener) + " right",
         apply_alg_mult(apply_antipode_leg(image, 1, s), 0, config.preset()),
         scaled_unit});
  }
  return plan;
}

CheckResult check_antipode_candidate(const GammaPresentation& g,
                                     const AntipodeCandidate& s,
                                     const CounitCandidate& eps) {
  return run_plan(plan_antipode_candidate(g, s, eps), g.config().preset());
}

}  // namespace qfam::family
