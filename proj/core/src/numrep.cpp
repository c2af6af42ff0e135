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

#include "qfam/numrep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>

namespace qfam::numrep {

using starpoly::Generator;
using starpoly::NCWord;
using starpoly::RelationPreset;
using starpoly::StarPoly;
using tensorspace::FactorList;
using tensorspace::Leg;
using tensorspace::TensorElem;

namespace {

// Deterministic standard normals: raw 64-bit mt19937_64 output mapped to
// (0,1) doubles, then Box-Muller. Avoids std::normal_distribution, whose
// algorithm is implementation-defined.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

  double operator()() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  std::uint64_t raw() { return engine_(); }

 private:
  double uniform01() {
    // 53 high bits, shifted into (0,1): never exactly 0, so log() is safe.
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

// A uniform composition d = d_0 + ... + d_{n-1} with zero parts allowed:
// the n-1 bar positions of a random stars-and-bars arrangement.
std::vector<int> random_composition(int d, int n, GaussianSource& rng) {
  std::vector<int> sizes(static_cast<std::size_t>(n), 0);
  if (n == 1) {
    sizes[0] = d;
    return sizes;
  }
  const int slots = d + n - 1;
  std::vector<int> idx(static_cast<std::size_t>(slots));
  for (int i = 0; i < slots; ++i) idx[static_cast<std::size_t>(i)] = i;
  // Partial Fisher-Yates: the first n-1 entries become a uniform sample.
  for (int i = 0; i < n - 1; ++i) {
    const auto j =
        i + static_cast<int>(rng.raw() % static_cast<std::uint64_t>(slots - i));
    std::swap(idx[static_cast<std::size_t>(i)],
              idx[static_cast<std::size_t>(j)]);
  }
  std::vector<int> bars(idx.begin(), idx.begin() + (n - 1));
  std::sort(bars.begin(), bars.end());
  int prev = -1;
  for (int k = 0; k < n - 1; ++k) {
    sizes[static_cast<std::size_t>(k)] = bars[static_cast<std::size_t>(k)] -
                                         prev - 1;
    prev = bars[static_cast<std::size_t>(k)];
  }
  sizes[static_cast<std::size_t>(n - 1)] = slots - 1 - prev;
  return sizes;
}

}  // namespace

NumericRep sample_rep(int m, int n, int d, std::uint64_t seed) {
  if (m < 1 || n < 1 || d < 1) {
    throw std::invalid_argument("sample_rep needs m, n, d >= 1");
  }
  NumericRep rep;
  rep.m = m;
  rep.n = n;
  rep.d = d;
  rep.seed = seed;
  rep.mats.assign(static_cast<std::size_t>(m), {});
  GaussianSource rng(seed);
  for (int x = 0; x < m; ++x) {
    auto& row = rep.mats[static_cast<std::size_t>(x)];
    row.assign(static_cast<std::size_t>(n),
               Eigen::MatrixXcd::Zero(d, d));
    if (n == 1) {
      row[0] = Eigen::MatrixXcd::Identity(d, d);
      continue;
    }
    Eigen::MatrixXcd g(d, d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        g(i, j) = std::complex<double>(rng(), rng());
      }
    }
    const Eigen::MatrixXcd u =
        Eigen::HouseholderQR<Eigen::MatrixXcd>(g).householderQ();
    const std::vector<int> sizes = random_composition(d, n, rng);
    int offset = 0;
    for (int k = 0; k < n; ++k) {
      const int dk = sizes[static_cast<std::size_t>(k)];
      if (dk > 0) {
        const Eigen::MatrixXcd block = u.middleCols(offset, dk);
        row[static_cast<std::size_t>(k)] = block * block.adjoint();
      }
      offset += dk;
    }
  }
  return rep;
}

NumericRep rep_two_projection_path(double t) {
  if (t < 0.0 || t > std::numbers::pi / 2.0 + 1e-12) {
    throw std::invalid_argument("path parameter must lie in [0, pi/2]");
  }
  const double c = std::cos(t);
  const double s = std::sin(t);
  NumericRep rep;
  rep.m = 2;
  rep.n = 2;
  rep.d = 2;
  rep.seed = 0;
  Eigen::MatrixXcd p(2, 2), q(2, 2);
  p << 1, 0, 0, 0;
  q << c * c, c * s, c * s, s * s;
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(2, 2);
  rep.mats = {{p, id - p}, {q, id - q}};
  return rep;
}

double relation_residual(const NumericRep& rep, RelationPreset preset) {
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(rep.d, rep.d);
  double worst = 0.0;
  auto note = [&](double r) { worst = std::max(worst, r); };
  for (int x = 0; x < rep.m; ++x) {
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(rep.d, rep.d);
    for (int k = 0; k < rep.n; ++k) {
      const Eigen::MatrixXcd& a = rep.mats[static_cast<std::size_t>(x)]
                                          [static_cast<std::size_t>(k)];
      note((a - a.adjoint()).norm());
      note((a * a - a).norm());
      for (int k2 = k + 1; k2 < rep.n; ++k2) {
        note((a * rep.mats[static_cast<std::size_t>(x)]
                          [static_cast<std::size_t>(k2)])
                 .norm());
      }
      sum += a;
    }
    note((sum - id).norm());
  }
  if (preset == RelationPreset::kMagicSquare) {
    for (int k = 0; k < rep.n; ++k) {
      Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(rep.d, rep.d);
      for (int x = 0; x < rep.m; ++x) {
        const Eigen::MatrixXcd& a = rep.mats[static_cast<std::size_t>(x)]
                                            [static_cast<std::size_t>(k)];
        for (int x2 = x + 1; x2 < rep.m; ++x2) {
          note((a * rep.mats[static_cast<std::size_t>(x2)]
                            [static_cast<std::size_t>(k)])
                   .norm());
        }
        sum += a;
      }
      note((sum - id).norm());
    }
  }
  return worst;
}

const Eigen::MatrixXcd& TensorEvaluator::word_matrix(const NCWord& w) {
  auto it = memo_.find(w);
  if (it != memo_.end()) return it->second;
  Eigen::MatrixXcd value = Eigen::MatrixXcd::Identity(rep_->d, rep_->d);
  for (const Generator& g : w) {
    if (g.row < 0 || g.row >= rep_->m || g.col < 0 || g.col >= rep_->n) {
      throw std::out_of_range("generator c[" + std::to_string(g.row) + "," +
                              std::to_string(g.col) +
                              "] outside the representation");
    }
    value = value * rep_->mats[static_cast<std::size_t>(g.row)]
                              [static_cast<std::size_t>(g.col)];
  }
  return memo_.emplace(w, std::move(value)).first->second;
}

Eigen::MatrixXcd evaluate_poly(const StarPoly& p, const NumericRep& rep) {
  TensorEvaluator eval(rep);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rep.d, rep.d);
  for (const auto& [w, c] : p.terms()) {
    out += c.to_complex() * eval.word_matrix(w);
  }
  return out;
}

namespace {

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

struct ScaledWordList {
  std::complex<double> scale;
  std::vector<const NCWord*> words;  // one per algebra leg
};

}  // namespace

Eigen::MatrixXcd TensorEvaluator::evaluate(
    const TensorElem& u, const std::vector<Eigen::VectorXcd>& point_vectors) {
  // Pair point legs with the supplied vectors, leaving scaled word lists.
  std::size_t point_legs = 0;
  for (const Leg& leg : u.signature()) point_legs += leg.is_point() ? 1 : 0;
  if (point_vectors.size() != point_legs) {
    throw std::invalid_argument("expected " + std::to_string(point_legs) +
                                " point vectors, got " +
                                std::to_string(point_vectors.size()));
  }
  std::size_t vec = 0;
  for (std::size_t i = 0; i < u.signature().size(); ++i) {
    if (!u.signature()[i].is_point()) continue;
    if (point_vectors[vec].size() != u.signature()[i].dim) {
      throw std::invalid_argument("point vector " + std::to_string(vec) +
                                  " has the wrong dimension");
    }
    ++vec;
  }

  std::vector<ScaledWordList> rows;
  rows.reserve(u.terms().size());
  for (const auto& [f, c] : u.terms()) {
    ScaledWordList row;
    row.scale = c.to_complex();
    std::size_t v = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (u.signature()[i].is_point()) {
        row.scale *= point_vectors[v](std::get<int>(f[i]));
        ++v;
      } else {
        row.words.push_back(&std::get<NCWord>(f[i]));
      }
    }
    rows.push_back(std::move(row));
  }

  const std::size_t alg_legs =
      u.signature().size() - point_legs;
  const auto dim_of = [&](std::size_t legs) {
    Eigen::Index out = 1;
    for (std::size_t i = 0; i < legs; ++i) out *= rep_->d;
    return out;
  };

  // Grouped Kronecker evaluation: sum the suffix matrices of terms sharing
  // a leading word, then Kronecker once per distinct word.
  std::function<Eigen::MatrixXcd(const std::vector<std::size_t>&,
                                 std::size_t)>
      eval_group = [&](const std::vector<std::size_t>& members,
                       std::size_t level) -> Eigen::MatrixXcd {
    if (level == alg_legs) {
      std::complex<double> total = 0.0;
      for (std::size_t i : members) total += rows[i].scale;
      Eigen::MatrixXcd out(1, 1);
      out(0, 0) = total;
      return out;
    }
    std::map<NCWord, std::vector<std::size_t>, starpoly::WordOrder> buckets;
    for (std::size_t i : members) {
      buckets[*rows[i].words[level]].push_back(i);
    }
    const Eigen::Index dim = dim_of(alg_legs - level);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& [w, sub] : buckets) {
      out += kron(word_matrix(w), eval_group(sub, level + 1));
    }
    return out;
  };

  std::vector<std::size_t> all(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) all[i] = i;
  return eval_group(all, 0);
}

double TensorEvaluator::pair_residual(const TensorElem& lhs,
                                      const TensorElem& rhs) {
  const TensorElem diff = lhs - rhs;  // validates matching signatures
  std::vector<int> dims;
  for (const Leg& leg : diff.signature()) {
    if (leg.is_point()) dims.push_back(leg.dim);
  }
  double worst = 0.0;
  std::vector<int> assign(dims.size(), 0);
  while (true) {
    std::vector<Eigen::VectorXcd> vectors;
    vectors.reserve(dims.size());
    for (std::size_t i = 0; i < dims.size(); ++i) {
      Eigen::VectorXcd e = Eigen::VectorXcd::Zero(dims[i]);
      e(assign[i]) = 1.0;
      vectors.push_back(std::move(e));
    }
    worst = std::max(worst, evaluate(diff, vectors).norm());
    // Odometer over the basis assignments.
    std::size_t i = 0;
    for (; i < dims.size(); ++i) {
      if (++assign[i] < dims[i]) break;
      assign[i] = 0;
    }
    if (i == dims.size()) break;
  }
  return worst;
}

Eigen::MatrixXcd evaluate_tensor(const TensorElem& u, const NumericRep& rep,
                                 const std::vector<Eigen::VectorXcd>&
                                     point_vectors) {
  TensorEvaluator eval(rep);
  return eval.evaluate(u, point_vectors);
}

double pair_residual(const TensorElem& lhs, const TensorElem& rhs,
                     const NumericRep& rep) {
  TensorEvaluator eval(rep);
  return eval.pair_residual(lhs, rhs);
}

SeparationResult separate(const TensorElem& lhs, const TensorElem& rhs,
                          const std::vector<int>& dims, int samples_per_dim,
                          std::uint64_t base_seed, double threshold) {
  SeparationResult best;
  const auto& universe = lhs.universe();
  for (int dim : dims) {
    for (int i = 0; i < samples_per_dim; ++i) {
      const std::uint64_t seed = seed_for(base_seed, dim, i);
      const NumericRep rep =
          sample_rep(universe.rows, universe.cols, dim, seed);
      const double r = pair_residual(lhs, rhs, rep);
      if (r > best.best_residual) {
        best.best_residual = r;
        best.dim = dim;
        best.seed = seed;
      }
      if (r >= threshold) {
        best.separated = true;
        return best;
      }
    }
  }
  return best;
}

family::CheckResult numeric_mirror(const family::CheckPlan& plan,
                                   family::CheckVerdict symbolic,
                                   const std::vector<int>& dims,
                                   int samples_per_dim,
                                   std::uint64_t base_seed,
                                   const Tolerances& tol) {
  const auto start = std::chrono::steady_clock::now();
  family::CheckResult result;
  result.name = "numeric." + plan.name;

  if (symbolic == family::CheckVerdict::kInconclusive) {
    result.verdict = family::CheckVerdict::kInconclusive;
    result.detail =
        "symbolic verdict inconclusive; no sampled representation models "
        "the undecided relations";
    return result;
  }

  double global_worst = 0.0;
  std::string worst_at;
  for (int dim : dims) {
    for (int i = 0; i < samples_per_dim; ++i) {
      const std::uint64_t seed = seed_for(base_seed, dim, i);
      NumericRep rep;
      bool have_rep = false;
      double rep_worst = 0.0;
      for (const family::TensorPair& pair : plan.pairs) {
        if (!have_rep) {
          const auto& universe = pair.lhs.universe();
          rep = sample_rep(universe.rows, universe.cols, dim, seed);
          have_rep = true;
        }
        TensorEvaluator eval(rep);
        const double r = eval.pair_residual(pair.lhs, pair.rhs);
        if (r > rep_worst) rep_worst = r;
        if (r > global_worst) {
          global_worst = r;
          worst_at = pair.label + " (dim=" + std::to_string(dim) +
                     ", seed=" + std::to_string(seed) + ")";
        }
      }
      result.residuals.push_back({dim, seed, rep_worst});
    }
  }

  if (symbolic == family::CheckVerdict::kPass) {
    if (global_worst <= tol.identity) {
      result.verdict = family::CheckVerdict::kPass;
    } else {
      result.verdict = family::CheckVerdict::kFail;
      result.witness = "residual " + std::to_string(global_worst) +
                       " exceeds tolerance at " + worst_at;
    }
  } else {  // symbolic Fail: the oracle should separate the sides
    if (global_worst >= tol.separation) {
      result.verdict = family::CheckVerdict::kPass;
      result.detail = "separated at " + worst_at;
    } else {
      result.verdict = family::CheckVerdict::kInconclusive;
      result.detail = "unseparated: best residual " +
                      std::to_string(global_worst) +
                      " below the separation threshold";
    }
  }
  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

}  // namespace qfam::numrep
