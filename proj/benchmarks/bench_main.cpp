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

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "qfam/family.hpp"
#include "qfam/numrep.hpp"
#include "qfam/semigroup.hpp"
#include "qfam/starpoly.hpp"

namespace {

using namespace qfam;
using starpoly::RelationPreset;

semigroup::CayleyTable z3() {
  return semigroup::CayleyTable(3, {0, 1, 2, 1, 2, 0, 2, 0, 1});
}

starpoly::NCWord random_word(std::mt19937_64& rng, int points, int order,
                             int length) {
  starpoly::NCWord w;
  for (int i = 0; i < length; ++i) {
    w.push_back(starpoly::gen(static_cast<int>(rng() % points),
                              static_cast<int>(rng() % order)));
  }
  return w;
}

void BM_NormalForm(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const starpoly::GeneratorSet u{3, 3};
  std::vector<starpoly::StarPoly> inputs;
  for (int i = 0; i < 64; ++i) {
    starpoly::StarPoly p = starpoly::StarPoly::zero(u);
    for (int t = 0; t < 4; ++t) {
      p = p + starpoly::StarPoly::monomial(u, random_word(rng, 3, 3, 8), 1);
    }
    inputs.push_back(p);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        starpoly::normal_form(inputs[i % inputs.size()],
                              RelationPreset::kAllMaps));
    ++i;
  }
}
BENCHMARK(BM_NormalForm);

void BM_EqMod(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const starpoly::GeneratorSet u{3, 3};
  const auto a = starpoly::StarPoly::monomial(u, random_word(rng, 3, 3, 6), 1);
  const auto b = starpoly::StarPoly::monomial(u, random_word(rng, 3, 3, 6), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(starpoly::eq_mod(starpoly::poly_mul(a, b),
                                              starpoly::poly_mul(b, a),
                                              RelationPreset::kAllMaps));
  }
}
BENCHMARK(BM_EqMod);

void BM_EnumerateAssociative3(benchmark::State& state) {
  for (auto _ : state) {
    semigroup::EnumerateOptions opts;
    opts.filter = semigroup::TableFilter::kAssociativeOnly;
    benchmark::DoNotOptimize(semigroup::enumerate_tables(3, opts));
  }
}
BENCHMARK(BM_EnumerateAssociative3);

void BM_CoassocGamma(benchmark::State& state) {
  const auto config = family::QFamConfig::make(3, z3());
  const auto gamma = family::build_gamma(config);
  const auto plan = family::plan_coassoc_gamma(gamma);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        family::run_plan(plan, RelationPreset::kAllMaps));
  }
}
BENCHMARK(BM_CoassocGamma);

void BM_SampleRep(benchmark::State& state) {
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(numrep::sample_rep(3, 3, 8, seed++));
  }
}
BENCHMARK(BM_SampleRep);

void BM_PairResidual(benchmark::State& state) {
  const auto config = family::QFamConfig::make(2, z3());
  const auto gamma = family::build_gamma(config);
  const auto plan = family::plan_diagram_d1(gamma);
  const auto rep = numrep::sample_rep(2, 3, 4, 42);
  for (auto _ : state) {
    double acc = 0.0;
    for (const auto& pair : plan.pairs) {
      acc += numrep::pair_residual(pair.lhs, pair.rhs, rep);
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_PairResidual);

}  // namespace

BENCHMARK_MAIN();
