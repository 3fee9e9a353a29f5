// Copyright 2026 The Holonomy Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <cmath>

#include "holonomy/angles.hpp"
#include "holonomy/curvature.hpp"
#include "holonomy/evolution.hpp"
#include "holonomy/operators.hpp"
#include "holonomy/phases.hpp"
#include "holonomy/random.hpp"

namespace {

using namespace holonomy;

void BM_EigHermitian(benchmark::State& state) {
  Rng rng(1);
  const HermitianMatrix h = random_hermitian(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(eig_hermitian(h));
}
BENCHMARK(BM_EigHermitian)->Arg(2)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_EvolveRotatingField(benchmark::State& state) {
  const HamiltonianSampler h(2, [](double t) {
    return (0.5 * std::cos(t)) * pauli_x() + (0.5 * std::sin(t)) * pauli_y();
  });
  for (auto _ : state) benchmark::DoNotOptimize(evolve(h, kTwoPi, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_EvolveRotatingField)->Arg(1024)->Arg(4096);

void BM_SumRuleCheck(benchmark::State& state) {
  Rng rng(11);
  const auto h = HamiltonianSampler::constant(random_hermitian(static_cast<std::size_t>(state.range(0)), rng));
  for (auto _ : state) benchmark::DoNotOptimize(sum_rule_check(h, 1.0));
}
BENCHMARK(BM_SumRuleCheck)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_TwoFormFieldBloch(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const FrameFamily family = sample_family(GridAxis::closed(0.1, kPi - 0.1, n),
                                           GridAxis::periodic_axis(0.0, kTwoPi, 2 * n),
                                           [](double t, double p) { return bloch_frame(t, p); });
  for (auto _ : state) benchmark::DoNotOptimize(two_form_field(family));
}
BENCHMARK(BM_TwoFormFieldBloch)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_ChernChargesSpin(benchmark::State& state) {
  const auto s = spin_matrices(static_cast<int>(state.range(0)));
  const HamiltonianField field = [&s](double t, double p) {
    return spin_dot(s, std::sin(t) * std::cos(p), std::sin(t) * std::sin(p), std::cos(t));
  };
  for (auto _ : state) benchmark::DoNotOptimize(chern_charges(sphere_eigenframe_family(60, 60, field)));
}
BENCHMARK(BM_ChernChargesSpin)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
