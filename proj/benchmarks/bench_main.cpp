#include <benchmark/benchmark.h>

#include <random>

#include "anisogate/chain.hpp"
#include "anisogate/cnot.hpp"
#include "anisogate/verifier.hpp"
#include "anisogate/wedge.hpp"

using namespace anisogate;

static void BM_GateUnitary(benchmark::State& state) {
  GateParams p{2.1, 0.05, 0.12, 0.014};
  for (auto _ : state) {
    benchmark::DoNotOptimize(gate_unitary(p));
    p.lambda += 1e-9;
  }
}
BENCHMARK(BM_GateUnitary);

static void BM_XRotation(benchmark::State& state) {
  const Wedge w = Wedge::centered(1.0 / static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(synthesize_x_rotation(kPi, w));
}
BENCHMARK(BM_XRotation)->Arg(5)->Arg(20)->Arg(80);

static void BM_ProcedureOne(benchmark::State& state) {
  const Wedge w = wedge_from_controls({-0.1, 0.1}, {1, 1}, {1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(complete_cnot(procedure_one(w), w));
}
BENCHMARK(BM_ProcedureOne);

static void BM_ProcedureTwo(benchmark::State& state) {
  const Wedge w = wedge_from_controls({-0.1, 0.1}, {1, 1}, {1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(complete_cnot(procedure_two(w), w));
}
BENCHMARK(BM_ProcedureTwo);

static void BM_LogicalAction(benchmark::State& state) {
  const Wedge w = wedge_from_controls({-0.1, 0.1}, {1, 1}, {1, 1});
  const auto program = complete_cnot(procedure_one(w), w).program();
  for (auto _ : state) benchmark::DoNotOptimize(logical_action_of_program(program));
}
BENCHMARK(BM_LogicalAction);

static void BM_ApplyGate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  VecX amps(Eigen::Index{1} << n);
  for (Eigen::Index i = 0; i < amps.size(); ++i) amps(i) = Complex(g(rng), g(rng));
  amps.normalize();
  ChainState s(n, amps);
  const Mat4 u = gate_unitary({1.3, 0.0, 0.1, 0.01}).matrix;
  int pair = 1;
  for (auto _ : state) {
    apply_gate(s, SpinPair{pair}, u);
    pair = pair % (n - 1) + 1;
  }
  state.SetItemsProcessed(state.iterations() * amps.size());
}
BENCHMARK(BM_ApplyGate)->Arg(4)->Arg(12)->Arg(20);

BENCHMARK_MAIN();
