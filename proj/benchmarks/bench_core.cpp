#include "sqzcav/evolve.hpp"
#include "sqzcav/resonance.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

using namespace sqzcav;

namespace {

SystemParams fig2c() {
  const SystemParams p =
      SystemParams::from_squeezing({1.0, 1.5, 200.0, 0.0, 0.0}, 2.0, 10.0 * std::cosh(2.0));
  return p.with_delta_2(solve_resonance(p).delta_2);
}

void BM_HamiltonianSqueezed(benchmark::State& state) {
  const SystemParams p = fig2c();
  const HilbertSpace space(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hamiltonian_squeezed(p, space));
}
BENCHMARK(BM_HamiltonianSqueezed)->Arg(10)->Arg(30);

void BM_CrossingScan(benchmark::State& state) {
  const SystemParams p = fig2c();
  const HilbertSpace space(10);
  const auto grid = crossing_grid(p.delta_2(), 0.5, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(scan_avoided_crossing(p, grid, space));
}
BENCHMARK(BM_CrossingScan)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_SchrodingerRun(benchmark::State& state) {
  const SystemParams p = fig2c();
  const HilbertSpace space(10);
  const Operator h = hamiltonian_squeezed(p, space);
  const Ket psi0 = squeezed_vacuum_state(space, BasisLabel::EG);
  const auto times = uniform_times(200.0, 1201);
  for (auto _ : state) benchmark::DoNotOptimize(evolve_schrodinger(h, psi0, times));
}
BENCHMARK(BM_SchrodingerRun)->Unit(benchmark::kMillisecond);

void BM_MasterStep(benchmark::State& state) {
  const SystemParams p = fig2c();
  const HilbertSpace space(static_cast<int>(state.range(0)));
  ReservoirParams r;
  r.kappa = 1e-3;
  r.gamma = 1e-3;
  r.n_th = 5.0;
  const LindbladGenerator gen(hamiltonian_squeezed(p, space),
                              make_dissipator(DissipatorVariant::SqueezedFrameThermal, r, p));
  const Matrix rho = DensityMatrix::pure(squeezed_vacuum_state(space, BasisLabel::EG)).data();
  for (auto _ : state) benchmark::DoNotOptimize(gen.apply(rho));
}
BENCHMARK(BM_MasterStep)->Arg(5)->Arg(10);

void BM_MasterRun(benchmark::State& state) {
  const SystemParams p = fig2c();
  const HilbertSpace space(5);
  ReservoirParams r;
  r.kappa = 1e-3;
  r.gamma = 1e-3;
  r.n_th = 1.0;
  const DissipatorSpec spec = make_dissipator(DissipatorVariant::SqueezedFrameThermal, r, p);
  const Operator h = hamiltonian_squeezed(p, space);
  const DensityMatrix rho0 = DensityMatrix::pure(squeezed_vacuum_state(space, BasisLabel::EG));
  const auto times = uniform_times(60.0, 50);
  for (auto _ : state) benchmark::DoNotOptimize(evolve_master(h, spec, rho0, times));
}
BENCHMARK(BM_MasterRun)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
