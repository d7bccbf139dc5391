// Microbenchmarks for the hot paths: bracket expansion, normal-ordered
// operator application, the submodule scan, and one classification cell.
// All timings are of exact rational arithmetic; no approximation anywhere.

#include "hvlie/algebra.hpp"
#include "hvlie/families.hpp"
#include "hvlie/fock.hpp"
#include "hvlie/solver.hpp"

#include <benchmark/benchmark.h>

using namespace hvlie;

namespace {

void bm_bracket_pairs(benchmark::State& state) {
  const std::int64_t R = state.range(0);
  for (auto _ : state) {
    for (std::int64_t m = -R; m <= R; ++m) {
      for (std::int64_t n = -R; n <= R; ++n) {
        benchmark::DoNotOptimize(bracket(BasisSymbol::L(m), BasisSymbol::I(n)));
      }
    }
  }
  state.SetItemsProcessed(state.iterations() * (2 * R + 1) * (2 * R + 1));
}
BENCHMARK(bm_bracket_pairs)->Arg(8)->Arg(32);

void bm_jacobi_residual(benchmark::State& state) {
  AlgebraElement x = AlgebraElement::basis(BasisSymbol::L(-5));
  AlgebraElement y = AlgebraElement::basis(BasisSymbol::I(2));
  AlgebraElement z = AlgebraElement::basis(BasisSymbol::L(3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(jacobi_residual(x, y, z));
  }
}
BENCHMARK(bm_jacobi_residual);

void bm_apply_f(benchmark::State& state) {
  FockVector v = FockVector::term(FockMonomial{{-4, -2, -1}, {-3, -1}}, 1);
  for (auto _ : state) {
    for (std::int64_t m = -3; m <= 3; ++m) {
      benchmark::DoNotOptimize(apply_f(m, 1, v));
    }
  }
  state.SetItemsProcessed(state.iterations() * 7);
}
BENCHMARK(bm_apply_f);

void bm_commutator_residual(benchmark::State& state) {
  FockVector v = FockVector::term(FockMonomial{{-2, -1}, {-1}}, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(commutator_residual_f(3, 1, -3, 1, v));
  }
}
BENCHMARK(bm_commutator_residual);

void bm_submodule_scan(benchmark::State& state) {
  ModuleSpec spec = ModuleSpec::aabc(2, 1, 0);
  const std::int64_t N = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(submodule_scan(spec, N, 3));
  }
}
BENCHMARK(bm_submodule_scan)->Arg(10)->Arg(20);

void bm_build_constraints(benchmark::State& state) {
  VirCase vcase = VirCase::case_i(make_rational(1, 3), 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_constraints(vcase, state.range(0), 2));
  }
}
BENCHMARK(bm_build_constraints)->Arg(8)->Arg(12);

void bm_classify_cell(benchmark::State& state) {
  VirCase vcase = VirCase::case_i(make_rational(1, 3), 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(vcase, 8, 2, 20240817));
  }
}
BENCHMARK(bm_classify_cell)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
