#include <benchmark/benchmark.h>

#include <memory>

#include "rinehart/dual_pair.hpp"
#include "rinehart/presets.hpp"
#include "rinehart/tautological.hpp"

using namespace rinehart;

namespace {

Poly dense_poly(int degree, const Var& a, const Var& b) {
  Poly out = Poly::zero();
  for (int i = 0; i <= degree; ++i) {
    for (int j = 0; j + i <= degree; ++j) {
      out += make_rational(i + 2 * j + 1, i + 1) * Poly::variable(a).pow(i) *
             Poly::variable(b).pow(j);
    }
  }
  return out;
}

void bm_poly_mul(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  Var x = base_var("x"), y = base_var("y");
  Poly lhs = dense_poly(degree, x, y);
  Poly rhs = dense_poly(degree, y, x);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lhs * rhs);
  }
}
BENCHMARK(bm_poly_mul)->Arg(4)->Arg(8)->Arg(16);

void bm_bracket_power_pair(benchmark::State& state) {
  const unsigned k = static_cast<unsigned>(state.range(0));
  auto ctx = std::make_shared<const LieRinehartPresentation>(presets::vect_line());
  Poly e = Poly::variable(fiber_var("e")).pow(k);
  Poly x = Poly::variable(base_var("x")).pow(k);
  for (auto _ : state) {
    // A fresh engine per iteration so memoization does not hide the recursion.
    BracketEngine engine(ctx);
    benchmark::DoNotOptimize(engine.bracket(e, x));
  }
}
BENCHMARK(bm_bracket_power_pair)->Arg(4)->Arg(8)->Arg(12);

void bm_check_axioms_so3(benchmark::State& state) {
  LieRinehartPresentation so3 = presets::so3();
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_axioms(so3).ok());
  }
}
BENCHMARK(bm_check_axioms_so3);

void bm_closure_table(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  DualPairScene scene = DualPairScene::make(2, l);
  for (auto _ : state) {
    benchmark::DoNotOptimize(closure_table(scene).basis.size());
  }
}
BENCHMARK(bm_closure_table)->Arg(1)->Arg(2)->Arg(3);

void bm_sp_isomorphism(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  DualPairScene scene = DualPairScene::make(2, l);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_sp_isomorphism(scene).ok);
  }
}
BENCHMARK(bm_sp_isomorphism)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
