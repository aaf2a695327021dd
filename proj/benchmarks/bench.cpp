#include "stci/construct.hpp"
#include "stci/curve.hpp"
#include "stci/field.hpp"
#include "stci/oracle.hpp"
#include "stci/radical.hpp"
#include "stci/text.hpp"

#include <benchmark/benchmark.h>

using namespace stci;

static void BM_derive_and_construct(benchmark::State& state) {
  for (auto _ : state) {
    ProjectiveCurveParams cp = derive_params(70, 66, 15);
    DefiningSystem sys = defining_triple(cp, TripleVariant::minors);
    benchmark::DoNotOptimize(sys);
  }
}
BENCHMARK(BM_derive_and_construct);

static void BM_symbolic_vanishing(benchmark::State& state) {
  ProjectiveCurveParams cp = derive_params(437, 281, 99);
  DefiningSystem sys = defining_triple(cp, TripleVariant::binomials);
  for (auto _ : state)
    for (const auto& member : sys.members)
      benchmark::DoNotOptimize(symbolic_vanishes_on_curve(member, cp));
}
BENCHMARK(BM_symbolic_vanishing);

static void BM_projective_variety_f7(benchmark::State& state) {
  ProjectiveCurveParams cp = derive_params(4, 3, 1);
  DefiningSystem sys = defining_triple(cp, TripleVariant::binomials);
  FieldHandle f7 = FieldHandle::build(7, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(projective_variety(sys.members, f7));
}
BENCHMARK(BM_projective_variety_f7);

static void BM_curve_points_escalation(benchmark::State& state) {
  ProjectiveCurveParams cp = derive_params(5, 3, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(curve_points(cp, 7, state.range(0)));
}
BENCHMARK(BM_curve_points_escalation)->Arg(1)->Arg(2)->Arg(3);

static void BM_classify_form(benchmark::State& state) {
  MonomialMatrix a =
      parse_matrix(VariableSet::letters(4), "a^3,b,c;b*c,d,a^2");
  for (auto _ : state) benchmark::DoNotOptimize(classify_form(a));
}
BENCHMARK(BM_classify_form);

BENCHMARK_MAIN();
