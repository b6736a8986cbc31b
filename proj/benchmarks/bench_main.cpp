#include <benchmark/benchmark.h>

#include "tsps/discrete_surface.hpp"
#include "tsps/forms.hpp"
#include "tsps/grid.hpp"
#include "tsps/samples.hpp"
#include "tsps/time_scale.hpp"
#include "tsps/ts_surface.hpp"

namespace {

void BM_BuildFromCauchy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const tsps::CauchyData data = tsps::amsler_cauchy_data(1.2, 0.1, n, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tsps::build_from_cauchy(data));
  }
  state.SetItemsProcessed(state.iterations() * (n - 1) * (n - 1));
}
BENCHMARK(BM_BuildFromCauchy)->Arg(30)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_InvariantReport(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const tsps::SurfaceMesh mesh = tsps::build_from_cauchy(tsps::amsler_cauchy_data(1.2, 0.1, n, n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tsps::invariant_report(mesh));
  }
}
BENCHMARK(BM_InvariantReport)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_ExtendQuad(benchmark::State& state) {
  const tsps::SurfaceMesh mesh = tsps::build_from_cauchy(tsps::amsler_cauchy_data(1.2, 0.1, 4, 4));
  const tsps::Vec3 r = mesh.at(0, 0), r1 = mesh.at(1, 0), r2 = mesh.at(0, 1);
  const tsps::Plane p1 = mesh.plane_at(1, 0), p2 = mesh.plane_at(0, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tsps::extend_quad(r, r1, r2, p1, p2, mesh.a, 1e-9));
  }
}
BENCHMARK(BM_ExtendQuad);

void BM_SolitonForms(benchmark::State& state) {
  // the window stays left of u + v = 0, where the angle reaches pi
  const tsps::GridDomain dom = tsps::GridDomain::realize(
      tsps::TimeScale::reals(-2.1, -0.1), tsps::TimeScale::reals(-2.1, -0.1), -2.1, -0.1, -2.1,
      -0.1, 2.0 / static_cast<double>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tsps::chebyshev_forms_from_omega(tsps::sample_one_soliton(dom)));
  }
}
BENCHMARK(BM_SolitonForms)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_IntrinsicCurvatureSweep(benchmark::State& state) {
  const tsps::GridDomain dom = tsps::GridDomain::realize(tsps::TimeScale::reals(-2, -0.5),
                                                         tsps::TimeScale::reals(-2, -0.5), -2,
                                                         -0.5, -2, -0.5, 0.01);
  const tsps::FormsField field =
      tsps::chebyshev_forms_from_omega(tsps::sample_one_soliton(dom));
  for (auto _ : state) {
    double acc = 0;
    for (std::size_t i = 2; i + 2 < field.domain.rows(); i += 4) {
      for (std::size_t j = 2; j + 2 < field.domain.cols(); j += 4) {
        acc += tsps::gauss_curvature_intrinsic(field, i, j);
      }
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_IntrinsicCurvatureSweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
