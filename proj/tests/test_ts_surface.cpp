#include "tsps/ts_surface.hpp"

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "tsps/discrete_surface.hpp"
#include "tsps/errors.hpp"
#include "tsps/forms.hpp"
#include "tsps/geometry.hpp"
#include "tsps/grid.hpp"
#include "tsps/samples.hpp"
#include "tsps/time_scale.hpp"

using namespace tsps;

namespace {
constexpr double pi = std::numbers::pi;

// Unit-net chart of the standard pseudospherical surface: both parameter
// directions have exact unit speed.
Vec3 pseudosphere(double u, double v) {
  const double xi = u + v;
  const double eta = u - v;
  const double se = 1.0 / std::cosh(xi);
  return Vec3{se * std::cos(eta), se * std::sin(eta), xi - std::tanh(xi)};
}

TimeScaleSurface sampled_pseudosphere(double h) {
  const GridDomain dom = GridDomain::realize(TimeScale::reals(0.25, 1.25),
                                             TimeScale::reals(0.25, 1.25), 0.25, 1.25, 0.25,
                                             1.25, h);
  return TimeScaleSurface::from_grid(VecGrid::sample(dom, pseudosphere));
}
}  // namespace

TEST_CASE("surfaces need a two-by-two window") {
  const GridDomain thin = GridDomain::realize(TimeScale::integers(), TimeScale::integers(), 0.0,
                                              0.0, 0.0, 4.0, 1.0);
  VecGrid g = VecGrid::sample(thin, [](double u, double v) { return Vec3{u, v, 0}; });
  try {
    (void)TimeScaleSurface::from_grid(g);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooSmall);
  }
}

TEST_CASE("the unit-speed chart of the pseudosphere") {
  // both coordinate velocities are exactly 1 in this chart
  const double h = 1e-4;
  for (double u : {0.3, 0.8}) {
    for (double v : {0.4, 1.0}) {
      const Vec3 du = (pseudosphere(u + h, v) - pseudosphere(u - h, v)) / (2 * h);
      const Vec3 dv = (pseudosphere(u, v + h) - pseudosphere(u, v - h)) / (2 * h);
      CHECK(norm(du) == doctest::Approx(1).epsilon(1e-6));
      CHECK(norm(dv) == doctest::Approx(1).epsilon(1e-6));
    }
  }
}

TEST_CASE("sampled smooth net passes verification at sampling accuracy") {
  const TimeScaleSurface s = sampled_pseudosphere(0.01);
  const TsReport rep = verify_ts_chebyshev(s, 0.05);
  CHECK(rep.pass);
  CHECK(rep.worst_unit_res_1 < 0.02);
  CHECK(rep.worst_unit_res_2 < 0.02);
  CHECK(rep.worst_tangency_res_1 < 0.02);
  CHECK(rep.worst_tangency_res_2 < 0.02);
  CHECK(rep.worst_mixed_residual < 1e-7);
  CHECK(rep.rows == s.rows());

  // doubling all positions doubles the tangents and breaks the unit gauge
  VecGrid blown = s.r;
  for (Vec3& p : blown.values) p = 2.0 * p;
  const TsReport bad = verify_ts_chebyshev(TimeScaleSurface::from_grid(blown), 0.05);
  CHECK(!bad.pass);
  CHECK(bad.worst_unit_res_1 == doctest::Approx(1).epsilon(0.05));
}

TEST_CASE("curvature of the sampled pseudosphere converges to -1") {
  const TimeScaleSurface fine = sampled_pseudosphere(0.005);
  std::size_t i = fine.rows() / 2, j = fine.cols() / 2;
  CHECK(ts_gaussian_curvature(fine, i, j) == doctest::Approx(-1).epsilon(3e-2));

  // at least first-order accuracy in the sampling step; the matched point
  // sits on the symmetry diagonal of the chart, where the forward-quotient
  // errors partly cancel and the observed order is two
  const TimeScaleSurface s1 = sampled_pseudosphere(0.02);
  const TimeScaleSurface s2 = sampled_pseudosphere(0.01);
  const double e1 = std::abs(ts_gaussian_curvature(s1, 25, 25) + 1);
  const double e2 = std::abs(ts_gaussian_curvature(s2, 50, 50) + 1);
  CHECK(e1 / e2 > 1.7);
  CHECK(e1 / e2 < 5.0);
}

TEST_CASE("curvature reduces to the unit-net formula") {
  const TimeScaleSurface s = sampled_pseudosphere(0.01);
  for (std::size_t i : {10u, 40u, 70u}) {
    for (std::size_t j : {20u, 55u}) {
      const std::size_t k = s.idx(i, j);
      REQUIRE(s.d1n_ok[k]);
      REQUIRE(s.d2n_ok[k]);
      const double f = dot(s.d1r[k], s.d2r[k]);
      const double prod = dot(s.d1n[k], s.d2r[k]) * dot(s.d2n[k], s.d1r[k]);
      REQUIRE(prod >= 0);
      const double k_surface = ts_gaussian_curvature(s, i, j);
      CHECK(std::abs(k_surface - k_chebyshev(f, std::sqrt(prod))) < 1e-12);
    }
  }
}

TEST_CASE("planar nets over mixed scales are flat") {
  const GridDomain dom = GridDomain::realize(TimeScale::with_pieces({{0.0, 1.0}, {2.0, 2.0}}),
                                             TimeScale::lattice(0.5), 0.0, 2.0, 0.0, 2.0, 0.25);
  const TimeScaleSurface s = TimeScaleSurface::from_grid(
      VecGrid::sample(dom, [](double u, double v) { return Vec3{u, v, 0}; }));
  const TsReport rep = verify_ts_chebyshev(s, 1e-12);
  CHECK(rep.pass);
  CHECK(rep.worst_unit_res_1 == 0);
  CHECK(rep.worst_tangency_res_1 == 0);
  CHECK(ts_gaussian_curvature(s, 1, 1) == 0);
}

TEST_CASE("normals require independent tangents") {
  const GridDomain dom = GridDomain::realize(TimeScale::integers(), TimeScale::integers(), 0.0,
                                             3.0, 0.0, 3.0, 1.0);
  const TimeScaleSurface s = TimeScaleSurface::from_grid(
      VecGrid::sample(dom, [](double u, double v) { return Vec3{u + v, 0, 0}; }));
  try {
    (void)ts_normal(s, 1, 1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateTangents);
  }
  CHECK_THROWS_AS((void)ts_gaussian_curvature(s, 0, 0), Error);

  const TimeScaleSurface ok = TimeScaleSurface::from_grid(
      VecGrid::sample(dom, [](double u, double v) { return Vec3{u, v, 0}; }));
  const Vec3 n = ts_normal(ok, 1, 1);
  CHECK(std::abs(std::abs(n.z) - 1) < 1e-15);
  CHECK_THROWS_AS((void)ts_normal(ok, 3, 1), Error);  // needs forward neighbors
}

TEST_CASE("lattice import reproduces the discrete measurements") {
  const SurfaceMesh mesh = build_from_cauchy(amsler_cauchy_data(pi / 2, 0.1, 8, 8, 0.01));
  const TimeScaleSurface s = TimeScaleSurface::from_mesh(mesh);
  REQUIRE(s.rows() == mesh.rows);
  REQUIRE(s.cols() == mesh.cols);
  for (std::size_t m = 0; m < mesh.rows; ++m)
    for (std::size_t n = 0; n < mesh.cols; ++n)
      CHECK(dist(s.r.at(m, n), mesh.at(m, n)) == 0);

  // unit residuals agree with the edge residuals of the mesh analysis
  const TsReport ts_rep = verify_ts_chebyshev(s, 1e-8);
  const InvariantReport mesh_rep = verify_chebyshev_net(mesh, 1e-8);
  CHECK(ts_rep.pass);
  const double ts_worst = std::max(ts_rep.worst_unit_res_1, ts_rep.worst_unit_res_2);
  CHECK(std::abs(ts_worst - mesh_rep.worst_edge_residual) < 1e-13);
  CHECK(std::abs(std::max(ts_rep.worst_tangency_res_1, ts_rep.worst_tangency_res_2) -
                 mesh_rep.worst_coplanarity) < 1e-13);

  // normals and curvatures agree up to the lattice gap rounding
  for (std::size_t m = 0; m + 2 < mesh.rows; ++m) {
    for (std::size_t n = 0; n + 2 < mesh.cols; ++n) {
      CHECK(dist(ts_normal(s, m, n), discrete_normal(mesh, m, n)) < 1e-13);
      CHECK(std::abs(ts_gaussian_curvature(s, m, n) -
                     discrete_gaussian_curvature(mesh, m, n)) < 1e-14);
    }
  }
}

TEST_CASE("constancy report over an imported net") {
  const SurfaceMesh mesh = build_from_cauchy(amsler_cauchy_data(pi / 2, 0.1, 10, 10, 0.01));
  const TimeScaleSurface s = TimeScaleSurface::from_mesh(mesh);
  const ConjectureReport rep = conjecture_constancy_report(s);
  CHECK(rep.count > 0);
  const double expected = -std::pow(std::sin(0.01) / 0.1, 2);
  CHECK(rep.mean == doctest::Approx(expected).epsilon(1e-8));
  CHECK(rep.max_abs_dev < 1e-10);
  CHECK(rep.stddev < 1e-10);
}

TEST_CASE("constancy report refuses non-net charts") {
  const GridDomain away = GridDomain::realize(TimeScale::reals(0.5, 1.5),
                                              TimeScale::reals(0.0, 1.0), 0.5, 1.5, 0.0, 1.0,
                                              0.05);
  const TimeScaleSurface s =
      TimeScaleSurface::from_grid(tractroid_immersion(away));
  try {
    (void)conjecture_constancy_report(s);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotChebyshevNet);
  }
}
