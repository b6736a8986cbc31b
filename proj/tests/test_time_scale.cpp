#include "tsps/time_scale.hpp"

#include <cmath>
#include <vector>

#include "doctest.h"
#include "tsps/errors.hpp"

using namespace tsps;

namespace {
const double kTol = 1e-10;
}

TEST_CASE("jump operators on the integers") {
  const TimeScale z = TimeScale::integers();
  CHECK(z.contains(3.0));
  CHECK(z.contains(-17.0));
  CHECK(!z.contains(0.5));
  CHECK(sigma(z, 3.0).value == 4.0);
  CHECK(rho(z, 3.0).value == 2.0);
  CHECK(sigma(z, -5.0).value == -4.0);
  CHECK(!sigma(z, 3.0).hit_boundary);

  const PointClass c = classify(z, 0.0);
  CHECK(c.isolated());
  CHECK(!c.dense());
  CHECK(!c.right_boundary);
  CHECK(!c.left_boundary);
}

TEST_CASE("jump operators on [0,1] union {2}") {
  const TimeScale ts = TimeScale::with_pieces({{0.0, 1.0}, {2.0, 2.0}});

  CHECK(sigma(ts, 0.5).value == 0.5);  // right-dense
  CHECK(sigma(ts, 1.0).value == 2.0);  // right-scattered
  CHECK(rho(ts, 2.0).value == 1.0);
  CHECK(rho(ts, 0.5).value == 0.5);
  CHECK(rho(ts, 0.0).value == 0.0);
  CHECK(rho(ts, 0.0).hit_boundary);
  CHECK(sigma(ts, 2.0).value == 2.0);
  CHECK(sigma(ts, 2.0).hit_boundary);

  const PointClass at1 = classify(ts, 1.0);
  CHECK(at1.right_scattered);
  CHECK(!at1.left_scattered);

  const PointClass at2 = classify(ts, 2.0);
  CHECK(at2.isolated());
  CHECK(at2.right_boundary);
  CHECK(!at2.left_boundary);

  const PointClass at0 = classify(ts, 0.0);
  CHECK(at0.left_boundary);
  CHECK(!at0.right_scattered);

  const PointClass mid = classify(ts, 0.25);
  CHECK(mid.dense());
  CHECK(mid.label() == "dense");

  CHECK_THROWS_AS((void)sigma(ts, 1.5), Error);
  try {
    (void)classify(ts, 1.5);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInScale);
  }
}

TEST_CASE("galois identities between sigma and rho") {
  const TimeScale ts = TimeScale::with_pieces({{0.0, 1.0}, {2.0, 2.0}, {3.0, 4.0}});
  const std::vector<double> pts = {0.0, 0.25, 1.0, 2.0, 3.0, 3.5, 4.0};
  for (double t : pts) {
    const double s = sigma(ts, t).value;
    const double r = rho(ts, t).value;
    CHECK(sigma(ts, rho(ts, s).value).value == s);
    CHECK(rho(ts, sigma(ts, r).value).value == r);
  }
}

TEST_CASE("delta derivative is an exact quotient at scattered points") {
  const TimeScale z = TimeScale::integers();
  auto sq = [](double t) { return t * t; };
  // (sigma(t)^2 - t^2) / mu = 2t + 1, no rounding: quotient by exactly 1
  CHECK(delta_derivative(z, sq, 3.0, kTol) == 7.0);
  CHECK(delta_derivative(z, sq, 0.0, kTol) == 1.0);
  CHECK(delta_derivative(z, sq, -4.0, kTol) == -7.0);

  // geometric scale: D(t^2)(1) = (4 - 1)/(2 - 1) = 3 exactly
  const TimeScale q = TimeScale::isolated_points({0.25, 0.5, 1.0, 2.0, 4.0});
  CHECK(delta_derivative(q, sq, 1.0, kTol) == 3.0);
  CHECK(delta_derivative(q, sq, 0.5, kTol) == 1.5);
}

TEST_CASE("delta derivative converges at dense points") {
  const TimeScale ts = TimeScale::reals(0.0, 1.0);
  auto sq = [](double t) { return t * t; };
  CHECK(delta_derivative(ts, sq, 0.5, kTol) == doctest::Approx(1.0).epsilon(1e-9));

  auto cube = [](double t) { return t * t * t; };
  CHECK(delta_derivative(ts, cube, 0.25, kTol) == doctest::Approx(0.1875).epsilon(1e-8));

  auto s = [](double t) { return std::sin(t); };
  CHECK(delta_derivative(ts, s, 0.3, kTol) == doctest::Approx(std::cos(0.3)).epsilon(1e-8));

  // at the right-dense point 1 of [0,1] u {2}, sigma jumps but the point is
  // right-scattered, so the quotient is exact
  const TimeScale mixed = TimeScale::with_pieces({{0.0, 1.0}, {2.0, 2.0}});
  CHECK(delta_derivative(mixed, sq, 1.0, kTol) == 3.0);
}

TEST_CASE("nabla derivative mirrors delta") {
  const TimeScale z = TimeScale::integers();
  auto sq = [](double t) { return t * t; };
  CHECK(nabla_derivative(z, sq, 3.0, kTol) == 5.0);

  const TimeScale ts = TimeScale::reals(0.0, 1.0);
  CHECK(nabla_derivative(ts, sq, 0.5, kTol) == doctest::Approx(1.0).epsilon(1e-9));

  const TimeScale mixed = TimeScale::with_pieces({{0.0, 1.0}, {2.0, 2.0}});
  auto ident = [](double t) { return t; };
  CHECK(nabla_derivative(mixed, ident, 2.0, kTol) == 1.0);
}

TEST_CASE("derivatives at boundary points are rejected") {
  const TimeScale ts = TimeScale::isolated_points({0.0, 1.0, 2.0});
  auto sq = [](double t) { return t * t; };
  CHECK(delta_derivative(ts, sq, 1.0, kTol) == 3.0);
  try {
    (void)delta_derivative(ts, sq, 2.0, kTol);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BoundaryPoint);
  }
  try {
    (void)nabla_derivative(ts, sq, 0.0, kTol);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BoundaryPoint);
  }
  CHECK_THROWS_AS((void)delta_derivative(ts, sq, 0.5, kTol), Error);
}

TEST_CASE("lattice scale is periodic and exact") {
  const TimeScale lat = TimeScale::lattice(0.1);
  CHECK(lat.contains(0.1 * 7));
  CHECK(lat.contains(-0.1 * 3));
  CHECK(sigma(lat, 0.1 * 7).value == 0.1 * 8);
  CHECK(rho(lat, 0.0).value == -0.1);

  auto sq = [](double t) { return t * t; };
  const double t0 = 0.1 * 4;
  const double t1 = 0.1 * 5;
  CHECK(delta_derivative(lat, sq, t0, kTol) == (t1 * t1 - t0 * t0) / (t1 - t0));

  const TimeScale z = TimeScale::integers();
  CHECK(z.contains(-1000000.0));
  CHECK(sigma(z, -1000000.0).value == -999999.0);
}

TEST_CASE("realize_axis emits scattered points exactly") {
  const TimeScale ts = TimeScale::with_pieces({{0.0, 1.0}, {2.0, 2.0}});
  const std::vector<double> pts = realize_axis(ts, 0.0, 2.0, 0.25);
  REQUIRE(pts.size() == 6);
  CHECK(pts[0] == 0.0);
  CHECK(pts[1] == 0.25);
  CHECK(pts[4] == 1.0);
  CHECK(pts[5] == 2.0);
  for (std::size_t k = 1; k < pts.size(); ++k) CHECK(pts[k] > pts[k - 1]);

  // isolated points appear regardless of the step
  const std::vector<double> coarse = realize_axis(ts, 0.0, 2.0, 10.0);
  CHECK(coarse.front() == 0.0);
  CHECK(coarse.back() == 2.0);

  const std::vector<double> lat = realize_axis(TimeScale::lattice(0.1), 0.0, 0.5, 0.01);
  REQUIRE(lat.size() == 6);
  for (int k = 0; k < 6; ++k) CHECK(lat[static_cast<std::size_t>(k)] == k * 0.1);
}

TEST_CASE("point class labels") {
  const TimeScale ts = TimeScale::with_pieces({{0.0, 1.0}, {2.0, 2.0}});
  CHECK(classify(ts, 0.5).label() == "dense");
  CHECK(classify(ts, 1.0).label().find("right-scattered") != std::string::npos);
  CHECK(classify(ts, 2.0).label().find("isolated") != std::string::npos);
  CHECK(classify(TimeScale::integers(), 5.0).label().find("isolated") != std::string::npos);
}
