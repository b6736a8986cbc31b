#include "tsps/geometry.hpp"

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "tsps/errors.hpp"

using namespace tsps;

namespace {
constexpr double pi = std::numbers::pi;

bool on_plane(const Plane& p, const Vec3& x, double tol = 1e-12) {
  return std::abs(signed_plane_distance(p, x)) < tol;
}
}  // namespace

TEST_CASE("vector algebra basics") {
  const Vec3 a{1, 2, 3};
  const Vec3 b{-2, 0.5, 4};
  CHECK(dot(a, b) == doctest::Approx(-2 + 1 + 12));
  const Vec3 c = cross(Vec3{1, 0, 0}, Vec3{0, 1, 0});
  CHECK(c.x == 0);
  CHECK(c.y == 0);
  CHECK(c.z == 1);
  CHECK(norm(Vec3{3, 4, 0}) == doctest::Approx(5));
  CHECK(dist(Vec3{1, 1, 1}, Vec3{1, 1, 3}) == doctest::Approx(2));
  CHECK(triple(Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}) == doctest::Approx(1));
  CHECK(triple(Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{1, 1, 0}) == doctest::Approx(0));
}

TEST_CASE("normalized rejects near-zero input") {
  const Vec3 u = normalized(Vec3{0, 0, 2});
  CHECK(u.z == doctest::Approx(1));
  CHECK_THROWS_AS((void)normalized(Vec3{0, 0, 0}), Error);
  try {
    (void)normalized(Vec3{1e-13, 0, 0});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateInput);
  }
}

TEST_CASE("rotation about an axis") {
  const Vec3 r = rotate_about_axis(Vec3{0, 0, 1}, pi / 2, Vec3{1, 0, 0});
  CHECK(std::abs(r.x) < 1e-15);
  CHECK(r.y == doctest::Approx(1));
  CHECK(std::abs(r.z) < 1e-15);

  // rotation preserves length and the axis component
  const Vec3 v{0.3, -1.2, 0.7};
  const Vec3 w = rotate_about_axis(Vec3{1, 1, 1}, 0.9, v);
  CHECK(norm(w) == doctest::Approx(norm(v)).epsilon(1e-14));
  CHECK(dot(w, Vec3{1, 1, 1}) == doctest::Approx(dot(v, Vec3{1, 1, 1})).epsilon(1e-14));
}

TEST_CASE("angle between vectors") {
  CHECK(angle_between(Vec3{1, 0, 0}, Vec3{0, 1, 0}) == doctest::Approx(pi / 2));
  CHECK(angle_between(Vec3{1, 0, 0}, Vec3{2, 0, 0}) == doctest::Approx(0));
  CHECK(angle_between(Vec3{1, 0, 0}, Vec3{-3, 0, 0}) == doctest::Approx(pi));
  CHECK(angle_between(Vec3{1, 0, 0}, Vec3{1, 1, 0}) == doctest::Approx(pi / 4));
}

TEST_CASE("plane through three points") {
  const Plane p = plane_through_points(Vec3{0, 0, 0}, Vec3{1, 0, 0}, Vec3{0, 1, 0});
  CHECK(p.unit_normal.z == doctest::Approx(1));
  CHECK(std::abs(p.unit_normal.x) < 1e-15);
  CHECK(std::abs(p.unit_normal.y) < 1e-15);

  const Plane q = plane_through_points(Vec3{0, 0, 1}, Vec3{1, 0, 1}, Vec3{0, 1, 1});
  CHECK(std::abs(std::abs(q.unit_normal.z) - 1) < 1e-15);
  CHECK(on_plane(q, Vec3{1, 1, 1}));
  CHECK(on_plane(q, Vec3{-7, 3, 1}));

  // every input point lies on the returned plane
  const Vec3 p0{0.4, -1.1, 2.2}, p1{3.0, 0.2, -0.5}, p2{-1.3, 2.8, 0.9};
  const Plane r = plane_through_points(p0, p1, p2);
  CHECK(norm(r.unit_normal) == doctest::Approx(1).epsilon(1e-15));
  CHECK(on_plane(r, p0));
  CHECK(on_plane(r, p1));
  CHECK(on_plane(r, p2));
}

TEST_CASE("plane through collinear points is rejected") {
  try {
    (void)plane_through_points(Vec3{0, 0, 0}, Vec3{1, 1, 1}, Vec3{2, 2, 2});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateInput);
  }
}

TEST_CASE("plane intersection") {
  const Plane z0{Vec3{0, 0, 0}, Vec3{0, 0, 1}};
  const Plane y0{Vec3{0, 0, 0}, Vec3{0, 1, 0}};
  const Line l = plane_intersection(z0, y0);
  CHECK(std::abs(std::abs(l.unit_direction.x) - 1) < 1e-15);
  CHECK(std::abs(l.point.y) < 1e-12);
  CHECK(std::abs(l.point.z) < 1e-12);

  // x = 0 meets x + y = 1 in the vertical line through (0, 1, 0)
  const Plane x0{Vec3{0, 0, 0}, Vec3{1, 0, 0}};
  const Plane diag{Vec3{1, 0, 0}, normalized(Vec3{1, 1, 0})};
  const Line m = plane_intersection(x0, diag);
  CHECK(std::abs(std::abs(m.unit_direction.z) - 1) < 1e-14);
  CHECK(on_plane(x0, m.point));
  CHECK(on_plane(diag, m.point));

  const Plane z1{Vec3{0, 0, 1}, Vec3{0, 0, 1}};
  try {
    (void)plane_intersection(z0, z1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParallelPlanes);
  }
  // anti-parallel normals are parallel planes too
  const Plane z0flip{Vec3{1, 2, 0}, Vec3{0, 0, -1}};
  CHECK_THROWS_AS((void)plane_intersection(z0, z0flip), Error);
}

TEST_CASE("second intersection of a line with a sphere") {
  const Line xaxis{Vec3{0, 0, 0}, Vec3{1, 0, 0}};
  const Vec3 center{0, 1, 0};
  const double r = std::sqrt(2.0);
  const Vec3 other = line_sphere_second_intersection(xaxis, center, r, Vec3{1, 0, 0});
  CHECK(other.x == doctest::Approx(-1).epsilon(1e-14));
  CHECK(std::abs(other.y) < 1e-14);
  CHECK(std::abs(other.z) < 1e-14);
  CHECK(dist(other, center) == doctest::Approx(r).epsilon(1e-14));

  // collinear case: both roots on the axis through the center
  const Vec3 hit = line_sphere_second_intersection(xaxis, Vec3{5, 0, 0}, 1.0, Vec3{4, 0, 0});
  CHECK(hit.x == doctest::Approx(6).epsilon(1e-14));

  // tangency: the known root is the only root
  try {
    (void)line_sphere_second_intersection(xaxis, Vec3{0, 1, 0}, 1.0, Vec3{0, 0, 0});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TangentDegenerate);
  }

  // the known root must actually lie on the sphere
  try {
    (void)line_sphere_second_intersection(xaxis, Vec3{0, 1, 0}, 1.0, Vec3{3, 0, 0});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OffSphere);
  }
}

TEST_CASE("dihedral angle between planes") {
  const Plane z0{Vec3{0, 0, 0}, Vec3{0, 0, 1}};
  const Plane x0{Vec3{0, 0, 0}, Vec3{1, 0, 0}};
  CHECK(dihedral_angle(z0, z0) == doctest::Approx(0));
  CHECK(dihedral_angle(z0, x0) == doctest::Approx(pi / 2));

  const double alpha = 0.3;
  const Plane tilted{Vec3{0, 0, 0}, Vec3{0, std::sin(alpha), std::cos(alpha)}};
  CHECK(dihedral_angle(z0, tilted) == doctest::Approx(alpha).epsilon(1e-12));

  // symmetric, and insensitive to flipping either normal
  CHECK(dihedral_angle(tilted, z0) == doctest::Approx(dihedral_angle(z0, tilted)));
  const Plane tilted_flip{Vec3{0, 0, 0}, Vec3{0, -std::sin(alpha), -std::cos(alpha)}};
  CHECK(dihedral_angle(z0, tilted_flip) == doctest::Approx(alpha).epsilon(1e-12));

  // result stays in [0, pi/2]
  const Plane steep{Vec3{0, 0, 0}, Vec3{0, std::sin(2.8), std::cos(2.8)}};
  const double d = dihedral_angle(z0, steep);
  CHECK(d >= 0);
  CHECK(d <= pi / 2 + 1e-15);
  CHECK(d == doctest::Approx(pi - 2.8).epsilon(1e-12));
}

TEST_CASE("signed plane distance is signed along the normal") {
  const Plane p{Vec3{0, 0, 2}, Vec3{0, 0, 1}};
  CHECK(signed_plane_distance(p, Vec3{5, 5, 3}) == doctest::Approx(1));
  CHECK(signed_plane_distance(p, Vec3{5, 5, 0}) == doctest::Approx(-2));
}
