#pragma once

#include <cmath>

#include "tsps/errors.hpp"

namespace tsps {

// Default absolute degeneracy tolerance, calibrated for unit-scale data.
inline constexpr double kGeomTol = 1e-10;

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
  bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm2(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(norm2(v)); }
inline double dist(const Vec3& a, const Vec3& b) { return norm(a - b); }

// det(a, b, c) with the vectors as columns.
inline double triple(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

bool is_finite(const Vec3& v);

// Throws DegenerateInput for a near-zero vector.
Vec3 normalized(const Vec3& v, double tol = kGeomTol);

// Rodrigues rotation of x about the (not necessarily unit) axis.
Vec3 rotate_about_axis(const Vec3& axis, double angle, const Vec3& x);

// Unsigned angle between two nonzero vectors, in [0, pi].
double angle_between(const Vec3& a, const Vec3& b);

struct Plane {
  Vec3 point;
  Vec3 unit_normal;  // |unit_normal| = 1 within 1e-12
};

struct Line {
  Vec3 point;
  Vec3 unit_direction;  // |unit_direction| = 1 within 1e-12
};

inline double signed_plane_distance(const Plane& p, const Vec3& x) {
  return dot(x - p.point, p.unit_normal);
}

// Throws DegenerateInput when the points are collinear within tolerance.
Plane plane_through_points(const Vec3& p0, const Vec3& p1, const Vec3& p2,
                           double tol = kGeomTol);

// Throws ParallelPlanes when |n1 x n2| <= tol.
Line plane_intersection(const Plane& p1, const Plane& p2, double tol = kGeomTol);

// known_root must lie on the line and on the sphere within tol.
// Throws TangentDegenerate when both roots coincide, OffSphere on a bad known_root.
Vec3 line_sphere_second_intersection(const Line& line, const Vec3& center, double radius,
                                     const Vec3& known_root, double tol = kGeomTol);

// Acute angle between two planes, in [0, pi/2]; invariant under normal flips.
double dihedral_angle(const Plane& p1, const Plane& p2);

}  // namespace tsps
