#include "tsps/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace tsps {

bool is_finite(const Vec3& v) {
  return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

Vec3 normalized(const Vec3& v, double tol) {
  const double n = norm(v);
  if (!(n > tol)) throw Error(ErrorCode::DegenerateInput, "cannot normalize a near-zero vector");
  return v / n;
}

Vec3 rotate_about_axis(const Vec3& axis, double angle, const Vec3& x) {
  const Vec3 k = normalized(axis);
  const double c = std::cos(angle), s = std::sin(angle);
  return x * c + cross(k, x) * s + k * (dot(k, x) * (1.0 - c));
}

double angle_between(const Vec3& a, const Vec3& b) {
  // atan2 keeps full relative accuracy near 0 and pi, unlike acos of the dot.
  return std::atan2(norm(cross(a, b)), dot(a, b));
}

Plane plane_through_points(const Vec3& p0, const Vec3& p1, const Vec3& p2, double tol) {
  const Vec3 u = p1 - p0, w = p2 - p0;
  const Vec3 c = cross(u, w);
  const double scale = std::max(1.0, norm(u) * norm(w));
  if (!(norm(c) > tol * scale))
    throw Error(ErrorCode::DegenerateInput, "collinear points do not span a plane");
  return Plane{p0, c / norm(c)};
}

Line plane_intersection(const Plane& p1, const Plane& p2, double tol) {
  const Vec3 n1 = p1.unit_normal, n2 = p2.unit_normal;
  const Vec3 d = cross(n1, n2);
  const double dn = norm(d);
  if (!(dn > tol)) throw Error(ErrorCode::ParallelPlanes, "planes are parallel within tolerance");
  // Point with d . x = 0; rows (n1, n2, d) have determinant |d|^2 > 0.
  const double c1 = dot(n1, p1.point), c2 = dot(n2, p2.point);
  const Vec3 point = (cross(n2, d) * c1 + cross(d, n1) * c2) / norm2(d);
  return Line{point, d / dn};
}

Vec3 line_sphere_second_intersection(const Line& line, const Vec3& center, double radius,
                                     const Vec3& known_root, double tol) {
  const Vec3 d = line.unit_direction;
  const double scale = std::max(1.0, radius);
  const Vec3 rel = known_root - line.point;
  if (norm(rel - d * dot(rel, d)) > tol * scale)
    throw Error(ErrorCode::OffSphere, "known root does not lie on the line");
  if (std::abs(dist(known_root, center) - radius) > tol * scale)
    throw Error(ErrorCode::OffSphere, "known root does not lie on the sphere");
  // |p + t d - c|^2 = r^2 has roots t_known and t_other with
  // t_known + t_other = -2 d.(p - c); the Vieta form avoids cancellation.
  const double t_known = dot(rel, d);
  const double t_other = -2.0 * dot(line.point - center, d) - t_known;
  if (std::abs(t_other - t_known) <= tol * scale)
    throw Error(ErrorCode::TangentDegenerate, "line is tangent to the sphere");
  return line.point + d * t_other;
}

double dihedral_angle(const Plane& p1, const Plane& p2) {
  const Vec3 n1 = p1.unit_normal, n2 = p2.unit_normal;
  return std::atan2(norm(cross(n1, n2)), std::abs(dot(n1, n2)));
}

}  // namespace tsps
