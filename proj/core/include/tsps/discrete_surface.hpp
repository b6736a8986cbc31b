#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tsps/errors.hpp"
#include "tsps/geometry.hpp"

namespace tsps {

// Two unit-edge polylines through a shared origin, from which a surface is
// propagated quad by quad. Seed tangent planes may be given explicitly (one
// per strip vertex); otherwise they are derived from consecutive strip
// triples, or, when both strips are straight, from their common plane.
struct CauchyData {
  double a = 1;
  std::vector<Vec3> strip1;  // becomes column 0, index m
  std::vector<Vec3> strip2;  // becomes row 0, index n; strip2[0] == strip1[0]
  std::optional<std::vector<Plane>> planes1;
  std::optional<std::vector<Plane>> planes2;
};

// Quad lattice with edge length a and a tangent plane stored per vertex.
// Stored plane normals are unit but not globally orientation-consistent;
// every consumer uses them through |dot| or sign-cancelling expressions.
struct SurfaceMesh {
  double a = 1;
  std::size_t rows = 0, cols = 0;
  std::vector<Vec3> vertices;   // row-major, index m*cols + n
  std::vector<Plane> planes;
  std::vector<char> valid_mask;

  std::size_t idx(std::size_t m, std::size_t n) const { return m * cols + n; }
  const Vec3& at(std::size_t m, std::size_t n) const { return vertices[idx(m, n)]; }
  Vec3& at(std::size_t m, std::size_t n) { return vertices[idx(m, n)]; }
  const Plane& plane_at(std::size_t m, std::size_t n) const { return planes[idx(m, n)]; }
  Plane& plane_at(std::size_t m, std::size_t n) { return planes[idx(m, n)]; }
  bool is_valid(std::size_t m, std::size_t n) const {
    return m < rows && n < cols && valid_mask[idx(m, n)] != 0;
  }
};

// Angles and derived quantities of the quad based at (m,n), viewed as the
// tetrahedron A=(m,n), B=(m+1,n), D=(m,n+1), C=(m+1,n+1). phi is the angle
// at A between AB and AD; psi the angle at D between DA and DC. The lengths,
// area, height (of B over plane ACD) and volume are coordinate-computed;
// theta and K come from the closed forms cos(theta) = tan(phi/2)tan(psi/2)
// and a^2 K = tan^2(phi/2)tan^2(psi/2) - 1. closed_form_rel_dev is the worst
// relative disagreement between the coordinate values and their closed forms.
struct QuadGeometry {
  double a = 0;
  double phi = 0, psi = 0;
  double diag_ac = 0, diag_bd = 0;
  double area_abc = 0;
  double height = 0;
  double volume = 0;
  double theta = 0;
  double K = 0;
  double closed_form_rel_dev = 0;
};

struct InvariantReport {
  double a = 0;
  std::size_t quad_count = 0;
  std::size_t k_count = 0;
  std::size_t degenerate_quads = 0;
  double theta_mean = 0, theta_max_dev = 0;
  double theta_dihedral_max_dev = 0;  // stored-plane dihedrals vs theta_mean
  double cos_relation_max_dev = 0;    // |cos(dihedral) - tan(phi/2)tan(psi/2)|
  double k_mean = 0, k_max_dev = 0;
  double k_relation_residual = 0;     // |k_mean + sin^2(theta_mean)/a^2|
  double a_minus_sin_theta = 0;
  double worst_edge_residual = 0;     // max | |edge|/a - 1 |
  double worst_coplanarity = 0;       // max |Delta_j n . Delta_j r|
  double worst_star_plane_dist = 0;   // star-vs-stored-plane distance / a
  double closed_form_max_rel_dev = 0;
  bool pass = false;
  double tol = 0;
};

struct ExtendResult {
  Vec3 r12;
  double residual;  // | |r12 - r2| - a |
};

// Unit normal along (T1 r - r) x (T2 r - r).
Vec3 discrete_normal(const SurfaceMesh& mesh, std::size_t m, std::size_t n);

// (|Delta_1 n . Delta_1 r|, |Delta_2 n . Delta_2 r|) at (m,n), with
// Delta_j = (T_j - 1)/a. Both vanish exactly when every vertex star is
// planar. Needs the forward-2 box of (m,n).
std::pair<double, double> coplanarity_residual(const SurfaceMesh& mesh, std::size_t m,
                                               std::size_t n);

// Completes the quad over base r with neighbors r1, r2 and their tangent
// planes: r12 is the second intersection of the line plane1 ^ plane2 with the
// sphere of radius a about r1, the first being r. Coincident planes complete
// the planar rhombus instead. The returned residual | |r12 - r2| - a | is
// checked against tol*a.
ExtendResult extend_quad(const Vec3& r, const Vec3& r1, const Vec3& r2, const Plane& plane1,
                         const Plane& plane2, double a, double tol);

// Propagates the surface from Cauchy data, quad by quad in lexicographic
// order, carrying tangent planes. Default tolerance is 1e-9 on a-normalized
// residuals (construction runs with a rescaled to 1 internally).
SurfaceMesh build_from_cauchy(const CauchyData& data, double tol = 1e-9);

QuadGeometry quad_geometry(const SurfaceMesh& mesh, std::size_t m, std::size_t n);

// - (Delta_1 n . Delta_2 r)(Delta_2 n . Delta_1 r) / (1 - (Delta_1 r . Delta_2 r)^2),
// attached to the quad's base vertex (m,n).
double discrete_gaussian_curvature(const SurfaceMesh& mesh, std::size_t m, std::size_t n);

// Aggregates edge, coplanarity, theta and K statistics; pass gates on edge
// and coplanarity residuals alone.
InvariantReport verify_chebyshev_net(const SurfaceMesh& mesh, double tol);

InvariantReport invariant_report(const SurfaceMesh& mesh);

}  // namespace tsps
