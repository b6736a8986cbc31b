#include "tsps/discrete_surface.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tsps {
namespace {

// Construction runs on origin-shifted, a-normalized coordinates in extended
// precision; results are rescaled once at the end.
struct V3 {
  long double x = 0, y = 0, z = 0;
};

V3 operator+(V3 a, V3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
V3 operator-(V3 a, V3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
V3 operator*(long double s, V3 a) { return {s * a.x, s * a.y, s * a.z}; }
long double dotl(V3 a, V3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
V3 crossl(V3 a, V3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
long double norml(V3 a) { return std::sqrt(dotl(a, a)); }

struct Frame {
  Vec3 origin;
  double a;
  V3 in(const Vec3& p) const {
    return {(static_cast<long double>(p.x) - origin.x) / a,
            (static_cast<long double>(p.y) - origin.y) / a,
            (static_cast<long double>(p.z) - origin.z) / a};
  }
  Vec3 out(V3 w) const {
    return {static_cast<double>(origin.x + a * w.x), static_cast<double>(origin.y + a * w.y),
            static_cast<double>(origin.z + a * w.z)};
  }
  Vec3 out_dir(V3 w) const {
    return {static_cast<double>(w.x), static_cast<double>(w.y), static_cast<double>(w.z)};
  }
};

V3 unitl(V3 v, const char* what) {
  const long double len = norml(v);
  if (!(len > 1e-12)) {
    throw Error(ErrorCode::DegenerateInput, std::string(what) + ": zero direction");
  }
  return (1.0L / len) * v;
}

[[noreturn]] void invalid(const std::string& msg) {
  throw Error(ErrorCode::InvalidCauchyData, msg);
}

// Strip shape: every consecutive edge triple classified as collinear or not.
enum class StripShape { Straight, Curved, Mixed };

StripShape strip_shape(const std::vector<V3>& w) {
  bool any_col = false, any_curved = false;
  for (std::size_t k = 0; k + 2 < w.size(); ++k) {
    const V3 u = w[k + 1] - w[k];
    const V3 v = w[k + 2] - w[k + 1];
    if (norml(crossl(u, v)) <= 1e-12) {
      any_col = true;
    } else {
      any_curved = true;
    }
  }
  if (any_curved && any_col) return StripShape::Mixed;
  return any_curved ? StripShape::Curved : StripShape::Straight;
}

}  // namespace

Vec3 discrete_normal(const SurfaceMesh& mesh, std::size_t m, std::size_t n) {
  if (m + 1 >= mesh.rows || n + 1 >= mesh.cols || !mesh.is_valid(m, n) ||
      !mesh.is_valid(m + 1, n) || !mesh.is_valid(m, n + 1)) {
    throw Error(ErrorCode::BoundaryIndex, "discrete normal needs the forward star")
        .at_index(m, n);
  }
  const Vec3 e1 = mesh.at(m + 1, n) - mesh.at(m, n);
  const Vec3 e2 = mesh.at(m, n + 1) - mesh.at(m, n);
  const Vec3 c = cross(e1, e2);
  const double len = norm(c);
  if (len <= 1e-12 * std::max(norm(e1) * norm(e2), 1e-300)) {
    throw Error(ErrorCode::DegenerateTangents, "lattice tangents are parallel").at_index(m, n);
  }
  return c / len;
}

std::pair<double, double> coplanarity_residual(const SurfaceMesh& mesh, std::size_t m,
                                               std::size_t n) {
  if (m + 2 >= mesh.rows || n + 2 >= mesh.cols) {
    throw Error(ErrorCode::BoundaryIndex, "coplanarity residual needs the forward-2 box")
        .at_index(m, n);
  }
  const Vec3 n00 = discrete_normal(mesh, m, n);
  const Vec3 n10 = discrete_normal(mesh, m + 1, n);
  const Vec3 n01 = discrete_normal(mesh, m, n + 1);
  const double a = mesh.a;
  const Vec3 d1r = (mesh.at(m + 1, n) - mesh.at(m, n)) / a;
  const Vec3 d2r = (mesh.at(m, n + 1) - mesh.at(m, n)) / a;
  const Vec3 d1n = (n10 - n00) / a;
  const Vec3 d2n = (n01 - n00) / a;
  return {std::abs(dot(d1n, d1r)), std::abs(dot(d2n, d2r))};
}

ExtendResult extend_quad(const Vec3& r, const Vec3& r1, const Vec3& r2, const Plane& plane1,
                         const Plane& plane2, double a, double tol) {
  if (!(a > 0) || !is_finite(r) || !is_finite(r1) || !is_finite(r2)) {
    throw Error(ErrorCode::DegenerateInput, "extend_quad: bad inputs");
  }
  const double tol_len = tol * a;

  const Vec3 c = cross(plane1.unit_normal, plane2.unit_normal);
  if (norm(c) <= 1e-12) {
    if (std::abs(signed_plane_distance(plane1, plane2.point)) > tol_len) {
      throw Error(ErrorCode::ParallelPlanes, "tangent planes are parallel and distinct");
    }
    // Coincident tangent planes: the quad closes as a planar rhombus.
    if (std::abs(signed_plane_distance(plane1, r)) > tol_len ||
        std::abs(dist(r, r1) - a) > tol_len || std::abs(dist(r, r2) - a) > tol_len) {
      throw Error(ErrorCode::ConsistencyViolation, "extend_quad preconditions violated");
    }
    const Vec3 r12 = r1 + r2 - r;
    const double residual = std::abs(dist(r12, r2) - a);
    if (residual > tol_len) {
      throw Error(ErrorCode::ConsistencyViolation, "flat completion residual exceeds tolerance");
    }
    return {r12, residual};
  }

  if (std::abs(signed_plane_distance(plane1, r)) > tol_len ||
      std::abs(signed_plane_distance(plane2, r)) > tol_len ||
      std::abs(dist(r, r1) - a) > tol_len || std::abs(dist(r, r2) - a) > tol_len) {
    throw Error(ErrorCode::ConsistencyViolation, "extend_quad preconditions violated");
  }

  // r lies on both planes, so their intersection line passes through it.
  const Line line{r, c / norm(c)};
  const Vec3 r12 = line_sphere_second_intersection(line, r1, a, r, tol);
  const double residual = std::abs(dist(r12, r2) - a);
  if (residual > tol_len) {
    throw Error(ErrorCode::ConsistencyViolation,
                "completion misses the second sphere by " + std::to_string(residual));
  }
  return {r12, residual};
}

SurfaceMesh build_from_cauchy(const CauchyData& data, double tol) {
  const std::size_t rows = data.strip1.size();
  const std::size_t cols = data.strip2.size();
  if (!(data.a > 0) || !std::isfinite(data.a)) invalid("mesh size a must be positive");
  if (rows < 2 || cols < 2) invalid("each strip needs at least two points");
  for (const Vec3& p : data.strip1) {
    if (!is_finite(p)) invalid("strip1 has a non-finite point");
  }
  for (const Vec3& p : data.strip2) {
    if (!is_finite(p)) invalid("strip2 has a non-finite point");
  }
  if (dist(data.strip1[0], data.strip2[0]) > 1e-12 * data.a) {
    invalid("strips do not share their first vertex");
  }

  const Frame frame{data.strip1[0], data.a};
  std::vector<V3> s1(rows), s2(cols);
  for (std::size_t m = 0; m < rows; ++m) s1[m] = frame.in(data.strip1[m]);
  for (std::size_t n = 0; n < cols; ++n) s2[n] = frame.in(data.strip2[n]);

  for (std::size_t m = 0; m + 1 < rows; ++m) {
    if (std::abs(static_cast<double>(norml(s1[m + 1] - s1[m])) - 1) > 1e-12) {
      invalid("strip1 edge length deviates from a at segment " + std::to_string(m));
    }
  }
  for (std::size_t n = 0; n + 1 < cols; ++n) {
    if (std::abs(static_cast<double>(norml(s2[n + 1] - s2[n])) - 1) > 1e-12) {
      invalid("strip2 edge length deviates from a at segment " + std::to_string(n));
    }
  }
  const V3 e1 = s1[1];
  const V3 e2 = s2[1];
  if (norml(crossl(e1, e2)) <= 1e-12) invalid("first strip edges are collinear");

  std::vector<V3> pos(rows * cols), nrm(rows * cols);
  auto id = [cols](std::size_t m, std::size_t n) { return m * cols + n; };
  for (std::size_t m = 0; m < rows; ++m) pos[id(m, 0)] = s1[m];
  for (std::size_t n = 0; n < cols; ++n) pos[id(0, n)] = s2[n];

  // Seed tangent-plane normals along both strips.
  if (data.planes1.has_value() != data.planes2.has_value()) {
    invalid("explicit seed planes must be given for both strips or neither");
  }
  if (data.planes1) {
    if (data.planes1->size() != rows || data.planes2->size() != cols) {
      invalid("seed plane counts must match strip lengths");
    }
    auto seed = [&](const std::vector<Plane>& planes, const std::vector<V3>& s, bool first) {
      for (std::size_t k = 0; k < planes.size(); ++k) {
        const Vec3 nd = planes[k].unit_normal;
        V3 n = unitl(V3{nd.x, nd.y, nd.z}, "seed plane normal");
        if (k > 0 && std::abs(static_cast<double>(dotl(n, s[k - 1] - s[k]))) > tol) {
          invalid("seed plane misses its backward strip neighbor");
        }
        if (k + 1 < s.size() && std::abs(static_cast<double>(dotl(n, s[k + 1] - s[k]))) > tol) {
          invalid("seed plane misses its forward strip neighbor");
        }
        nrm[first ? id(k, 0) : id(0, k)] = n;
      }
    };
    seed(*data.planes1, s1, true);
    const V3 n1 = nrm[id(0, 0)];
    seed(*data.planes2, s2, false);
    if (norml(crossl(n1, nrm[id(0, 0)])) > std::max(tol, 1e-12)) {
      invalid("the two seed planes at the origin disagree");
    }
    if (std::abs(static_cast<double>(dotl(n1, e1))) > tol ||
        std::abs(static_cast<double>(dotl(n1, e2))) > tol) {
      invalid("origin seed plane misses a first strip edge");
    }
    nrm[id(0, 0)] = n1;
  } else {
    const StripShape sh1 = strip_shape(s1);
    const StripShape sh2 = strip_shape(s2);
    if (sh1 == StripShape::Mixed || sh2 == StripShape::Mixed) {
      invalid("strip has collinear interior triples; supply explicit seed planes");
    }
    if (sh1 == StripShape::Straight && sh2 == StripShape::Straight) {
      const V3 n0 = unitl(crossl(e1, e2), "common strip plane");
      for (std::size_t m = 0; m < rows; ++m) nrm[id(m, 0)] = n0;
      for (std::size_t n = 0; n < cols; ++n) nrm[id(0, n)] = n0;
    } else if (sh1 == StripShape::Curved && sh2 == StripShape::Curved) {
      auto seed_triples = [&](const std::vector<V3>& s, bool first) {
        for (std::size_t k = 1; k + 1 < s.size(); ++k) {
          const V3 n = unitl(crossl(s[k] - s[k - 1], s[k + 1] - s[k]), "strip triple");
          nrm[first ? id(k, 0) : id(0, k)] = n;
        }
        // The plane through the last three points also contains the end
        // vertex and its backward edge; reuse it there.
        const std::size_t last = s.size() - 1;
        nrm[first ? id(last, 0) : id(0, last)] = nrm[first ? id(last - 1, 0) : id(0, last - 1)];
      };
      seed_triples(s1, true);
      seed_triples(s2, false);
      nrm[id(0, 0)] = unitl(crossl(e1, e2), "origin plane");
    } else {
      invalid("a straight strip paired with a curved one needs explicit seed planes");
    }
  }

  // Quad-by-quad propagation: the new vertex lies on the intersection line of
  // the tangent planes at its two predecessors; that line passes through the
  // quad's base vertex, and both unit-distance conditions give the same
  // parameter on consistent data, so their mean is used.
  for (std::size_t m = 1; m < rows; ++m) {
    for (std::size_t n = 1; n < cols; ++n) {
      const V3 A = pos[id(m - 1, n - 1)];
      const V3 B = pos[id(m, n - 1)];
      const V3 D = pos[id(m - 1, n)];
      const V3 nB = nrm[id(m, n - 1)];
      const V3 nD = nrm[id(m - 1, n)];

      V3 C;
      const V3 cr = crossl(nB, nD);
      const long double cl = norml(cr);
      if (cl <= 1e-12) {
        C = B + D - A;
      } else {
        const V3 d = (1.0L / cl) * cr;
        const long double tb = 2.0L * dotl(d, B - A);
        const long double td = 2.0L * dotl(d, D - A);
        const long double t = 0.5L * (tb + td);
        if (std::abs(static_cast<double>(t)) <= tol) {
          throw Error(ErrorCode::TangentDegenerate, "completion collapses onto the base vertex")
              .at_index(m, n);
        }
        C = A + t * d;
      }

      const double res = std::max(std::abs(static_cast<double>(norml(C - B)) - 1),
                                  std::abs(static_cast<double>(norml(C - D)) - 1));
      if (res > tol) {
        throw Error(ErrorCode::ConsistencyViolation,
                    "quad residual " + std::to_string(res) + " exceeds tolerance")
            .at_index(m, n);
      }
      pos[id(m, n)] = C;
      nrm[id(m, n)] = unitl(crossl(B - C, D - C), "new tangent plane");
    }
  }

  SurfaceMesh mesh;
  mesh.a = data.a;
  mesh.rows = rows;
  mesh.cols = cols;
  mesh.vertices.resize(rows * cols);
  mesh.planes.resize(rows * cols);
  mesh.valid_mask.assign(rows * cols, 1);
  for (std::size_t k = 0; k < rows * cols; ++k) {
    mesh.vertices[k] = frame.out(pos[k]);
    mesh.planes[k] = Plane{mesh.vertices[k], frame.out_dir(nrm[k])};
  }

  if (rows >= 3 && cols >= 3) {
    const InvariantReport rep = verify_chebyshev_net(mesh, tol);
    if (!rep.pass) {
      throw Error(ErrorCode::ConsistencyViolation,
                  "built mesh fails verification: worst edge " +
                      std::to_string(rep.worst_edge_residual) + ", worst coplanarity " +
                      std::to_string(rep.worst_coplanarity));
    }
  }
  return mesh;
}

QuadGeometry quad_geometry(const SurfaceMesh& mesh, std::size_t m, std::size_t n) {
  if (m + 1 >= mesh.rows || n + 1 >= mesh.cols || !mesh.is_valid(m, n) ||
      !mesh.is_valid(m + 1, n) || !mesh.is_valid(m, n + 1) || !mesh.is_valid(m + 1, n + 1)) {
    throw Error(ErrorCode::BoundaryIndex, "quad is not fully built").at_index(m, n);
  }
  const Vec3 A = mesh.at(m, n);
  const Vec3 B = mesh.at(m + 1, n);
  const Vec3 D = mesh.at(m, n + 1);
  const Vec3 C = mesh.at(m + 1, n + 1);
  const double a = mesh.a;

  QuadGeometry q;
  q.a = a;
  q.phi = angle_between(B - A, D - A);
  q.psi = angle_between(A - D, C - D);
  const double sin_psi = std::sin(q.psi);
  if (sin_psi <= 1e-12) {
    throw Error(ErrorCode::DegenerateTetrahedron, "quad edges collinear at D").at_index(m, n);
  }
  const double radicand2 = std::cos(q.phi) + std::cos(q.psi);
  if (radicand2 < -1e-12) {
    throw Error(ErrorCode::DegenerateTetrahedron, "tetrahedron not realizable").at_index(m, n);
  }

  q.diag_ac = dist(A, C);
  q.diag_bd = dist(B, D);
  q.area_abc = 0.5 * norm(cross(B - A, C - A));
  const double det = triple(B - A, C - A, D - A);
  q.volume = std::abs(det) / 6;
  q.height = std::abs(det) / (a * a * sin_psi);

  const double t = std::tan(q.phi / 2) * std::tan(q.psi / 2);
  q.theta = std::acos(std::clamp(t, -1.0, 1.0));
  q.K = (t * t - 1) / (a * a);

  const double cf_ac = 2 * a * std::sin(q.psi / 2);
  const double cf_bd = 2 * a * std::sin(q.phi / 2);
  const double cf_area = 0.5 * a * a * std::sin(q.psi);
  const double cf_det =
      4 * a * a * a * std::sin(q.phi / 2) * std::sin(q.psi / 2) * std::sqrt(std::max(radicand2, 0.0) / 2);
  const double cf_height = cf_det / (a * a * sin_psi);

  auto rel = [](double x, double y, double scale) {
    return std::abs(x - y) / std::max({std::abs(x), std::abs(y), 1e-12 * scale});
  };
  q.closed_form_rel_dev =
      std::max({rel(q.diag_ac, cf_ac, a), rel(q.diag_bd, cf_bd, a), rel(q.area_abc, cf_area, a * a),
                rel(std::abs(det), cf_det, a * a * a), rel(q.height, cf_height, a)});
  return q;
}

double discrete_gaussian_curvature(const SurfaceMesh& mesh, std::size_t m, std::size_t n) {
  if (m + 2 >= mesh.rows || n + 2 >= mesh.cols) {
    throw Error(ErrorCode::BoundaryIndex, "curvature needs the forward-2 box").at_index(m, n);
  }
  const Vec3 n00 = discrete_normal(mesh, m, n);
  const Vec3 n10 = discrete_normal(mesh, m + 1, n);
  const Vec3 n01 = discrete_normal(mesh, m, n + 1);
  const double a = mesh.a;
  const Vec3 d1r = (mesh.at(m + 1, n) - mesh.at(m, n)) / a;
  const Vec3 d2r = (mesh.at(m, n + 1) - mesh.at(m, n)) / a;
  const Vec3 d1n = (n10 - n00) / a;
  const Vec3 d2n = (n01 - n00) / a;
  const double f = dot(d1r, d2r);
  const double denom = 1 - f * f;
  if (denom <= 1e-12) {
    throw Error(ErrorCode::DegenerateTangents, "lattice tangents nearly parallel").at_index(m, n);
  }
  return -(dot(d1n, d2r) * dot(d2n, d1r)) / denom;
}

namespace {

InvariantReport analyze(const SurfaceMesh& mesh, double tol) {
  if (mesh.rows < 3 || mesh.cols < 3) {
    throw Error(ErrorCode::TooSmall, "analysis needs at least a 3x3 mesh");
  }
  InvariantReport rep;
  rep.a = mesh.a;
  rep.tol = tol;
  const double a = mesh.a;

  for (std::size_t m = 0; m < mesh.rows; ++m) {
    for (std::size_t n = 0; n < mesh.cols; ++n) {
      if (!mesh.is_valid(m, n)) continue;
      if (m + 1 < mesh.rows && mesh.is_valid(m + 1, n)) {
        rep.worst_edge_residual = std::max(
            rep.worst_edge_residual, std::abs(dist(mesh.at(m + 1, n), mesh.at(m, n)) / a - 1));
      }
      if (n + 1 < mesh.cols && mesh.is_valid(m, n + 1)) {
        rep.worst_edge_residual = std::max(
            rep.worst_edge_residual, std::abs(dist(mesh.at(m, n + 1), mesh.at(m, n)) / a - 1));
      }
      const Plane& pl = mesh.plane_at(m, n);
      const std::size_t nb[4][2] = {{m + 1, n}, {m, n + 1}, {m - 1, n}, {m, n - 1}};
      for (const auto& kk : nb) {
        if (kk[0] >= mesh.rows || kk[1] >= mesh.cols || !mesh.is_valid(kk[0], kk[1])) continue;
        rep.worst_star_plane_dist =
            std::max(rep.worst_star_plane_dist,
                     std::abs(signed_plane_distance(pl, mesh.at(kk[0], kk[1]))) / a);
      }
    }
  }

  std::vector<double> thetas, dihedrals, ks;
  for (std::size_t m = 0; m + 1 < mesh.rows; ++m) {
    for (std::size_t n = 0; n + 1 < mesh.cols; ++n) {
      if (!mesh.is_valid(m, n) || !mesh.is_valid(m + 1, n) || !mesh.is_valid(m, n + 1) ||
          !mesh.is_valid(m + 1, n + 1)) {
        continue;
      }
      try {
        const QuadGeometry q = quad_geometry(mesh, m, n);
        thetas.push_back(q.theta);
        rep.closed_form_max_rel_dev = std::max(rep.closed_form_max_rel_dev, q.closed_form_rel_dev);
        const double t = std::cos(q.theta);
        const double d1 = dihedral_angle(mesh.plane_at(m, n), mesh.plane_at(m + 1, n));
        const double d2 = dihedral_angle(mesh.plane_at(m, n), mesh.plane_at(m, n + 1));
        dihedrals.push_back(d1);
        dihedrals.push_back(d2);
        rep.cos_relation_max_dev = std::max(
            {rep.cos_relation_max_dev, std::abs(std::cos(d1) - t), std::abs(std::cos(d2) - t)});
      } catch (const Error& e) {
        if (e.code() == ErrorCode::DegenerateTetrahedron) {
          ++rep.degenerate_quads;
          continue;
        }
        throw;
      }
      if (m + 2 < mesh.rows && n + 2 < mesh.cols) {
        try {
          const auto cr = coplanarity_residual(mesh, m, n);
          rep.worst_coplanarity = std::max({rep.worst_coplanarity, cr.first, cr.second});
          ks.push_back(discrete_gaussian_curvature(mesh, m, n));
        } catch (const Error& e) {
          if (e.code() != ErrorCode::DegenerateTangents) throw;
        }
      }
    }
  }
  rep.quad_count = thetas.size();
  rep.k_count = ks.size();

  if (!thetas.empty()) {
    double sum = 0;
    for (double t : thetas) sum += t;
    rep.theta_mean = sum / static_cast<double>(thetas.size());
    for (double t : thetas) {
      rep.theta_max_dev = std::max(rep.theta_max_dev, std::abs(t - rep.theta_mean));
    }
    for (double d : dihedrals) {
      rep.theta_dihedral_max_dev =
          std::max(rep.theta_dihedral_max_dev, std::abs(d - rep.theta_mean));
    }
    const double s = std::sin(rep.theta_mean);
    rep.a_minus_sin_theta = std::abs(a - s);
  }
  if (!ks.empty()) {
    double sum = 0;
    for (double k : ks) sum += k;
    rep.k_mean = sum / static_cast<double>(ks.size());
    for (double k : ks) rep.k_max_dev = std::max(rep.k_max_dev, std::abs(k - rep.k_mean));
    const double s = std::sin(rep.theta_mean);
    rep.k_relation_residual = std::abs(rep.k_mean + s * s / (a * a));
  }

  rep.pass = rep.worst_edge_residual < tol && rep.worst_coplanarity < tol;
  return rep;
}

}  // namespace

InvariantReport verify_chebyshev_net(const SurfaceMesh& mesh, double tol) {
  return analyze(mesh, tol);
}

InvariantReport invariant_report(const SurfaceMesh& mesh) { return analyze(mesh, 1e-9); }

}  // namespace tsps
