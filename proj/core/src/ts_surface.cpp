#include "tsps/ts_surface.hpp"

#include <algorithm>
#include <cmath>

namespace tsps {

TimeScaleSurface TimeScaleSurface::from_grid(VecGrid positions) {
  TimeScaleSurface s;
  s.r = std::move(positions);
  const std::size_t rows = s.rows(), cols = s.cols();
  if (rows < 2 || cols < 2) {
    throw Error(ErrorCode::TooSmall, "surface needs at least a 2x2 window");
  }
  const std::size_t total = rows * cols;
  s.d1r.assign(total, Vec3{});
  s.d2r.assign(total, Vec3{});
  s.nrm.assign(total, Vec3{});
  s.d1n.assign(total, Vec3{});
  s.d2n.assign(total, Vec3{});
  s.nrm_ok.assign(total, 0);
  s.d1n_ok.assign(total, 0);
  s.d2n_ok.assign(total, 0);

  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (i + 1 < rows) s.d1r[s.idx(i, j)] = partial_delta(s.r, 1, i, j);
      if (j + 1 < cols) s.d2r[s.idx(i, j)] = partial_delta(s.r, 2, i, j);
    }
  }
  for (std::size_t i = 0; i + 1 < rows; ++i) {
    for (std::size_t j = 0; j + 1 < cols; ++j) {
      const Vec3 c = cross(s.d1r[s.idx(i, j)], s.d2r[s.idx(i, j)]);
      const double len = norm(c);
      const double scale = norm(s.d1r[s.idx(i, j)]) * norm(s.d2r[s.idx(i, j)]);
      if (len > 1e-12 * std::max(scale, 1e-300)) {
        s.nrm[s.idx(i, j)] = c / len;
        s.nrm_ok[s.idx(i, j)] = 1;
      }
    }
  }
  const auto& t1 = s.r.domain.t1;
  const auto& t2 = s.r.domain.t2;
  for (std::size_t i = 0; i + 1 < rows; ++i) {
    for (std::size_t j = 0; j + 1 < cols; ++j) {
      if (i + 2 < rows && s.nrm_ok[s.idx(i, j)] && s.nrm_ok[s.idx(i + 1, j)]) {
        s.d1n[s.idx(i, j)] = (s.nrm[s.idx(i + 1, j)] - s.nrm[s.idx(i, j)]) / (t1[i + 1] - t1[i]);
        s.d1n_ok[s.idx(i, j)] = 1;
      }
      if (j + 2 < cols && s.nrm_ok[s.idx(i, j)] && s.nrm_ok[s.idx(i, j + 1)]) {
        s.d2n[s.idx(i, j)] = (s.nrm[s.idx(i, j + 1)] - s.nrm[s.idx(i, j)]) / (t2[j + 1] - t2[j]);
        s.d2n_ok[s.idx(i, j)] = 1;
      }
    }
  }
  return s;
}

TimeScaleSurface TimeScaleSurface::from_mesh(const SurfaceMesh& mesh) {
  const double a = mesh.a;
  VecGrid g;
  g.domain = GridDomain::realize(TimeScale::lattice(a), TimeScale::lattice(a), 0,
                                 static_cast<double>(mesh.rows - 1) * a, 0,
                                 static_cast<double>(mesh.cols - 1) * a, a);
  if (g.domain.rows() != mesh.rows || g.domain.cols() != mesh.cols) {
    throw Error(ErrorCode::BadFormat, "lattice realization does not match the mesh extent");
  }
  g.values = mesh.vertices;
  return from_grid(std::move(g));
}

Vec3 ts_normal(const TimeScaleSurface& s, std::size_t i, std::size_t j) {
  if (i + 1 >= s.rows() || j + 1 >= s.cols()) {
    throw Error(ErrorCode::BoundaryIndex, "normal needs both forward neighbors").at_index(i, j);
  }
  if (!s.nrm_ok[s.idx(i, j)]) {
    throw Error(ErrorCode::DegenerateTangents, "tangents nearly parallel").at_index(i, j);
  }
  return s.nrm[s.idx(i, j)];
}

TsReport verify_ts_chebyshev(const TimeScaleSurface& s, double tol) {
  const std::size_t rows = s.rows(), cols = s.cols();
  if (rows < 3 || cols < 3) {
    throw Error(ErrorCode::TooSmall, "verification needs at least a 3x3 window");
  }
  TsReport rep;
  rep.rows = rows;
  rep.cols = cols;
  rep.tol = tol;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const std::size_t k = s.idx(i, j);
      if (i + 1 < rows) {
        rep.worst_unit_res_1 = std::max(rep.worst_unit_res_1, std::abs(norm(s.d1r[k]) - 1));
      }
      if (j + 1 < cols) {
        rep.worst_unit_res_2 = std::max(rep.worst_unit_res_2, std::abs(norm(s.d2r[k]) - 1));
      }
      if (s.d1n_ok[k]) {
        rep.worst_tangency_res_1 =
            std::max(rep.worst_tangency_res_1, std::abs(dot(s.d1n[k], s.d1r[k])));
      }
      if (s.d2n_ok[k]) {
        rep.worst_tangency_res_2 =
            std::max(rep.worst_tangency_res_2, std::abs(dot(s.d2n[k], s.d2r[k])));
      }
      if (i + 1 < rows && j + 1 < cols) {
        rep.worst_mixed_residual =
            std::max(rep.worst_mixed_residual, mixed_partial_residual(s.r, i, j));
      }
    }
  }
  rep.pass = std::max({rep.worst_unit_res_1, rep.worst_unit_res_2, rep.worst_tangency_res_1,
                       rep.worst_tangency_res_2}) < tol;
  return rep;
}

double ts_gaussian_curvature(const TimeScaleSurface& s, std::size_t i, std::size_t j) {
  if (i + 2 >= s.rows() || j + 2 >= s.cols()) {
    throw Error(ErrorCode::BoundaryIndex, "curvature needs the forward-2 box").at_index(i, j);
  }
  const std::size_t k = s.idx(i, j);
  if (!s.d1n_ok[k] || !s.d2n_ok[k]) {
    throw Error(ErrorCode::DegenerateTangents, "normal field undefined nearby").at_index(i, j);
  }
  const double f = dot(s.d1r[k], s.d2r[k]);
  const double denom = 1 - f * f;
  if (denom <= 1e-12) {
    throw Error(ErrorCode::DegenerateTangents, "tangents nearly parallel").at_index(i, j);
  }
  return -(dot(s.d1n[k], s.d2r[k]) * dot(s.d2n[k], s.d1r[k])) / denom;
}

ConjectureReport conjecture_constancy_report(const TimeScaleSurface& s, double chebyshev_tol) {
  const TsReport gate = verify_ts_chebyshev(s, chebyshev_tol);
  if (!gate.pass) {
    throw Error(ErrorCode::NotChebyshevNet,
                "surface fails the net conditions at tolerance " + std::to_string(chebyshev_tol));
  }
  std::vector<double> ks;
  for (std::size_t i = 0; i + 2 < s.rows(); ++i) {
    for (std::size_t j = 0; j + 2 < s.cols(); ++j) {
      try {
        ks.push_back(ts_gaussian_curvature(s, i, j));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::DegenerateTangents) throw;
      }
    }
  }
  ConjectureReport rep;
  rep.count = ks.size();
  if (ks.empty()) return rep;
  rep.min = *std::min_element(ks.begin(), ks.end());
  rep.max = *std::max_element(ks.begin(), ks.end());
  double sum = 0;
  for (double k : ks) sum += k;
  rep.mean = sum / static_cast<double>(ks.size());
  double var = 0;
  for (double k : ks) var += (k - rep.mean) * (k - rep.mean);
  rep.stddev = std::sqrt(var / static_cast<double>(ks.size()));
  rep.max_abs_dev = std::max(std::abs(rep.max - rep.mean), std::abs(rep.min - rep.mean));
  return rep;
}

}  // namespace tsps
