#pragma once

#include <cstddef>
#include <vector>

#include "tsps/discrete_surface.hpp"
#include "tsps/errors.hpp"
#include "tsps/grid.hpp"

namespace tsps {

// Surface sampled over a product time-scale window, with the delta-derivative
// fields materialized up front: D_j r (forward quotient over the realized
// gap, exact at scattered coordinates), the unit normal along D1 r x D2 r,
// and D_j n. Each cache is valid only where its stencil fits:
//   d1r: i < rows-1          d2r: j < cols-1
//   nrm: i < rows-1 and j < cols-1 (and nrm_ok)
//   d1n: i < rows-2, j < cols-1    d2n: i < rows-1, j < cols-2
struct TimeScaleSurface {
  VecGrid r;
  std::vector<Vec3> d1r, d2r, nrm, d1n, d2n;
  std::vector<char> nrm_ok, d1n_ok, d2n_ok;

  std::size_t rows() const { return r.domain.rows(); }
  std::size_t cols() const { return r.domain.cols(); }
  std::size_t idx(std::size_t i, std::size_t j) const { return i * r.domain.cols() + j; }

  static TimeScaleSurface from_grid(VecGrid positions);
  // Lattice import: domain a*Z x a*Z windowed to the mesh extent, positions
  // copied verbatim, so every operator here matches its lattice counterpart.
  static TimeScaleSurface from_mesh(const SurfaceMesh& mesh);
};

Vec3 ts_normal(const TimeScaleSurface& s, std::size_t i, std::size_t j);

struct TsReport {
  std::size_t rows = 0, cols = 0;
  double worst_unit_res_1 = 0, worst_unit_res_2 = 0;      // | |D_j r| - 1 |
  double worst_tangency_res_1 = 0, worst_tangency_res_2 = 0;  // |D_j n . D_j r|
  double worst_mixed_residual = 0;  // reported, not gated
  bool pass = false;
  double tol = 0;
};

// Residuals of the unit-tangent and normal-tangency conditions; pass gates on
// those four. The mixed-partial residual is a differentiability surrogate and
// is reported without affecting pass.
TsReport verify_ts_chebyshev(const TimeScaleSurface& s, double tol);

// - (D1 n . D2 r)(D2 n . D1 r) / (1 - (D1 r . D2 r)^2)
double ts_gaussian_curvature(const TimeScaleSurface& s, std::size_t i, std::size_t j);

struct ConjectureReport {
  std::size_t count = 0;
  double mean = 0, stddev = 0, min = 0, max = 0;
  double max_abs_dev = 0;  // from the mean
};

// Statistics of the curvature expression over the window: an audit of its
// conjectured constancy, with no pass/fail semantics. The surface must first
// pass verify_ts_chebyshev at chebyshev_tol.
ConjectureReport conjecture_constancy_report(const TimeScaleSurface& s,
                                             double chebyshev_tol = 0.05);

}  // namespace tsps
