#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "tsps/errors.hpp"
#include "tsps/geometry.hpp"
#include "tsps/time_scale.hpp"

namespace tsps {

// A bounded window of a product time scale, realized as sample points.
// Within a continuum piece consecutive samples differ by sampling_step
// (the last gap may be shorter); scattered points appear exactly.
struct GridDomain {
  TimeScale scale1, scale2;
  double window1[2] = {0.0, 0.0};
  double window2[2] = {0.0, 0.0};
  double sampling_step = 0.0;
  std::vector<double> t1, t2;  // realized sample points per axis

  static GridDomain realize(TimeScale scale1, TimeScale scale2, double lo1, double hi1,
                            double lo2, double hi2, double step);

  std::size_t rows() const { return t1.size(); }
  std::size_t cols() const { return t2.size(); }
};

template <class T>
struct GridFunction {
  GridDomain domain;
  std::vector<T> values;  // row-major, values[i * cols + j]

  const T& at(std::size_t i, std::size_t j) const { return values[i * domain.cols() + j]; }
  T& at(std::size_t i, std::size_t j) { return values[i * domain.cols() + j]; }

  static GridFunction sample(GridDomain dom, const std::function<T(double, double)>& f) {
    GridFunction g;
    g.domain = std::move(dom);
    g.values.reserve(g.domain.rows() * g.domain.cols());
    for (double u : g.domain.t1)
      for (double v : g.domain.t2) g.values.push_back(f(u, v));
    return g;
  }
};

using ScalarGrid = GridFunction<double>;
using VecGrid = GridFunction<Vec3>;

namespace detail {
inline double max_abs(double v) { return v < 0 ? -v : v; }
inline double max_abs(const Vec3& v) {
  double m = detail::max_abs(v.x);
  if (detail::max_abs(v.y) > m) m = detail::max_abs(v.y);
  if (detail::max_abs(v.z) > m) m = detail::max_abs(v.z);
  return m;
}
}  // namespace detail

// Forward difference quotient over the realized gap in the given direction:
// the exact jump quotient at scattered coordinates, an O(step) one-sided
// approximation at dense ones. Throws BoundaryIndex at the right edge.
template <class T>
T partial_delta(const GridFunction<T>& g, int direction, std::size_t i, std::size_t j) {
  const std::size_t rows = g.domain.rows(), cols = g.domain.cols();
  if (i >= rows || j >= cols) throw Error(ErrorCode::BoundaryIndex, "index outside window");
  if (direction == 1) {
    if (i + 1 >= rows) throw Error(ErrorCode::BoundaryIndex, "right boundary in direction 1");
    return (g.at(i + 1, j) - g.at(i, j)) / (g.domain.t1[i + 1] - g.domain.t1[i]);
  }
  if (direction == 2) {
    if (j + 1 >= cols) throw Error(ErrorCode::BoundaryIndex, "right boundary in direction 2");
    return (g.at(i, j + 1) - g.at(i, j)) / (g.domain.t2[j + 1] - g.domain.t2[j]);
  }
  throw Error(ErrorCode::BadFormat, "direction must be 1 or 2");
}

// |D1 D2 g - D2 D1 g| at (i, j), max over components. Both orders reduce to
// the same four samples, so the residual is pure rounding.
template <class T>
double mixed_partial_residual(const GridFunction<T>& g, std::size_t i, std::size_t j) {
  const std::size_t rows = g.domain.rows(), cols = g.domain.cols();
  if (i + 1 >= rows || j + 1 >= cols)
    throw Error(ErrorCode::BoundaryIndex, "mixed partial needs both forward neighbors");
  const double h1 = g.domain.t1[i + 1] - g.domain.t1[i];
  const double h2 = g.domain.t2[j + 1] - g.domain.t2[j];
  const T d2_lo = (g.at(i, j + 1) - g.at(i, j)) / h2;
  const T d2_hi = (g.at(i + 1, j + 1) - g.at(i + 1, j)) / h2;
  const T d1_lo = (g.at(i + 1, j) - g.at(i, j)) / h1;
  const T d1_hi = (g.at(i + 1, j + 1) - g.at(i, j + 1)) / h1;
  const T d12 = (d2_hi - d2_lo) / h1;
  const T d21 = (d1_hi - d1_lo) / h2;
  return detail::max_abs(d12 - d21);
}

// Graph tangent plane with slopes (D1 f, D2 f): passes through the forward
// graph points exactly at scattered coordinates.
Plane delta_tangent_plane(const ScalarGrid& f, std::size_t i, std::size_t j);

}  // namespace tsps
