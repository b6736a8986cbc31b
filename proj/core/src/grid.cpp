#include "tsps/grid.hpp"

namespace tsps {

GridDomain GridDomain::realize(TimeScale s1, TimeScale s2, double lo1, double hi1,
                               double lo2, double hi2, double step) {
  GridDomain d;
  d.scale1 = std::move(s1);
  d.scale2 = std::move(s2);
  d.window1[0] = lo1;
  d.window1[1] = hi1;
  d.window2[0] = lo2;
  d.window2[1] = hi2;
  d.sampling_step = step;
  d.t1 = realize_axis(d.scale1, lo1, hi1, step);
  d.t2 = realize_axis(d.scale2, lo2, hi2, step);
  if (d.t1.empty() || d.t2.empty())
    throw Error(ErrorCode::BadFormat, "realization window contains no scale points");
  return d;
}

Plane delta_tangent_plane(const ScalarGrid& f, std::size_t i, std::size_t j) {
  const double d1 = partial_delta(f, 1, i, j);
  const double d2 = partial_delta(f, 2, i, j);
  const Vec3 point{f.domain.t1[i], f.domain.t2[j], f.at(i, j)};
  return Plane{point, normalized(Vec3{-d1, -d2, 1.0})};
}

}  // namespace tsps
