#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tsps/errors.hpp"

namespace tsps {

// A closed subset of the reals, stored as sorted disjoint closed intervals.
// Degenerate intervals [a, a] are isolated points. An optional period
// replicates the whole piece list by integer multiples of its length.
// Membership and classification use exact endpoint comparisons.
struct TimeScale {
  std::vector<std::array<double, 2>> pieces;
  std::optional<double> period;

  static TimeScale reals(double lo, double hi);
  static TimeScale integers();             // {..., -1, 0, 1, ...}
  static TimeScale lattice(double a);      // a * integers
  static TimeScale isolated_points(std::vector<double> points);
  static TimeScale with_pieces(std::vector<std::array<double, 2>> pieces,
                               std::optional<double> period = std::nullopt);

  bool contains(double t) const;
};

// sigma/rho result; hit_boundary marks points where the jump is undefined
// because the (bounded) scale has no point beyond t. value == t there.
struct JumpResult {
  double value;
  bool hit_boundary;
};

JumpResult sigma(const TimeScale& ts, double t);  // throws NotInScale
JumpResult rho(const TimeScale& ts, double t);    // throws NotInScale

struct PointClass {
  bool right_scattered = false;
  bool left_scattered = false;
  bool right_boundary = false;
  bool left_boundary = false;

  bool isolated() const { return right_scattered && left_scattered; }
  bool dense() const { return !right_scattered && !left_scattered; }
  std::string label() const;
};

PointClass classify(const TimeScale& ts, double t);  // throws NotInScale

// Exact jump quotient at right-scattered points; Richardson-extrapolated
// shrinking forward differences at right-dense points, converged to tol.
// Throws NotInScale, BoundaryPoint, NoConvergence.
double delta_derivative(const TimeScale& ts, const std::function<double(double)>& f,
                        double t, double tol);

// Mirror of delta_derivative with rho and left-sided limits.
double nabla_derivative(const TimeScale& ts, const std::function<double(double)>& f,
                        double t, double tol);

// Sample points of ts inside [lo, hi]: every scale point of degenerate
// pieces, plus step-spaced samples of continuum pieces (last gap may be
// shorter). Sorted ascending.
std::vector<double> realize_axis(const TimeScale& ts, double lo, double hi, double step);

}  // namespace tsps
