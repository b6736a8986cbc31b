#include "tsps/time_scale.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tsps {

namespace {

void validate(const TimeScale& ts) {
  if (ts.pieces.empty()) throw Error(ErrorCode::BadFormat, "time scale has no pieces");
  double prev_hi = -std::numeric_limits<double>::infinity();
  for (const auto& p : ts.pieces) {
    if (!(p[0] <= p[1])) throw Error(ErrorCode::BadFormat, "piece with a > b");
    if (!(p[0] > prev_hi) && prev_hi != -std::numeric_limits<double>::infinity())
      throw Error(ErrorCode::BadFormat, "pieces not sorted and disjoint");
    prev_hi = p[1];
  }
  if (ts.period) {
    const double span = ts.pieces.back()[1] - ts.pieces.front()[0];
    if (!(*ts.period > span)) throw Error(ErrorCode::BadFormat, "period not larger than piece span");
  }
}

// Locates t exactly: returns (piece index, period shift count) or nothing.
struct Location {
  std::size_t piece;
  long k;  // t == base point + k * period
};

std::optional<Location> locate(const TimeScale& ts, double t) {
  auto find_in_base = [&](double s) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < ts.pieces.size(); ++i)
      if (s >= ts.pieces[i][0] && s <= ts.pieces[i][1]) return i;
    return std::nullopt;
  };
  if (!ts.period) {
    if (auto i = find_in_base(t)) return Location{*i, 0};
    return std::nullopt;
  }
  const double L = *ts.period;
  const double k0 = std::floor((t - ts.pieces.front()[0]) / L);
  for (long dk = -1; dk <= 1; ++dk) {
    const long k = static_cast<long>(k0) + dk;
    if (auto i = find_in_base(t - static_cast<double>(k) * L)) return Location{*i, k};
  }
  return std::nullopt;
}

Location require_location(const TimeScale& ts, double t) {
  auto loc = locate(ts, t);
  if (!loc) throw Error(ErrorCode::NotInScale, "point is not in the time scale");
  return *loc;
}

double shifted(const TimeScale& ts, std::size_t piece, int end, long k) {
  const double base = ts.pieces[piece][end];
  return ts.period ? base + static_cast<double>(k) * *ts.period : base;
}

}  // namespace

TimeScale TimeScale::reals(double lo, double hi) { return with_pieces({{lo, hi}}); }

TimeScale TimeScale::integers() { return with_pieces({{0.0, 0.0}}, 1.0); }

TimeScale TimeScale::lattice(double a) {
  if (!(a > 0.0)) throw Error(ErrorCode::BadFormat, "lattice spacing must be positive");
  return with_pieces({{0.0, 0.0}}, a);
}

TimeScale TimeScale::isolated_points(std::vector<double> points) {
  std::sort(points.begin(), points.end());
  std::vector<std::array<double, 2>> pieces;
  pieces.reserve(points.size());
  for (double p : points) pieces.push_back({p, p});
  return with_pieces(std::move(pieces));
}

TimeScale TimeScale::with_pieces(std::vector<std::array<double, 2>> pieces,
                                 std::optional<double> period) {
  TimeScale ts{std::move(pieces), period};
  validate(ts);
  return ts;
}

bool TimeScale::contains(double t) const { return locate(*this, t).has_value(); }

JumpResult sigma(const TimeScale& ts, double t) {
  const Location loc = require_location(ts, t);
  const double hi = shifted(ts, loc.piece, 1, loc.k);
  if (t < hi) return {t, false};  // right-dense inside a continuum piece
  if (loc.piece + 1 < ts.pieces.size()) return {shifted(ts, loc.piece + 1, 0, loc.k), false};
  if (ts.period) return {shifted(ts, 0, 0, loc.k + 1), false};
  return {t, true};
}

JumpResult rho(const TimeScale& ts, double t) {
  const Location loc = require_location(ts, t);
  const double lo = shifted(ts, loc.piece, 0, loc.k);
  if (t > lo) return {t, false};
  if (loc.piece > 0) return {shifted(ts, loc.piece - 1, 1, loc.k), false};
  if (ts.period) return {shifted(ts, ts.pieces.size() - 1, 1, loc.k - 1), false};
  return {t, true};
}

std::string PointClass::label() const {
  std::string s;
  if (isolated()) s = "isolated";
  else if (dense()) s = "dense";
  else if (right_scattered) s = "right-scattered/left-dense";
  else s = "right-dense/left-scattered";
  if (right_boundary) s += "+right-boundary";
  if (left_boundary) s += "+left-boundary";
  return s;
}

PointClass classify(const TimeScale& ts, double t) {
  const JumpResult s = sigma(ts, t);
  const JumpResult r = rho(ts, t);
  PointClass c;
  // A right-boundary endpoint of a degenerate piece is still scattered:
  // the realized set contains no point to its right at all.
  c.right_scattered = (s.value > t) || s.hit_boundary;
  c.left_scattered = (r.value < t) || r.hit_boundary;
  c.right_boundary = s.hit_boundary;
  c.left_boundary = r.hit_boundary;
  return c;
}

namespace {

// One-sided difference quotients extrapolated in powers of h.
// sign = +1 uses [t, t + h] (delta), sign = -1 uses [t - h, t] (nabla).
double extrapolated_limit(const std::function<double(double)>& f, double t, double room,
                          int sign, double tol) {
  const int kMaxLevels = 12;
  const double h0 = std::min(0.5 * room, 0.125);
  if (!(h0 > 0.0)) throw Error(ErrorCode::NoConvergence, "no room for a one-sided limit");
  const double f0 = f(t);
  std::vector<double> prev, cur;
  for (int k = 0; k <= kMaxLevels; ++k) {
    const double h = h0 / static_cast<double>(1 << k);
    cur.assign(1, sign > 0 ? (f(t + h) - f0) / h : (f0 - f(t - h)) / h);
    double pow2 = 1.0;
    for (std::size_t j = 1; j <= prev.size(); ++j) {
      pow2 *= 2.0;
      cur.push_back(cur[j - 1] + (cur[j - 1] - prev[j - 1]) / (pow2 - 1.0));
    }
    if (!prev.empty() && std::abs(cur.back() - prev.back()) <= tol && std::isfinite(cur.back()))
      return cur.back();
    prev = cur;
  }
  throw Error(ErrorCode::NoConvergence, "one-sided limit did not reach the requested tolerance");
}

}  // namespace

double delta_derivative(const TimeScale& ts, const std::function<double(double)>& f,
                        double t, double tol) {
  const JumpResult s = sigma(ts, t);
  if (s.hit_boundary) throw Error(ErrorCode::BoundaryPoint, "delta derivative at the right boundary");
  if (s.value > t) return (f(s.value) - f(t)) / (s.value - t);
  const Location loc = require_location(ts, t);
  const double hi = shifted(ts, loc.piece, 1, loc.k);
  return extrapolated_limit(f, t, hi - t, +1, tol);
}

double nabla_derivative(const TimeScale& ts, const std::function<double(double)>& f,
                        double t, double tol) {
  const JumpResult r = rho(ts, t);
  if (r.hit_boundary) throw Error(ErrorCode::BoundaryPoint, "nabla derivative at the left boundary");
  if (r.value < t) return (f(t) - f(r.value)) / (t - r.value);
  const Location loc = require_location(ts, t);
  const double lo = shifted(ts, loc.piece, 0, loc.k);
  return extrapolated_limit(f, t, t - lo, -1, tol);
}

std::vector<double> realize_axis(const TimeScale& ts, double lo, double hi, double step) {
  if (!(lo <= hi)) throw Error(ErrorCode::BadFormat, "empty realization window");
  std::vector<double> out;
  auto emit_piece = [&](double plo, double phi) {
    const double a = std::max(plo, lo), b = std::min(phi, hi);
    if (a > b) return;
    if (a == b) {
      out.push_back(a);
      return;
    }
    if (!(step > 0.0)) throw Error(ErrorCode::BadFormat, "continuum piece needs a sampling step");
    double t = a;
    for (long k = 0; t < b; ++k) {
      out.push_back(t);
      t = a + static_cast<double>(k + 1) * step;
    }
    out.push_back(b);
  };
  if (!ts.period) {
    for (const auto& p : ts.pieces) emit_piece(p[0], p[1]);
  } else {
    const double L = *ts.period;
    const long k_lo = static_cast<long>(std::floor((lo - ts.pieces.back()[1]) / L)) - 1;
    const long k_hi = static_cast<long>(std::floor((hi - ts.pieces.front()[0]) / L)) + 1;
    for (long k = k_lo; k <= k_hi; ++k)
      for (const auto& p : ts.pieces)
        emit_piece(p[0] + static_cast<double>(k) * L, p[1] + static_cast<double>(k) * L);
  }
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace tsps
