#include "tsps/samples.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace tsps {

double sine_gordon_one_soliton(double u, double v) { return 4 * std::atan(std::exp(u + v)); }

ScalarGrid sample_one_soliton(const GridDomain& domain) {
  return ScalarGrid::sample(domain, sine_gordon_one_soliton);
}

FormsField chebyshev_forms_from_omega(const ScalarGrid& omega, double band) {
  FormsField field;
  field.domain = omega.domain;
  field.margin = 0;
  field.forms.resize(omega.values.size());
  const double pi = std::numbers::pi;
  for (std::size_t i = 0; i < omega.domain.rows(); ++i) {
    for (std::size_t j = 0; j < omega.domain.cols(); ++j) {
      const double w = omega.at(i, j);
      if (!(w >= band && w <= pi - band)) {
        throw Error(ErrorCode::OutOfValidityBand,
                    "omega = " + std::to_string(w) + " leaves the validity band")
            .at_index(i, j);
      }
      FundamentalForms f;
      f.E = 1;
      f.G = 1;
      f.F = std::cos(w);
      f.L = 0;
      f.N = 0;
      f.M = std::sin(w);
      f.W = 1 - f.F * f.F;
      field.at(i, j) = f;
    }
  }
  return field;
}

VecGrid sphere_immersion(double radius, const GridDomain& grid) {
  if (!(radius > 0)) throw Error(ErrorCode::DegenerateInput, "radius must be positive");
  for (double v : grid.t2) {
    if (std::abs(std::sin(v)) <= 1e-6) {
      throw Error(ErrorCode::SingularParametrization, "window touches a pole");
    }
  }
  return VecGrid::sample(grid, [radius](double u, double v) {
    return Vec3{radius * std::sin(v) * std::cos(u), radius * std::sin(v) * std::sin(u),
                radius * std::cos(v)};
  });
}

VecGrid cylinder_immersion(double radius, const GridDomain& grid) {
  if (!(radius > 0)) throw Error(ErrorCode::DegenerateInput, "radius must be positive");
  return VecGrid::sample(grid, [radius](double u, double v) {
    return Vec3{radius * std::cos(u), radius * std::sin(u), v};
  });
}

VecGrid tractroid_immersion(const GridDomain& grid) {
  for (double u : grid.t1) {
    if (std::abs(std::tanh(u)) <= 1e-3) {
      throw Error(ErrorCode::SingularParametrization, "window touches the tractrix cusp");
    }
  }
  return VecGrid::sample(grid, [](double u, double v) {
    const double s = 1 / std::cosh(u);
    return Vec3{s * std::cos(v), s * std::sin(v), u - std::tanh(u)};
  });
}

CauchyData amsler_cauchy_data(double gamma, double a, int n1, int n2, double twist) {
  const double pi = std::numbers::pi;
  if (!(gamma > 1e-9 && gamma < pi - 1e-9)) {
    throw Error(ErrorCode::BadAngle, "strip angle must lie strictly inside (0, pi)");
  }
  if (!(a > 0) || !std::isfinite(a)) {
    throw Error(ErrorCode::DegenerateInput, "mesh size a must be positive");
  }
  if (n1 < 3 || n2 < 3) {
    throw Error(ErrorCode::DegenerateInput, "each strip needs at least three points");
  }
  const Vec3 e1{1, 0, 0};
  const Vec3 e2{std::cos(gamma), std::sin(gamma), 0};
  const Vec3 zhat{0, 0, 1};

  CauchyData data;
  data.a = a;
  data.strip1.reserve(static_cast<std::size_t>(n1));
  data.strip2.reserve(static_cast<std::size_t>(n2));
  for (int k = 0; k < n1; ++k) data.strip1.push_back((k * a) * e1);
  for (int k = 0; k < n2; ++k) data.strip2.push_back((k * a) * e2);

  std::vector<Plane> planes1, planes2;
  for (int k = 0; k < n1; ++k) {
    planes1.push_back(Plane{data.strip1[static_cast<std::size_t>(k)],
                            rotate_about_axis(e1, k * twist, zhat)});
  }
  for (int k = 0; k < n2; ++k) {
    planes2.push_back(Plane{data.strip2[static_cast<std::size_t>(k)],
                            rotate_about_axis(e2, -k * twist, zhat)});
  }
  data.planes1 = std::move(planes1);
  data.planes2 = std::move(planes2);
  return data;
}

namespace {

// Bit-reproducible uniform double in [0,1); avoids stdlib distribution
// implementation differences.
double canonical(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

Vec3 random_perpendicular(std::mt19937_64& eng, const Vec3& v) {
  for (;;) {
    const Vec3 raw{2 * canonical(eng) - 1, 2 * canonical(eng) - 1, 2 * canonical(eng) - 1};
    const Vec3 c = cross(v, raw);
    if (norm(c) > 1e-3 * norm(v)) return c / norm(c);
  }
}

std::vector<Vec3> wander(std::mt19937_64& eng, const Vec3& first_dir, double a, int n,
                         double amplitude) {
  std::vector<Vec3> strip;
  strip.reserve(static_cast<std::size_t>(n));
  strip.push_back(Vec3{0, 0, 0});
  Vec3 edge = a * first_dir;
  strip.push_back(edge);
  for (int k = 2; k < n; ++k) {
    if (amplitude > 0) {
      const double angle = amplitude * (0.5 + 0.5 * canonical(eng));
      edge = rotate_about_axis(random_perpendicular(eng, edge), angle, edge);
    }
    strip.push_back(strip.back() + edge);
  }
  return strip;
}

}  // namespace

CauchyData perturbed_cauchy_data(std::uint64_t seed, double a, int n, double amplitude) {
  if (!(a > 0) || !std::isfinite(a)) {
    throw Error(ErrorCode::DegenerateInput, "mesh size a must be positive");
  }
  if (n < 2) throw Error(ErrorCode::DegenerateInput, "strips need at least two points");
  if (!(amplitude >= 0 && amplitude <= 1)) {
    throw Error(ErrorCode::DegenerateInput, "amplitude must lie in [0, 1]");
  }
  std::mt19937_64 eng(seed);
  CauchyData data;
  data.a = a;
  data.strip1 = wander(eng, Vec3{1, 0, 0}, a, n, amplitude);
  data.strip2 = wander(eng, Vec3{0, 1, 0}, a, n, amplitude);
  return data;
}

}  // namespace tsps
