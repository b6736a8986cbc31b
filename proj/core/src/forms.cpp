#include "tsps/forms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tsps/geometry.hpp"

namespace tsps {
namespace {

double det3(double a1, double a2, double a3, double b1, double b2, double b3, double c1, double c2,
            double c3) {
  return a1 * (b2 * c3 - b3 * c2) - a2 * (b1 * c3 - b3 * c1) + a3 * (b1 * c2 - b2 * c1);
}

using Member = double FundamentalForms::*;

// Central difference of one coefficient along a grid direction.
double d_form(const FormsField& f, Member m, std::size_t i, std::size_t j, int direction) {
  const auto& t1 = f.domain.t1;
  const auto& t2 = f.domain.t2;
  if (direction == 1) {
    return (f.at(i + 1, j).*m - f.at(i - 1, j).*m) / (t1[i + 1] - t1[i - 1]);
  }
  return (f.at(i, j + 1).*m - f.at(i, j - 1).*m) / (t2[j + 1] - t2[j - 1]);
}

void require_ring(const FormsField& f, std::size_t i, std::size_t j, std::size_t ring,
                  const char* what) {
  if (!f.has_ring(i, j, ring)) {
    throw Error(ErrorCode::BoundaryIndex,
                std::string(what) + ": index too close to the window edge")
        .at_index(i, j);
  }
}

double sqrt_w(const FundamentalForms& f) {
  if (!(f.W > 0)) {
    throw Error(ErrorCode::DegenerateFirstForm, "nonpositive EG - F^2");
  }
  return std::sqrt(f.W);
}

}  // namespace

std::pair<double, double> curvatures(const FundamentalForms& f) {
  const double scale = std::max(f.E * f.G, 1.0);
  if (std::abs(f.W) < 1e-12 * scale) {
    throw Error(ErrorCode::DegenerateFirstForm, "EG - F^2 vanishes");
  }
  const double k = (f.L * f.N - f.M * f.M) / f.W;
  const double h = (f.E * f.N - 2 * f.F * f.M + f.G * f.L) / (2 * f.W);
  return {k, h};
}

FundamentalForms forms_from_immersion(const VecGrid& r, std::size_t i, std::size_t j) {
  const std::size_t rows = r.domain.rows();
  const std::size_t cols = r.domain.cols();
  if (i < 2 || j < 2 || i + 2 >= rows || j + 2 >= cols) {
    throw Error(ErrorCode::BoundaryIndex, "forms need two interior rings").at_index(i, j);
  }
  const auto& t1 = r.domain.t1;
  const auto& t2 = r.domain.t2;

  auto du = [&](std::size_t a, std::size_t b) {
    return (r.at(a + 1, b) - r.at(a - 1, b)) / (t1[a + 1] - t1[a - 1]);
  };
  auto dv = [&](std::size_t a, std::size_t b) {
    return (r.at(a, b + 1) - r.at(a, b - 1)) / (t2[b + 1] - t2[b - 1]);
  };
  auto unit_normal = [&](std::size_t a, std::size_t b) {
    const Vec3 c = cross(du(a, b), dv(a, b));
    const double len = norm(c);
    if (len * len < 1e-12) {
      throw Error(ErrorCode::DegenerateFirstForm, "tangents nearly parallel").at_index(a, b);
    }
    return c / len;
  };

  const Vec3 ru = du(i, j);
  const Vec3 rv = dv(i, j);
  FundamentalForms f;
  f.E = dot(ru, ru);
  f.F = dot(ru, rv);
  f.G = dot(rv, rv);
  f.W = f.E * f.G - f.F * f.F;
  if (f.W < 1e-12 * std::max(f.E * f.G, 1.0)) {
    throw Error(ErrorCode::DegenerateFirstForm, "EG - F^2 vanishes").at_index(i, j);
  }

  const Vec3 nu =
      (unit_normal(i + 1, j) - unit_normal(i - 1, j)) / (t1[i + 1] - t1[i - 1]);
  const Vec3 nv =
      (unit_normal(i, j + 1) - unit_normal(i, j - 1)) / (t2[j + 1] - t2[j - 1]);
  f.L = -dot(nu, ru);
  f.M = -dot(nu, rv);
  f.N = -dot(nv, rv);
  return f;
}

FormsField forms_field_from_immersion(const VecGrid& r) {
  FormsField field;
  field.domain = r.domain;
  field.margin = 2;
  field.forms.assign(r.domain.rows() * r.domain.cols(), FundamentalForms{});
  for (std::size_t i = 2; i + 2 < r.domain.rows(); ++i) {
    for (std::size_t j = 2; j + 2 < r.domain.cols(); ++j) {
      field.at(i, j) = forms_from_immersion(r, i, j);
    }
  }
  return field;
}

double gauss_curvature_intrinsic(const FormsField& field, std::size_t i, std::size_t j) {
  require_ring(field, i, j, 2, "intrinsic curvature");
  const FundamentalForms& f = field.at(i, j);
  const double w = f.W;
  const double sw = sqrt_w(f);

  const double Eu = d_form(field, &FundamentalForms::E, i, j, 1);
  const double Ev = d_form(field, &FundamentalForms::E, i, j, 2);
  const double Fu = d_form(field, &FundamentalForms::F, i, j, 1);
  const double Fv = d_form(field, &FundamentalForms::F, i, j, 2);
  const double Gu = d_form(field, &FundamentalForms::G, i, j, 1);
  const double Gv = d_form(field, &FundamentalForms::G, i, j, 2);

  const double det_term =
      -det3(f.E, Eu, Ev, f.F, Fu, Fv, f.G, Gu, Gv) / (4 * w * w);

  // (F_v - G_u)/sqrt(W) and (F_u - E_v)/sqrt(W) as pointwise grid functions,
  // then one more central difference.
  auto q1 = [&](std::size_t a, std::size_t b) {
    const FundamentalForms& g = field.at(a, b);
    return (d_form(field, &FundamentalForms::F, a, b, 2) -
            d_form(field, &FundamentalForms::G, a, b, 1)) /
           sqrt_w(g);
  };
  auto q2 = [&](std::size_t a, std::size_t b) {
    const FundamentalForms& g = field.at(a, b);
    return (d_form(field, &FundamentalForms::F, a, b, 1) -
            d_form(field, &FundamentalForms::E, a, b, 2)) /
           sqrt_w(g);
  };
  const auto& t1 = field.domain.t1;
  const auto& t2 = field.domain.t2;
  const double div_term = ((q1(i + 1, j) - q1(i - 1, j)) / (t1[i + 1] - t1[i - 1]) +
                           (q2(i, j + 1) - q2(i, j - 1)) / (t2[j + 1] - t2[j - 1])) /
                          (2 * sw);
  return det_term + div_term;
}

std::pair<double, double> codazzi_residuals(const FormsField& field, std::size_t i,
                                            std::size_t j) {
  require_ring(field, i, j, 1, "compatibility residuals");
  const FundamentalForms& f = field.at(i, j);
  const double h = curvatures(f).second;

  const double Eu = d_form(field, &FundamentalForms::E, i, j, 1);
  const double Ev = d_form(field, &FundamentalForms::E, i, j, 2);
  const double Fu = d_form(field, &FundamentalForms::F, i, j, 1);
  const double Fv = d_form(field, &FundamentalForms::F, i, j, 2);
  const double Gu = d_form(field, &FundamentalForms::G, i, j, 1);
  const double Gv = d_form(field, &FundamentalForms::G, i, j, 2);
  const double Lv = d_form(field, &FundamentalForms::L, i, j, 2);
  const double Mu = d_form(field, &FundamentalForms::M, i, j, 1);
  const double Mv = d_form(field, &FundamentalForms::M, i, j, 2);
  const double Nu = d_form(field, &FundamentalForms::N, i, j, 1);

  const double c1 = Lv - Mu - h * (Ev - Fu) +
                    det3(f.E, Eu, f.L, f.F, Fu, f.M, f.G, Gu, f.N) / (2 * f.W);
  const double c2 = Mv - Nu - h * (Fv - Gu) +
                    det3(f.E, Ev, f.L, f.F, Fv, f.M, f.G, Gv, f.N) / (2 * f.W);
  return {c1, c2};
}

std::array<double, 4> chebyshev_residuals(const FundamentalForms& f) {
  return {std::abs(f.E - 1), std::abs(f.G - 1), std::abs(f.L), std::abs(f.N)};
}

double k_chebyshev(double F, double M) {
  if (std::abs(F) >= 1 - 1e-12) {
    throw Error(ErrorCode::DegenerateChebyshevAngle, "|cos(angle)| at or beyond 1");
  }
  return -(M * M) / (1 - F * F);
}

ChebyshevReport chebyshev_constancy_report(const FormsField& field, double form_tol,
                                           double constancy_tol) {
  std::vector<double> ks;
  for (std::size_t i = 0; i < field.domain.rows(); ++i) {
    for (std::size_t j = 0; j < field.domain.cols(); ++j) {
      if (!field.has_forms(i, j)) continue;
      const FundamentalForms& f = field.at(i, j);
      const auto res = chebyshev_residuals(f);
      const double worst = std::max({res[0], res[1], res[2], res[3]});
      if (worst > form_tol) {
        throw Error(ErrorCode::NotChebyshev,
                    "form residual " + std::to_string(worst) + " exceeds tolerance")
            .at_index(i, j);
      }
      ks.push_back(k_chebyshev(f.F, f.M));
    }
  }
  if (ks.empty()) {
    throw Error(ErrorCode::NotChebyshev, "no interior points carry forms");
  }

  ChebyshevReport rep;
  rep.count = ks.size();
  rep.tol = constancy_tol;
  rep.min = *std::min_element(ks.begin(), ks.end());
  rep.max = *std::max_element(ks.begin(), ks.end());
  double sum = 0;
  for (double k : ks) sum += k;
  rep.mean = sum / static_cast<double>(ks.size());
  double var = 0;
  for (double k : ks) var += (k - rep.mean) * (k - rep.mean);
  rep.stddev = std::sqrt(var / static_cast<double>(ks.size()));
  rep.max_abs_dev = std::max(std::abs(rep.max - rep.mean), std::abs(rep.min - rep.mean));
  rep.pass = rep.max_abs_dev <= constancy_tol;
  return rep;
}

}  // namespace tsps
