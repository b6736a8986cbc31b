#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "tsps/errors.hpp"
#include "tsps/grid.hpp"

namespace tsps {

// First and second fundamental form coefficients at a point, with
// W = EG - F^2. Valid immersion points have E > 0 and W > 0.
struct FundamentalForms {
  double E = 0, F = 0, G = 0;
  double L = 0, M = 0, N = 0;
  double W = 0;
};

// (K, H). Throws DegenerateFirstForm when |W| is below the scale-aware
// threshold 1e-12 * max(E*G, 1).
std::pair<double, double> curvatures(const FundamentalForms& f);

// Form coefficients over a grid window. Entries are valid at indices with
// distance >= margin from every window edge.
struct FormsField {
  GridDomain domain;
  std::vector<FundamentalForms> forms;  // row-major
  std::size_t margin = 0;

  const FundamentalForms& at(std::size_t i, std::size_t j) const {
    return forms[i * domain.cols() + j];
  }
  FundamentalForms& at(std::size_t i, std::size_t j) { return forms[i * domain.cols() + j]; }

  bool has_forms(std::size_t i, std::size_t j) const {
    return i >= margin && j >= margin && i + margin < domain.rows() && j + margin < domain.cols();
  }
  // True when every form entry within Chebyshev distance `ring` exists.
  bool has_ring(std::size_t i, std::size_t j, std::size_t ring) const {
    return i >= margin + ring && j >= margin + ring && i + margin + ring < domain.rows() &&
           j + margin + ring < domain.cols();
  }
};

// Forms of a sampled immersion at one grid point. Central differences for
// r_u, r_v; L = -n_u.r_u, M = -n_u.r_v, N = -n_v.r_v with the unit normal
// n = r_u x r_v / |r_u x r_v|. Needs the index two points from every edge.
FundamentalForms forms_from_immersion(const VecGrid& r, std::size_t i, std::size_t j);

// Whole-field version; margin = 2.
FormsField forms_field_from_immersion(const VecGrid& r);

// Gaussian curvature from E, F, G and their grid derivatives alone, via the
// determinant-plus-divergence form; the nested divergence is differenced as
// pointwise quotients (F_v - G_u)/sqrt(W) etc.
double gauss_curvature_intrinsic(const FormsField& field, std::size_t i, std::size_t j);

// Left-hand sides of the two compatibility equations linking (E,F,G) and
// (L,M,N); both vanish on forms of a genuine surface.
std::pair<double, double> codazzi_residuals(const FormsField& field, std::size_t i, std::size_t j);

// (|E-1|, |G-1|, |L|, |N|): deviation from Chebyshev/asymptotic form.
std::array<double, 4> chebyshev_residuals(const FundamentalForms& f);

// -M^2/(1 - F^2). Throws DegenerateChebyshevAngle when |F| >= 1 - 1e-12.
double k_chebyshev(double F, double M);

struct ChebyshevReport {
  std::size_t count = 0;
  double mean = 0, stddev = 0, min = 0, max = 0;
  double max_abs_dev = 0;  // from the mean
  bool pass = false;
  double tol = 0;
};

// Statistics of k_chebyshev over a pointwise-Chebyshev field.
// Throws NotChebyshev when the field is empty or fails chebyshev_residuals.
ChebyshevReport chebyshev_constancy_report(const FormsField& field, double form_tol = 1e-9,
                                           double constancy_tol = 1e-8);

}  // namespace tsps
