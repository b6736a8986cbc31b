#pragma once

#include <cstdint>

#include "tsps/discrete_surface.hpp"
#include "tsps/forms.hpp"
#include "tsps/grid.hpp"

namespace tsps {

// Angle field of the one-soliton sine-Gordon solution, omega = 4 atan(e^{u+v});
// satisfies omega_uv = sin(omega) identically.
double sine_gordon_one_soliton(double u, double v);

ScalarGrid sample_one_soliton(const GridDomain& domain);

// Chebyshev-form field E=G=1, F=cos(omega), L=N=0, M=sin(omega). Every omega
// value must stay inside [band, pi - band].
FormsField chebyshev_forms_from_omega(const ScalarGrid& omega, double band = 0.05);

// r = R(sin v cos u, sin v sin u, cos v); K = 1/R^2. With this parametrization
// the normal r_u x r_v points toward the center, giving H = +1/R. The window
// must avoid the poles (|sin v| > 1e-6).
VecGrid sphere_immersion(double radius, const GridDomain& grid);

// r = (R cos u, R sin u, v); K = 0.
VecGrid cylinder_immersion(double radius, const GridDomain& grid);

// r = (sech u cos v, sech u sin v, u - tanh u); K = -1 away from the cusp at
// u = 0 (window must keep |tanh u| > 1e-3).
VecGrid tractroid_immersion(const GridDomain& grid);

// Straight unit-edge strips along e1 = (1,0,0) and e2 = (cos gamma, sin gamma, 0)
// in z = 0, n1 and n2 points long, with explicit seed tangent planes: the
// z = 0 plane rotated about the strip direction by +m*twist along strip1 and
// -n*twist along strip2 (opposite handedness keeps the data consistent).
// twist = 0 seeds the flat net.
CauchyData amsler_cauchy_data(double gamma, double a, int n1, int n2, double twist = 0.01);

// Deterministic pseudo-random unit-edge strips: each edge is the previous one
// rotated by an exact angle in [amplitude/2, amplitude] about a perpendicular
// axis. Edge lengths are exact by construction; amplitude 0 reduces to
// straight orthogonal strips.
CauchyData perturbed_cauchy_data(std::uint64_t seed, double a, int n, double amplitude);

}  // namespace tsps
