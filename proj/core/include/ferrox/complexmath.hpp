#pragma once

#include <complex>
#include <initializer_list>

#include "ferrox/error.hpp"

namespace ferrox {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cplx kI{0.0, 1.0};

// Log-gamma, principal branch (continuous on C minus (-inf, 0]).
cplx ln_gamma(cplx z);
cplx gamma(cplx z);
// 1/Gamma, entire; exactly zero at the poles.
cplx rgamma(cplx z);
cplx pochhammer(cplx a, unsigned n);

// Gamma(num...)/Gamma(den...) evaluated through log-gamma so that large
// arguments do not overflow. A denominator within 1e-9 of a pole contributes
// through rgamma, so the ratio is zero there. A numerator pole throws.
cplx gamma_ratio(std::initializer_list<cplx> num, std::initializer_list<cplx> den);

cplx sin_pi(cplx z);
cplx cos_pi(cplx z);

// Distance from z to the nearest integer (infinity-free, complex aware).
double dist_to_integer(cplx z);
// Distance from z to the nearest element of {0, -1, -2, ...}.
double dist_to_nonpositive_integer(cplx z);
bool is_nonpositive_integer(cplx z);

// exp(e * Log(b)) with arg in (-pi, pi]. Integer exponents are exact and
// accept negative real bases; otherwise a base on (-inf, 0] throws.
cplx principal_pow(cplx base, cplx exponent);
cplx principal_log(cplx z);

// (z^2 - 1)^alpha read as (z + 1)^alpha (z - 1)^alpha, analytic on D2.
cplx z2m1_pow(cplx z, cplx alpha);

enum class RootVariant { Y1, Y2 };

// Y1 = i sqrt(1 - x^2) on D1, Y2 = x sqrt(1 - x^-2) off [-1, 1].
cplx root_y(RootVariant variant, cplx x);

// Domain membership.
bool in_d1(cplx x);
bool in_d1_plus(cplx x);
bool in_d2(cplx x);
bool in_d2_plus(cplx x);
bool in_d3(cplx x);

}  // namespace ferrox
