#pragma once

#include <array>
#include <functional>

#include "ferrox/complexmath.hpp"

namespace ferrox {

inline constexpr int kNumArguments = 18;

// The hypergeometric arguments w_1..w_18 as functions of x. Group III
// (j = 13..18) uses the root y = root_y(root, x) in place of sqrt(x^2 - 1).
// Throws Domain at singular points or outside the root's domain.
cplx argument(int j, cplx x, RootVariant root = RootVariant::Y1);

// |w_j(x)| < 1 decided from closed-form geometry (disks, half-planes, the
// lemniscate, the hyperbola, and the alpha-beta criterion with x = cos(alpha + i beta)).
// Undefined points and boundary points are outside.
bool in_region(int j, cplx x, RootVariant root = RootVariant::Y1);

struct RegionReport {
    cplx x;
    std::array<bool, kNumArguments> inside{};  // index j - 1
    bool d1 = false, d1_plus = false, d2 = false, d2_plus = false, d3 = false;
};

RegionReport classify(cplx x);

enum class CurveBranch { Plain, Starred };

// Boundary curve |w_13| = 1 in the upper-right quadrant parametrized by alpha:
// x = (t + 1/t)/2 cos(alpha) + i (t - 1/t)/2 sin(alpha), t = sqrt(2 cos(2 alpha)).
// Plain takes alpha in (0, pi/4); Starred (the Y2 curve) takes alpha in (0, pi/6).
cplx curve_w13(double alpha, CurveBranch branch);

// Closed-interval parametrization used by extremum searches; no range check
// beyond the closure of the branch interval.
cplx curve_w13_closed(double alpha, CurveBranch branch);
double curve_alpha_max(CurveBranch branch);

// Maximizer of f on [lo, hi] by golden-section search.
double golden_section_max(const std::function<double(double)>& f, double lo, double hi, double tol = 1e-10);

struct CurveExtremes {
    cplx innermost;  // minimum Re x
    cplx outermost;  // maximum Re x
    cplx highest;    // maximum Im x
};

CurveExtremes curve_w13_extremes(CurveBranch branch);

}  // namespace ferrox
