#pragma once

#include <cstddef>

#include "ferrox/complexmath.hpp"

namespace ferrox {

inline constexpr double kDefaultTol = 1e-12;
// Working arguments up to this modulus are summed directly.
inline constexpr double kThetaCut = 0.9;

struct HypParams {
    cplx a, b, c;
};

struct SeriesResult {
    cplx value;
    std::size_t terms_used = 0;
    // Relative estimate of the truncated tail.
    double tail_estimate = 0.0;
};

// Plain Gauss series for |w| < 1. Terminates exactly when a or b is in -N0.
SeriesResult f21_series(const HypParams& p, cplx w, double tol = kDefaultTol);

// Principal value of 2F1 on C minus [1, inf). Picks the transformation whose
// working argument is smallest; falls back to Taylor continuation of the
// hypergeometric ODE when no route reaches the series disk.
SeriesResult f21(const HypParams& p, cplx w, double tol = kDefaultTol);

// 2F1 / Gamma(c), entire in c.
SeriesResult f21_regularized(const HypParams& p, cplx w, double tol = kDefaultTol);

enum class CutSide { Above, Below };
enum class CutFormula { B1, B2, B3, B4 };

const char* to_string(CutSide side);
const char* to_string(CutFormula formula);

// Boundary value 2F1(a, b; c; x +- i0) for real x > 1. Dispatches to the
// non-degenerate cut formula with the smallest working argument.
SeriesResult f21_cut(const HypParams& p, double x, CutSide side, double tol = kDefaultTol);

// One specific cut formula. Throws Degenerate when its gamma factors hit a pole.
SeriesResult f21_cut_formula(CutFormula formula, const HypParams& p, double x, CutSide side,
                             double tol = kDefaultTol);

}  // namespace ferrox
