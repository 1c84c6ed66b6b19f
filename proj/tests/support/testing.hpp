#pragma once

// Shared helpers for the test suites: error measures, a seeded generator
// with domain-aware samplers, and a small property runner.

#include <cmath>
#include <cstdint>
#include <random>
#include <string>

#include "ferrox/complexmath.hpp"
#include "ferrox/ferrers.hpp"

namespace testing {

using ferrox::cplx;

inline double rel_err(cplx got, cplx want) {
    double s = std::abs(want);
    return std::abs(got - want) / (s > 0.0 ? s : 1.0);
}

// Symmetric relative difference, used where neither side is the reference.
inline double rel_diff(cplx a, cplx b) {
    double s = std::max(std::abs(a), std::abs(b));
    return s > 0.0 ? std::abs(a - b) / s : 0.0;
}

// Radical inverse in the given base; the pair (2, 3) gives a Halton sequence.
inline double halton(std::uint32_t i, std::uint32_t base) {
    double f = 1.0, r = 0.0;
    while (i > 0) {
        f /= double(base);
        r += f * double(i % base);
        i /= base;
    }
    return r;
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
    bool coin() { return integer(0, 1) == 1; }

    cplx box(double re_lo, double re_hi, double im_lo, double im_hi) {
        return {uniform(re_lo, re_hi), uniform(im_lo, im_hi)};
    }

    // Real or complex value with |Re| <= r, kept at least `gap` away from every integer.
    cplx noninteger(double r, double gap = 0.05, bool complex_part = true) {
        for (;;) {
            cplx z(uniform(-r, r), complex_part && coin() ? uniform(-0.5, 0.5) : 0.0);
            if (ferrox::dist_to_integer(z) > gap) return z;
        }
    }

    // Point of D1 away from the branch points and the cuts.
    cplx point_d1(double r = 2.0) {
        for (;;) {
            cplx x = box(-r, r, -r, r);
            if (std::abs(x - 1.0) < 0.05 || std::abs(x + 1.0) < 0.05) continue;
            if (std::fabs(x.real()) > 1.0 && std::fabs(x.imag()) < 0.05) continue;
            return x;
        }
    }

    // Point of D1 with a nonzero imaginary part of at least `gap`.
    cplx point_d1_nonreal(double r = 2.0, double gap = 0.05) {
        for (;;) {
            cplx x = point_d1(r);
            if (std::fabs(x.imag()) >= gap) return x;
        }
    }

    // Point of D2 (the plane cut along (-inf, 1]) away from its cut.
    cplx point_d2(double r = 4.0) {
        for (;;) {
            cplx x = box(-r, r, -r, r);
            if (std::abs(x - 1.0) < 0.05 || std::abs(x + 1.0) < 0.05) continue;
            if (x.real() < 1.0 && std::fabs(x.imag()) < 0.05) continue;
            return x;
        }
    }

    // Degree and order with every Table-1 exclusion kept at a distance.
    ferrox::ParamPair generic_params(double r = 2.0) {
        for (;;) {
            ferrox::ParamPair p{noninteger(r), noninteger(r * 0.5)};
            if (ferrox::dist_to_integer(2.0 * p.mu) < 0.05 || ferrox::dist_to_integer(2.0 * p.nu) < 0.05) continue;
            if (ferrox::dist_to_integer(p.nu + p.mu) < 0.05 || ferrox::dist_to_integer(p.nu - p.mu) < 0.05) continue;
            return p;
        }
    }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

// Runs prop on n generated cases. The seed and case index are attached to any
// failure so a case can be replayed.
template <class Gen, class Prop>
void for_all(int n, std::uint64_t seed, Gen gen, Prop prop) {
    Rng rng(seed);
    for (int i = 0; i < n; ++i) {
        auto c = gen(rng);
        prop(c, i);
    }
}

}  // namespace testing
