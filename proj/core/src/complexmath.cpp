#include "ferrox/complexmath.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace ferrox {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Domain: return "domain";
        case ErrorKind::Parameter: return "parameter";
        case ErrorKind::Pole: return "pole";
        case ErrorKind::Cut: return "cut";
        case ErrorKind::Convergence: return "convergence";
        case ErrorKind::Degenerate: return "degenerate";
    }
    return "unknown";
}

namespace {

// Lanczos coefficients, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

const double kHalfLog2Pi = 0.91893853320467274178;

std::string fmt(cplx z) {
    return "(" + std::to_string(z.real()) + "," + std::to_string(z.imag()) + ")";
}

// Log-gamma for Re z >= 0.5.
cplx ln_gamma_right(cplx z) {
    cplx zz = z - 1.0;
    cplx x = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (zz + double(i));
    cplx t = zz + kLanczosG + 0.5;
    return kHalfLog2Pi + (zz + 0.5) * std::log(t) - t + std::log(x);
}

cplx ipow(cplx base, long long n) {
    bool inv = n < 0;
    unsigned long long m = inv ? static_cast<unsigned long long>(-n) : static_cast<unsigned long long>(n);
    cplx result = 1.0;
    while (m) {
        if (m & 1ULL) result *= base;
        base *= base;
        m >>= 1;
    }
    return inv ? 1.0 / result : result;
}

}  // namespace

double dist_to_integer(cplx z) {
    double r = z.real() - std::round(z.real());
    return std::hypot(r, z.imag());
}

double dist_to_nonpositive_integer(cplx z) {
    double n = std::round(z.real());
    if (n > 0.0) n = 0.0;
    return std::hypot(z.real() - n, z.imag());
}

bool is_nonpositive_integer(cplx z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

cplx sin_pi(cplx z) {
    double n = std::round(z.real());
    double f = z.real() - n;
    double sign = std::fmod(std::fabs(n), 2.0) == 1.0 ? -1.0 : 1.0;
    double s = std::sin(kPi * f), c = std::cos(kPi * f);
    double y = kPi * z.imag();
    return sign * cplx(s * std::cosh(y), c * std::sinh(y));
}

cplx cos_pi(cplx z) {
    double n = std::round(z.real());
    double f = z.real() - n;
    double sign = std::fmod(std::fabs(n), 2.0) == 1.0 ? -1.0 : 1.0;
    double s = std::sin(kPi * f), c = std::cos(kPi * f);
    double y = kPi * z.imag();
    return sign * cplx(c * std::cosh(y), -s * std::sinh(y));
}

cplx principal_log(cplx z) {
    // Normalize a signed zero so that the negative axis maps to +i pi.
    if (z.imag() == 0.0) z = cplx(z.real(), 0.0);
    return std::log(z);
}

cplx ln_gamma(cplx z) {
    if (is_nonpositive_integer(z))
        throw MathError(ErrorKind::Pole, "ln_gamma: pole at " + fmt(z));
    if (z.real() >= 0.5) return ln_gamma_right(z);
    // Shift right with principal logs; this keeps the principal branch.
    int n = static_cast<int>(std::ceil(0.5 - z.real()));
    cplx acc = 0.0;
    for (int k = 0; k < n; ++k) acc += principal_log(z + double(k));
    return ln_gamma_right(z + double(n)) - acc;
}

cplx gamma(cplx z) {
    if (is_nonpositive_integer(z))
        throw MathError(ErrorKind::Pole, "gamma: pole at " + fmt(z));
    if (z.real() >= 0.5) return std::exp(ln_gamma_right(z));
    return kPi / (sin_pi(z) * std::exp(ln_gamma_right(1.0 - z)));
}

cplx rgamma(cplx z) {
    if (is_nonpositive_integer(z)) return 0.0;
    if (z.real() >= 0.5) return std::exp(-ln_gamma_right(z));
    return sin_pi(z) * std::exp(ln_gamma_right(1.0 - z)) / kPi;
}

cplx pochhammer(cplx a, unsigned n) {
    cplx r = 1.0;
    for (unsigned k = 0; k < n; ++k) r *= a + double(k);
    return r;
}

cplx gamma_ratio(std::initializer_list<cplx> num, std::initializer_list<cplx> den) {
    constexpr double kNear = 1e-9;
    cplx log_sum = 0.0;
    cplx factor = 1.0;
    for (cplx a : num) {
        if (is_nonpositive_integer(a))
            throw MathError(ErrorKind::Pole, "gamma_ratio: numerator pole at " + fmt(a));
        if (dist_to_nonpositive_integer(a) < kNear)
            factor *= gamma(a);
        else
            log_sum += ln_gamma(a);
    }
    for (cplx b : den) {
        if (dist_to_nonpositive_integer(b) < kNear)
            factor *= rgamma(b);
        else
            log_sum -= ln_gamma(b);
    }
    if (factor == 0.0) return 0.0;
    return factor * std::exp(log_sum);
}

cplx principal_pow(cplx base, cplx exponent) {
    if (exponent.imag() == 0.0 && exponent.real() == std::round(exponent.real()) &&
        std::fabs(exponent.real()) <= 1e6) {
        long long n = static_cast<long long>(exponent.real());
        if (base == 0.0 && n < 0)
            throw MathError(ErrorKind::Domain, "principal_pow: zero base with negative exponent");
        return ipow(base, n);
    }
    if (base == 0.0) {
        if (exponent.real() > 0.0) return 0.0;
        throw MathError(ErrorKind::Domain, "principal_pow: zero base with exponent " + fmt(exponent));
    }
    if (base.imag() == 0.0 && base.real() < 0.0)
        throw MathError(ErrorKind::Cut,
                        "principal_pow: base " + fmt(base) + " on (-inf,0] with non-integer exponent");
    return std::exp(exponent * std::log(base));
}

bool in_d1(cplx x) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
    return !(x.imag() == 0.0 && std::fabs(x.real()) >= 1.0);
}

bool in_d1_plus(cplx x) { return in_d1(x) && x.real() > 0.0; }

bool in_d2(cplx x) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
    return !(x.imag() == 0.0 && x.real() <= 1.0);
}

bool in_d2_plus(cplx x) { return in_d2(x) && x.real() > 0.0; }

bool in_d3(cplx x) { return in_d2(-x); }

cplx z2m1_pow(cplx z, cplx alpha) {
    if (!in_d2(z)) throw MathError(ErrorKind::Domain, "z2m1_pow: z = " + fmt(z) + " not in D2");
    return principal_pow(z + 1.0, alpha) * principal_pow(z - 1.0, alpha);
}

cplx root_y(RootVariant variant, cplx x) {
    if (variant == RootVariant::Y1) {
        if (!in_d1(x)) throw MathError(ErrorKind::Domain, "root_y(Y1): x = " + fmt(x) + " not in D1");
        return kI * std::sqrt(1.0 - x * x);
    }
    if (x.imag() == 0.0 && std::fabs(x.real()) <= 1.0)
        throw MathError(ErrorKind::Domain, "root_y(Y2): x = " + fmt(x) + " in [-1,1]");
    return x * std::sqrt(1.0 - 1.0 / (x * x));
}

}  // namespace ferrox
