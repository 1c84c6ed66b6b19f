#include "ferrox/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ferrox {

namespace {

constexpr double kHalfPiTol = 1e-12;

void check_theta(double theta) {
    if (!(theta > 0.0 && theta < kPi)) throw MathError(ErrorKind::Domain, "theta must lie in (0, pi)");
}

void check_params(cplx nu, cplx mu) {
    cplx s = nu + mu;
    if (dist_to_integer(s) < 1e-9 && std::round(s.real()) <= -1.0)
        throw MathError(ErrorKind::Parameter, "fourier: ν+μ ∈ −ℕ");
}

bool at_half_pi(double theta) { return std::fabs(theta - kPi / 2.0) < kHalfPiTol; }

}  // namespace

cplx fourier_coefficient(cplx nu, cplx mu, std::size_t k) {
    check_params(nu, mu);
    const double kk = double(k);
    cplx h = mu + 0.5;
    // (mu+1/2)_k / k! through gammas unless mu + 1/2 sits on a pole.
    cplx poch;
    if (is_nonpositive_integer(h)) {
        poch = (double(k) <= -h.real()) ? cplx(1.0) : cplx(0.0);
        for (std::size_t j = 0; j < k && poch != 0.0; ++j) poch *= (h + double(j)) / double(j + 1);
    } else {
        poch = gamma_ratio({h + kk}, {kk + 1.0}) * rgamma(h);
    }
    if (poch == 0.0) return 0.0;
    return gamma_ratio({nu + mu + kk + 1.0}, {nu + kk + 1.5}) * poch;
}

cplx fourier_term(const FourierTermStream& s, std::size_t k) {
    check_theta(s.theta);
    cplx pref = std::sqrt(kPi) * principal_pow(2.0, s.mu) * principal_pow(std::sin(s.theta), s.mu);
    return pref * fourier_coefficient(s.nu, s.mu, k) * std::cos((s.nu + s.mu + 2.0 * double(k) + 1.0) * s.theta);
}

cplx fourier_partial_sum(const FourierTermStream& s, std::size_t n_terms) {
    check_theta(s.theta);
    check_params(s.nu, s.mu);
    cplx pref = std::sqrt(kPi) * principal_pow(2.0, s.mu) * principal_pow(std::sin(s.theta), s.mu);
    cplx sum = 0.0;
    for (std::size_t k = 0; k < n_terms; ++k)
        sum += fourier_coefficient(s.nu, s.mu, k) * std::cos((s.nu + s.mu + 2.0 * double(k) + 1.0) * s.theta);
    return pref * sum;
}

const char* to_string(ConvergenceClass c) {
    switch (c) {
        case ConvergenceClass::Absolute: return "Absolute";
        case ConvergenceClass::Conditional: return "Conditional";
        case ConvergenceClass::Divergent: return "Divergent";
        case ConvergenceClass::Unclassified: return "Unclassified";
    }
    return "?";
}

ConvergenceInfo convergence_class(cplx mu, double theta) {
    check_theta(theta);
    const double m = mu.real();
    if (m < 0.0) return {ConvergenceClass::Absolute, false};
    if (m < 0.5) return {ConvergenceClass::Conditional, at_half_pi(theta)};
    if (at_half_pi(theta)) return {ConvergenceClass::Unclassified, false};
    return {ConvergenceClass::Divergent, false};
}

double coefficient_asymptotic_ratio(cplx nu, cplx mu, std::size_t k) {
    double kk = double(k);
    check_params(nu, mu);
    // c_k Gamma(mu+1/2) written as one gamma ratio, which stays finite when
    // mu + 1/2 is a pole of Gamma and c_k vanishes.
    cplx g = gamma_ratio({nu + mu + kk + 1.0, mu + 0.5 + kk}, {nu + kk + 1.5, kk + 1.0});
    return std::abs(g) * std::pow(kk, 1.0 - 2.0 * mu.real());
}

LemmaReport lemma_checks(cplx a, cplx b, double theta, std::size_t n_max) {
    check_theta(theta);
    if (n_max < 100) throw MathError(ErrorKind::Parameter, "lemma_checks: n_max must be at least 100");
    LemmaReport r;
    for (std::size_t k = 1; k <= n_max; ++k)
        r.abs_cos_sum += std::abs(std::cos((a + 2.0 * double(k)) * theta)) / double(k);
    r.log_threshold = 0.2 * std::log(double(n_max));
    r.sum_exceeds_threshold = r.abs_cos_sum > r.log_threshold;
    const bool half = at_half_pi(theta);
    r.exceptional = half && std::abs(std::cos(a * kPi / 2.0)) < 1e-12;
    r.stated_exception = half && std::abs(std::cos(a)) < 1e-12;

    r.window_floor = std::numeric_limits<double>::infinity();
    double prev = std::abs(std::cos(a));
    for (std::size_t n = 1; n <= n_max; ++n) {
        double cur = std::abs(std::cos(a + b * double(n)));
        r.window_floor = std::min(r.window_floor, std::max(prev, cur));
        prev = cur;
    }
    if (a.imag() == 0.0 && b.imag() == 0.0) {
        double sb = std::fabs(std::sin(b.real())), cb = std::fabs(std::cos(b.real()));
        r.window_floor_bound = sb / std::sqrt((1.0 + cb) * (1.0 + cb) + sb * sb);
    }
    return r;
}

}  // namespace ferrox
