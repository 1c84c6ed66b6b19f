#pragma once

#include <cstddef>

#include "ferrox/complexmath.hpp"

namespace ferrox {

// Fourier expansion of Ferrers Q at x = cos(theta):
//   sqrt(pi) 2^mu sin(theta)^mu sum_k c_k cos((nu+mu+2k+1) theta),
//   c_k = Gamma(nu+mu+k+1)/Gamma(nu+k+3/2) (mu+1/2)_k / k!.
struct FourierTermStream {
    cplx nu, mu;
    double theta;  // in (0, pi)
};

// c_k alone, without the cosine and the sin(theta)^mu prefactor.
cplx fourier_coefficient(cplx nu, cplx mu, std::size_t k);

cplx fourier_term(const FourierTermStream& s, std::size_t k);

// Plain partial sum of terms 0..n_terms-1; no acceleration.
cplx fourier_partial_sum(const FourierTermStream& s, std::size_t n_terms);

enum class ConvergenceClass { Absolute, Conditional, Divergent, Unclassified };
const char* to_string(ConvergenceClass c);

struct ConvergenceInfo {
    ConvergenceClass cls;
    // Conditional case at theta = pi/2, where absolute convergence is not ruled out.
    bool absolute_at_half_pi = false;
};

// Classification by Re mu. Re mu >= 1/2 at theta = pi/2 is left Unclassified.
ConvergenceInfo convergence_class(cplx mu, double theta);

// |c_k| k^{1 - 2 Re mu} |Gamma(mu + 1/2)|, which tends to 1. Evaluated as a
// single gamma ratio so that it is also defined where mu + 1/2 is a pole.
double coefficient_asymptotic_ratio(cplx nu, cplx mu, std::size_t k);

struct LemmaReport {
    // sum_{k=1}^{n_max} |cos((a+2k) theta)| / k against 0.2 ln(n_max)
    double abs_cos_sum = 0.0;
    double log_threshold = 0.0;
    bool sum_exceeds_threshold = false;
    // At theta = pi/2 every term equals |cos(a pi/2)| / k, so the sum is zero
    // exactly when cos(a pi/2) = 0.
    bool exceptional = false;
    // The exception as usually stated, cos a = 0 with theta = pi/2.
    bool stated_exception = false;

    // min over n < n_max of max(|cos(a+bn)|, |cos(a+b(n+1))|)
    double window_floor = 0.0;
    // Lower bound |sin b| / sqrt((1+|cos b|)^2 + sin^2 b) for real a, b; 0 otherwise.
    double window_floor_bound = 0.0;
};

// Numeric witnesses for the two cosine lemmas behind the convergence classes.
LemmaReport lemma_checks(cplx a, cplx b, double theta, std::size_t n_max);

}  // namespace ferrox
