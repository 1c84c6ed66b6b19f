#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ferrox/ferrers.hpp"
#include "ferrox/fourier.hpp"
#include "testing.hpp"

using namespace ferrox;
using testing::rel_diff;
using testing::rel_err;

TEST_CASE("convergence classes follow Re mu") {
    const double third = kPi / 3.0, half = kPi / 2.0;
    for (double theta : {third, half, 2.5}) {
        const bool hp = theta == half;
        CHECK(convergence_class(-0.5, theta).cls == ConvergenceClass::Absolute);
        CHECK(convergence_class(cplx(-0.01, 3.0), theta).cls == ConvergenceClass::Absolute);
        CHECK(convergence_class(0.0, theta).cls == ConvergenceClass::Conditional);
        CHECK(convergence_class(0.25, theta).cls == ConvergenceClass::Conditional);
        CHECK(convergence_class(0.25, theta).absolute_at_half_pi == hp);
        const ConvergenceClass big = hp ? ConvergenceClass::Unclassified : ConvergenceClass::Divergent;
        CHECK(convergence_class(0.5, theta).cls == big);
        CHECK(convergence_class(1.0, theta).cls == big);
    }
    CHECK_THROWS_AS(convergence_class(0.2, 0.0), MathError);
    CHECK_THROWS_AS(convergence_class(0.2, kPi), MathError);
    CHECK(std::string(to_string(ConvergenceClass::Conditional)) == "Conditional");
}

TEST_CASE("partial sum for the Legendre function of the second kind of degree one") {
    FourierTermStream s{1.0, 0.0, kPi / 3.0};
    cplx sum = fourier_partial_sum(s, 10000);
    cplx want = ferrers_q({1.0, 0.0}, 0.5).value;
    CHECK(std::abs(sum - want) < 1e-3);
}

TEST_CASE("absolutely convergent sums reproduce Ferrers Q") {
    for (cplx mu : {cplx(-0.5), cplx(-0.8, 0.3), cplx(-1.2)})
        for (cplx nu : {cplx(0.3), cplx(1.7), cplx(-0.4, 0.2)})
            for (double theta : {0.5, 1.2, 2.4}) {
                FourierTermStream s{nu, mu, theta};
                cplx q = ferrers_q({nu, mu}, std::cos(theta)).value;
                INFO("nu=" << nu << " mu=" << mu << " theta=" << theta);
                CHECK(rel_diff(fourier_partial_sum(s, 2000), q) < 1e-3);
            }
}

TEST_CASE("coefficients approach their asymptotic size") {
    for (cplx mu : {cplx(-0.5), cplx(0.0), cplx(0.25), cplx(0.5, 0.2), cplx(1.0)})
        for (cplx nu : {cplx(0.3), cplx(1.7), cplx(-0.4, 0.2)}) {
            INFO("nu=" << nu << " mu=" << mu);
            CHECK(coefficient_asymptotic_ratio(nu, mu, 10000) == doctest::Approx(1.0).epsilon(0.05));
        }
}

TEST_CASE("coefficients match their closed form for small k") {
    cplx nu(0.3, 0.1), mu(0.2, 0.0);
    for (std::size_t k : {0u, 1u, 5u}) {
        cplx want = ferrox::gamma(nu + mu + double(k) + 1.0) / ferrox::gamma(nu + double(k) + 1.5) * pochhammer(mu + 0.5, int(k)) /
                    ferrox::gamma(double(k) + 1.0);
        CHECK(rel_err(fourier_coefficient(nu, mu, k), want) < 1e-12);
    }
}

TEST_CASE("divergent sums do not settle") {
    FourierTermStream s{0.3, 1.0, kPi / 3.0};
    // Terms grow linearly in k, so the partial sums keep moving by O(N).
    double d1 = std::abs(fourier_partial_sum(s, 2000) - fourier_partial_sum(s, 1000));
    double d2 = std::abs(fourier_partial_sum(s, 8000) - fourier_partial_sum(s, 4000));
    CHECK(d2 > d1);
    CHECK(std::abs(fourier_term(s, 5000)) > 1.0);
}

TEST_CASE("cosine lemma witnesses") {
    LemmaReport r = lemma_checks(0.3, 2.0 * kPi / 3.0, kPi / 3.0, 100000);
    CHECK(r.sum_exceeds_threshold);
    CHECK_FALSE(r.exceptional);
    CHECK(r.window_floor >= r.window_floor_bound - 1e-12);
    CHECK(r.window_floor_bound > 0.0);

    // At theta = pi/2 the terms are |cos(a pi/2)|/k, which vanish for odd a.
    LemmaReport e = lemma_checks(1.0, kPi, kPi / 2.0, 1000);
    CHECK(e.exceptional);
    CHECK_FALSE(e.stated_exception);
    CHECK(e.abs_cos_sum < 1e-9);
    CHECK_FALSE(e.sum_exceeds_threshold);

    LemmaReport s = lemma_checks(kPi / 2.0, kPi, kPi / 2.0, 1000);
    CHECK(s.stated_exception);
    CHECK_FALSE(s.exceptional);
    CHECK(s.sum_exceeds_threshold);

    CHECK_THROWS_AS(lemma_checks(0.3, 1.0, 1.0, 10), MathError);
}

TEST_CASE("property: the window floor respects its lower bound for real a and b") {
    struct Case {
        double a, b;
    };
    testing::for_all(
        200, 51,
        [](testing::Rng& g) {
            double b = g.uniform(0.05, kPi - 0.05);
            return Case{g.uniform(-5, 5), b};
        },
        [](const Case& c, int i) {
            INFO("case " << i << " a=" << c.a << " b=" << c.b);
            LemmaReport r = lemma_checks(c.a, c.b, 1.0, 500);
            CHECK(r.window_floor >= r.window_floor_bound - 1e-12);
        });
}
