#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "ferrox/hyp2f1.hpp"
#include "mp_values.hpp"
#include "testing.hpp"

using namespace ferrox;
using testing::rel_diff;
using testing::rel_err;

TEST_CASE("2F1 against reference values across the plane") {
    for (std::size_t k = 0; k < oracle::kHyp2f1.size(); ++k) {
        const auto& r = oracle::kHyp2f1[k];
        cplx w = oracle::kHyp2f1Args[k];
        INFO("a=" << r.a << " b=" << r.b << " c=" << r.c << " w=" << w);
        CHECK(rel_err(f21({r.a, r.b, r.c}, w).value, r.value) < 1e-10);
    }
}

TEST_CASE("elementary closed forms") {
    // 2F1(1, 1; 2; w) = -log(1 - w) / w
    for (cplx w : {cplx(0.3, 0), cplx(-0.8, 0.2), cplx(-5, 1), cplx(0.9, 0.4), cplx(3, -2)})
        CHECK(rel_err(f21({1, 1, 2}, w).value, -std::log(1.0 - w) / w) < 1e-12);
    // 2F1(a, b; b; w) = (1 - w)^{-a}
    for (cplx w : {cplx(0.5, 0), cplx(-3, 0.5), cplx(2, 1)})
        CHECK(rel_err(f21({0.37, 1.3, 1.3}, w).value, principal_pow(1.0 - w, -0.37)) < 1e-12);
    // 2F1(1/2, 1/2; 3/2; w^2) = asin(w) / w
    for (double w : {0.2, 0.6, 0.95})
        CHECK(rel_err(f21({0.5, 0.5, 1.5}, w * w).value, std::asin(w) / w) < 1e-12);
}

TEST_CASE("terminating series is a polynomial") {
    // 2F1(-2, b; c; w) = 1 - 2bw/c + b(b+1)w^2/(c(c+1))
    cplx b(0.7, 0.2), c(1.9, 0), w(3.5, -1.0);
    cplx want = 1.0 - 2.0 * b * w / c + b * (b + 1.0) * w * w / (c * (c + 1.0));
    SeriesResult r = f21_series({-2, b, c}, w);
    CHECK(rel_err(r.value, want) < 1e-14);
    CHECK(r.terms_used <= 4);
}

TEST_CASE("regularized 2F1 is finite at nonpositive integer c") {
    // F(a, b; -n; w) / Gamma(-n) = (a)_{n+1} (b)_{n+1} w^{n+1} / (n+1)! F(a+n+1, b+n+1; n+2; w)
    cplx a(0.4, 0), b(1.3, 0), w(0.3, 0.1);
    cplx lhs = f21_regularized({a, b, -1.0}, w).value;
    cplx rhs = a * (a + 1.0) * b * (b + 1.0) * w * w / 2.0 * f21({a + 2.0, b + 2.0, 3.0}, w).value;
    CHECK(rel_err(lhs, rhs) < 1e-12);
}

TEST_CASE("the series reports convergence diagnostics") {
    SeriesResult r = f21_series({0.5, 0.25, 1.5}, cplx(0.4, 0.2), 1e-14);
    CHECK(r.terms_used > 5);
    CHECK(r.tail_estimate <= 1e-14);
}

TEST_CASE("property: Euler and Pfaff transformations") {
    struct Case {
        HypParams p;
        cplx w;
    };
    testing::for_all(
        300, 21,
        [](testing::Rng& g) {
            HypParams p{g.noninteger(3.0), g.noninteger(3.0), g.noninteger(3.0)};
            cplx w = g.box(-4, 4, -4, 4);
            if (std::fabs(w.imag()) < 0.05 && w.real() > 0.95) w += cplx(0, 0.3);
            if (std::abs(w - 1.0) < 0.1) w = cplx(0.5, 0.5);
            return Case{p, w};
        },
        [](const Case& c, int i) {
            INFO("case " << i << " a=" << c.p.a << " b=" << c.p.b << " c=" << c.p.c << " w=" << c.w);
            const cplx a = c.p.a, b = c.p.b, cc = c.p.c, w = c.w;
            cplx f = f21(c.p, w).value;
            double scale = std::abs(f);
            cplx euler = principal_pow(1.0 - w, cc - a - b) * f21({cc - a, cc - b, cc}, w).value;
            cplx pfaff = principal_pow(1.0 - w, -a) * f21({a, cc - b, cc}, w / (w - 1.0)).value;
            cplx swap = f21({b, a, cc}, w).value;
            // Relative to the largest of the pieces, since cancellation can make f small.
            double big = std::max(scale, 1e-3);
            CHECK(std::abs(f - euler) / big < 1e-9);
            CHECK(std::abs(f - pfaff) / big < 1e-9);
            CHECK(std::abs(f - swap) / big < 1e-10);
        });
}

TEST_CASE("boundary values on the cut against reference values") {
    for (const auto& r : oracle::kCut) {
        INFO("a=" << r.a << " b=" << r.b << " c=" << r.c << " x=" << r.x);
        CHECK(rel_err(f21_cut({r.a, r.b, r.c}, r.x, CutSide::Above).value, r.above) < 1e-10);
        CHECK(rel_err(f21_cut({r.a, r.b, r.c}, r.x, CutSide::Below).value, r.below) < 1e-10);
    }
}

TEST_CASE("property: the four cut formulas agree, match nearby values, and obey Schwarz reflection") {
    struct Case {
        HypParams p;
        double x;
    };
    testing::for_all(
        200, 22,
        [](testing::Rng& g) {
            for (;;) {
                double a = g.uniform(-2.5, 2.5), b = g.uniform(-2.5, 2.5), c = g.uniform(-2.5, 3.5);
                bool ok = true;
                for (double d : {a, b, c, a - b, c - a - b, c - a, c - b})
                    if (ferrox::dist_to_integer(d) < 0.05) ok = false;
                if (ok) return Case{{a, b, c}, g.uniform(1.1, 5.0)};
            }
        },
        [](const Case& c, int i) {
            INFO("case " << i << " a=" << c.p.a << " b=" << c.p.b << " c=" << c.p.c << " x=" << c.x);
            for (CutSide side : {CutSide::Above, CutSide::Below}) {
                std::vector<cplx> vals;
                for (CutFormula f : {CutFormula::B1, CutFormula::B2, CutFormula::B3, CutFormula::B4}) {
                    try {
                        vals.push_back(f21_cut_formula(f, c.p, c.x, side).value);
                    } catch (const MathError& e) {
                        CHECK(e.kind() == ErrorKind::Degenerate);
                    }
                }
                REQUIRE(vals.size() >= 2);
                for (std::size_t k = 0; k < vals.size(); ++k)
                    for (std::size_t m = k + 1; m < vals.size(); ++m) CHECK(rel_diff(vals[k], vals[m]) < 1e-8);
                const double s = side == CutSide::Above ? 1.0 : -1.0;
                cplx near = f21(c.p, cplx(c.x, s * 1e-7)).value;
                CHECK(rel_diff(f21_cut(c.p, c.x, side).value, near) < 1e-5);
            }
            cplx up = f21_cut(c.p, c.x, CutSide::Above).value, dn = f21_cut(c.p, c.x, CutSide::Below).value;
            CHECK(rel_diff(up, std::conj(dn)) < 1e-12);
        });
}

TEST_CASE("cut formulas reject points off the cut") {
    CHECK_THROWS_AS(f21_cut({0.3, 0.7, 1.2}, 0.5, CutSide::Above), MathError);
}
