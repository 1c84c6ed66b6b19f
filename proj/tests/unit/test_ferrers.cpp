#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "ferrox/ferrers.hpp"
#include "mp_values.hpp"
#include "testing.hpp"

using namespace ferrox;
using R = RepresentationId;
using testing::rel_diff;
using testing::rel_err;

namespace {

const std::vector<ParamPair> kGrid = [] {
    std::vector<ParamPair> g;
    for (cplx nu : {cplx(0.3), cplx(1.7), cplx(-0.4, 0.2)})
        for (cplx mu : {cplx(0.25), cplx(-0.6), cplx(0.1, 0.1)}) g.push_back({nu, mu});
    return g;
}();

const std::vector<cplx> kPoints = {0.9, -0.9, 0.5, -0.5, 0.1, -0.1, cplx(0.3, 0.4), cplx(0.3, -0.4)};

bool half_plane(R rep) { return rep == R::I5 || rep == R::I6 || rep == R::II2 || rep == R::II4; }

}  // namespace

TEST_CASE("Ferrers functions against reference values") {
    for (const auto& r : oracle::kFerrersQ) {
        INFO("nu=" << r.nu << " mu=" << r.mu << " x=" << r.x);
        CHECK(rel_err(ferrers_q({r.nu, r.mu}, r.x).value, r.value) < 1e-10);
    }
    for (const auto& r : oracle::kFerrersP) {
        INFO("nu=" << r.nu << " mu=" << r.mu << " x=" << r.x);
        CHECK(rel_err(ferrers_p({r.nu, r.mu}, r.x).value, r.value) < 1e-10);
    }
}

TEST_CASE("Legendre functions off the interval against reference values") {
    for (const auto& r : oracle::kLegendreQ) {
        INFO("nu=" << r.nu << " mu=" << r.mu << " z=" << r.x);
        CHECK(rel_err(legendre_q({r.nu, r.mu}, r.x).value, r.value) < 1e-10);
    }
    for (const auto& r : oracle::kLegendreP) {
        INFO("nu=" << r.nu << " mu=" << r.mu << " z=" << r.x);
        CHECK(rel_err(legendre_p({r.nu, r.mu}, r.x).value, r.value) < 1e-10);
    }
}

TEST_CASE("elementary closed forms at integer degree") {
    for (double x : {-0.8, -0.3, 0.5, 0.75}) {
        const double q0 = 0.5 * std::log((1.0 + x) / (1.0 - x));
        CHECK(rel_err(ferrers_q({0.0, 0.0}, x).value, q0) < 1e-12);
        CHECK(rel_err(ferrers_q({1.0, 0.0}, x).value, x * q0 - 1.0) < 1e-12);
        CHECK(rel_err(ferrers_p({1.0, 0.0}, x).value, x) < 1e-13);
    }
    CHECK(rel_err(ferrers_q_rep(R::II3, {0.0, 0.0}, 0.5).value, 0.54930614433405485) < 1e-12);
    CHECK(rel_err(ferrers_q_rep(R::FourierUV, {1.0, 0.0}, 0.5).value, -0.72534692783297257) < 1e-10);
}

TEST_CASE("all available representations agree on the parameter grid") {
    for (const ParamPair& p : kGrid)
        for (cplx x : kPoints) {
            cplx ref = ferrers_q(p, x).value;
            int used = 0;
            for (R rep : kAllRepresentations) {
                if (representation_unavailable(rep, p, x)) continue;
                ++used;
                INFO("rep " << std::string(to_string(rep)) << " nu=" << p.nu << " mu=" << p.mu << " x=" << x);
                CHECK(rel_diff(ferrers_q_rep(rep, p, x).value, ref) < 1e-8);
            }
            CHECK(used >= 3);
        }
}

TEST_CASE("exclusions are reported with a reason") {
    CHECK(*representation_unavailable(R::I1, {0.3, 1.0}, 0.5) == "μ ∈ ℤ");
    CHECK(*representation_unavailable(R::I5, {0.5, 0.2}, cplx(0.2, 0.1)) == "2ν ∈ ℤ");
    CHECK(*representation_unavailable(R::II2, {1.5, 0.2}, cplx(0.2, 0.1)) == "ν+½ ∈ ℤ");
    CHECK(*representation_unavailable(R::III3Upper, {0.3, 0.5}, cplx(0.2, 0.1)) == "2μ ∈ ℤ");
    CHECK(representation_unavailable(R::I5, {0.3, 0.2}, 0.5).has_value());
    CHECK(representation_unavailable(R::I1, {0.3, 0.2}, 2.0).has_value());
    CHECK_FALSE(representation_unavailable(R::II3, {0.3, 1.0}, 0.5).has_value());
    CHECK_THROWS_AS(ferrers_q_rep(R::I1, {0.3, 1.0}, 0.5), MathError);
}

TEST_CASE("domain errors") {
    try {
        ferrers_q({0.3, 0.2}, 1.5);
        FAIL("expected a domain error");
    } catch (const MathError& e) {
        CHECK(e.kind() == ErrorKind::Domain);
    }
    CHECK_THROWS_AS(ferrers_q_via_limit({0.3, 0.2}, 1.2), MathError);
    CHECK_THROWS_AS(legendre_q({0.3, 0.2}, 0.5), MathError);
}

TEST_CASE("the boundary-value limit of Q reproduces the Ferrers function") {
    // Absolute: the O(eps) offset of the limit dominates near zeros of Q.
    for (const ParamPair& p : kGrid)
        for (int k = 1; k <= 20; ++k) {
            double x = -1.0 + 2.0 * k / 21.0;
            INFO("nu=" << p.nu << " mu=" << p.mu << " x=" << x);
            CHECK(std::abs(ferrers_q_via_limit(p, x, 1e-7).value - ferrers_q(p, x).value) < 1e-5);
        }
}

TEST_CASE("connection relations hold") {
    for (const ParamPair& p : kGrid)
        for (cplx x : {cplx(0.2, 0.3), cplx(-0.5, 0.6), cplx(0.7, 0.1), cplx(0.2, -0.3), cplx(-0.5, -0.6)}) {
            auto res = connection_residuals(p, x);
            CHECK_FALSE(res.empty());
            for (const auto& [name, r] : res) {
                INFO("relation " << name << " nu=" << p.nu << " mu=" << p.mu << " x=" << x);
                CHECK(r < 1e-9);
            }
        }
}

TEST_CASE("alternative printed forms") {
    for (const ParamPair& p : kGrid)
        for (cplx x : {cplx(0.4), cplx(-0.2, 0.3), cplx(0.6, -0.1)}) {
            cplx ref = ferrers_q(p, x).value;
            INFO("nu=" << p.nu << " mu=" << p.mu << " x=" << x);
            CHECK(rel_diff(ferrers_q_ii3_euler(p, x), ref) < 1e-9);
            CHECK(rel_diff(ferrers_q_i1_euler(p, x), ref) < 1e-9);
        }
    for (R rep : {R::III1Upper, R::III2Upper, R::III3Upper})
        for (double theta : {0.4, 0.9, 1.4}) {
            ParamPair p{0.3, 0.25};
            INFO("rep " << std::string(to_string(rep)) << " theta=" << theta);
            CHECK(rel_diff(ferrers_q_theta_form(rep, p, theta), ferrers_q(p, std::cos(theta)).value) < 1e-9);
        }
}

TEST_CASE("half-plane representations continued onto the interval") {
    const ParamPair p{0.3, 0.25};
    for (double x : {-0.7, -0.2, 0.1, 0.45, 0.8}) {
        cplx ref = ferrers_q(p, x).value;
        for (R rep : {R::I5, R::I6, R::II2, R::II4}) {
            if (rep == R::II4 && x <= 0.0) {
                CHECK_THROWS_AS(ferrers_q_rep_on_cut(rep, p, x, CutSide::Above), MathError);
                continue;
            }
            for (CutSide side : {CutSide::Above, CutSide::Below}) {
                INFO("rep " << std::string(to_string(rep)) << " x=" << x);
                CHECK(rel_diff(ferrers_q_rep_on_cut(rep, p, x, side).value, ref) < 1e-8);
            }
        }
    }
    CHECK_THROWS_AS(ferrers_q_rep_on_cut(R::I1, p, 0.3, CutSide::Above), MathError);
}

TEST_CASE("every representation solves the Legendre equation") {
    for (const ParamPair& p : kGrid)
        for (R rep : kAllRepresentations)
            for (cplx x : {cplx(0.3, 0.2), cplx(-0.4, -0.3), cplx(0.5), cplx(-0.6)}) {
                if (half_plane(rep) && x.imag() == 0.0) continue;
                if (representation_unavailable(rep, p, x)) continue;
                INFO("rep " << std::string(to_string(rep)) << " nu=" << p.nu << " mu=" << p.mu << " x=" << x);
                double r = legendre_ode_residual([&](cplx t) { return ferrers_q_rep(rep, p, t, 1e-15).value; }, p, x);
                CHECK(r < 1e-4);
            }
}

TEST_CASE("property: Ferrers P and Q are both solutions and Q is real on the interval for real parameters") {
    struct Case {
        ParamPair p;
        double x;
    };
    testing::for_all(
        150, 41,
        [](testing::Rng& g) {
            return Case{{g.uniform(-0.9, 3.0), g.uniform(-0.9, 0.9)}, g.uniform(-0.95, 0.95)};
        },
        [](const Case& c, int i) {
            INFO("case " << i << " nu=" << c.p.nu << " mu=" << c.p.mu << " x=" << c.x);
            cplx q;
            try {
                q = ferrers_q(c.p, c.x).value;
            } catch (const MathError&) {
                return;
            }
            CHECK(std::fabs(q.imag()) <= 1e-10 * std::max(1.0, std::abs(q)));
            double rp = legendre_ode_residual([&](cplx t) { return ferrers_p(c.p, t).value; }, c.p, c.x);
            CHECK(rp < 1e-4);
        });
}

TEST_CASE("representation names round-trip") {
    for (R rep : kAllRepresentations) CHECK(representation_from_string(to_string(rep)) == rep);
    CHECK_FALSE(representation_from_string("nope").has_value());
}
