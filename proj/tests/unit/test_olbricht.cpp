#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <utility>

#include "ferrox/olbricht.hpp"
#include "testing.hpp"

using namespace ferrox;
using G = OlbrichtGroup;
using testing::rel_diff;
using testing::rel_err;

namespace {

const std::vector<ParamPair> kParams = {{0.3, 0.4}, {1.7, 0.25}, {cplx(-0.4, 0.2), cplx(0.1, 0.1)}};

OlbrichtId id(G g, int k, std::optional<RootVariant> r = std::nullopt) { return {g, k, r}; }

}  // namespace

TEST_CASE("catalogue shape") {
    const auto& cat = olbricht_catalogue();
    CHECK(cat.size() == 88);
    std::set<std::pair<int, int>> entries;
    for (const auto& r : cat) entries.insert({int(r.id.group), r.id.index});
    CHECK(entries.size() == 72);
    CHECK(admitted_roots(G::III, 1).size() == 1);
    CHECK(admitted_roots(G::III, 20).size() == 1);
    CHECK(admitted_roots(G::III, 9).size() == 2);
    CHECK(admitted_roots(G::I, 9).empty());
    CHECK(to_string(id(G::III, 5, RootVariant::Y2)) == "III.5/Y2");
    CHECK(to_string(id(G::II, 13)) == "II.13");
}

TEST_CASE("duplicate entries point at their originals") {
    auto same = [](G g, int k, int original) {
        std::optional<RootVariant> r;
        if (g == G::III) r = RootVariant::Y1;
        const IdentityRecord& rec = identity_record({g, k, r});
        INFO(to_string(rec.id));
        REQUIRE(rec.same_as.has_value());
        CHECK(rec.same_as->group == g);
        CHECK(rec.same_as->index == original);
    };
    for (auto [k, o] : std::vector<std::pair<int, int>>{{3, 1}, {4, 2}, {11, 9}, {12, 10}, {19, 17}, {20, 18}})
        same(G::I, k, o);
    for (auto [k, o] : std::vector<std::pair<int, int>>{{3, 1},   {4, 2},   {6, 5},   {8, 7},   {11, 10}, {12, 9},
                                                          {13, 9},  {14, 10}, {15, 12}, {16, 11}, {17, 1},  {18, 3},
                                                          {19, 2},  {20, 4},  {21, 5},  {22, 6},  {23, 7},  {24, 8}})
        same(G::II, k, o);
    for (auto [k, o] : std::vector<std::pair<int, int>>{{2, 1}, {4, 3}, {6, 5}, {8, 7}, {11, 10}, {12, 9}})
        same(G::III, k, o);
    for (int k = 13; k <= 16; ++k) same(G::III, k, k - 4);
    for (int k = 17; k <= 24; ++k) same(G::III, k, k - 16);
    CHECK_FALSE(identity_record(id(G::I, 1)).same_as.has_value());
}

TEST_CASE("every record satisfies its identity and the Legendre equation") {
    for (const auto& rec : olbricht_catalogue())
        for (const ParamPair& p : kParams) {
            INFO(to_string(rec.id) << " nu=" << p.nu << " mu=" << p.mu);
            IdentityReport rep = verify_identity(rec.id, p, domain_samples(rec.identity_domain));
            CHECK(rep.errors.empty());
            CHECK(rep.max_residual < 1e-8);
            for (cplx x : domain_samples(rec.analytic_domain)) CHECK(ode_residual(rec.id, p, x) < 1e-4);
        }
}

TEST_CASE("sample points lie in their domains") {
    for (OlbrichtDomain d : {OlbrichtDomain::D1, OlbrichtDomain::D1NonReal, OlbrichtDomain::D1NoImagAxis,
                             OlbrichtDomain::D1Plus, OlbrichtDomain::D2, OlbrichtDomain::D2Plus, OlbrichtDomain::D3}) {
        auto xs = domain_samples(d);
        CHECK(xs.size() == 5);
        for (cplx x : xs) CHECK(in_domain(d, x));
    }
}

TEST_CASE("known values") {
    // The first entry is Gamma(1 + mu) times the Ferrers function of order -mu.
    ParamPair p{0.3, 0.4};
    cplx v = eval_olbricht(id(G::I, 1), p, 0.2).value;
    CHECK(rel_err(v, ferrox::gamma(1.4) * ferrers_p({0.3, -0.4}, 0.2).value) < 1e-12);

    // Even and odd solutions in x^2 start as 1 and x.
    CHECK(rel_err(eval_olbricht(id(G::II, 1), p, 0.0).value, 1.0) < 1e-14);
    CHECK(std::abs(eval_olbricht(id(G::II, 2), p, 0.0).value) < 1e-14);
    const double h = 1e-6;
    cplx d = (eval_olbricht(id(G::II, 2), p, h).value - eval_olbricht(id(G::II, 2), p, -h).value) / (2.0 * h);
    CHECK(rel_err(d, 1.0) < 1e-8);
}

TEST_CASE("entries defined outside the interval solve the equation there") {
    ParamPair p{0.3, 0.4};
    CHECK(ode_residual(id(G::II, 9), p, 2.0) < 1e-4);
    CHECK(ode_residual(id(G::III, 9, RootVariant::Y2), p, 2.0) < 1e-4);
    CHECK(ode_residual(id(G::III, 5, RootVariant::Y2), p, cplx(-1.5, 0.7)) < 1e-4);
}

TEST_CASE("points outside the analytic domain are rejected") {
    ParamPair p{0.3, 0.4};
    try {
        eval_olbricht(id(G::I, 1), p, 2.0);
        FAIL("expected a domain error");
    } catch (const MathError& e) {
        CHECK(e.kind() == ErrorKind::Domain);
    }
    CHECK_THROWS_AS(eval_olbricht(id(G::II, 9), p, 0.5), MathError);
}

TEST_CASE("property: the two roots agree in the upper half-plane and differ by the Schafke relation below") {
    testing::for_all(
        100, 61, [](testing::Rng& g) { return g.point_d1_nonreal(0.9); },
        [](cplx x, int i) {
            INFO("case " << i << " x=" << x);
            ParamPair p{0.3, 0.4};
            for (int k : {5, 7}) {
                OlbrichtId y1 = id(G::III, k, RootVariant::Y1), y2 = id(G::III, k, RootVariant::Y2);
                cplx v1 = eval_olbricht(y1, p, x).value, v2 = eval_olbricht(y2, p, x).value;
                if (x.imag() > 0) {
                    CHECK(rel_diff(v1, v2) < 1e-10);
                } else {
                    // Below the axis the Y1 version picks up a multiple of P.
                    CHECK(rel_diff(v1, olbricht_reduction(y1, p, x)) < 1e-8);
                    CHECK(rel_diff(v2, olbricht_reduction(y2, p, x)) < 1e-8);
                }
            }
        });
}
