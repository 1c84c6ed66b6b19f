#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ferrox/complexmath.hpp"
#include "ferrox/hyp2f1.hpp"

namespace ferrox {

// Degree nu and order mu. Membership tests treat anything within
// kNearExclusion of the excluded set as excluded.
struct ParamPair {
    cplx nu, mu;

    bool mu_integer() const;
    bool two_mu_integer() const;
    bool two_nu_integer() const;
    bool nu_half_integer() const;  // nu + 1/2 in Z
    bool nu_mu_neg_n() const;      // nu + mu in {-1, -2, ...}
    bool nu_mu_neg_n0() const;     // nu + mu in {0, -1, -2, ...}
    bool nu_mu_integer() const;
    bool nu_mu_pos_n() const;      // nu + mu in {1, 2, ...}
};

inline constexpr double kNearExclusion = 1e-9;

enum class RepresentationId {
    I1, I2, I3, I4, I5, I6, I7,
    II1, II2, II3, II4, II5, II6,
    III1Upper, III1Lower, III2Upper, III2Lower, III3Upper, III3Lower,
    FourierUV
};

inline constexpr std::array<RepresentationId, 20> kAllRepresentations = {
    RepresentationId::I1,        RepresentationId::I2,        RepresentationId::I3,
    RepresentationId::I4,        RepresentationId::I5,        RepresentationId::I6,
    RepresentationId::I7,        RepresentationId::II1,       RepresentationId::II2,
    RepresentationId::II3,       RepresentationId::II4,       RepresentationId::II5,
    RepresentationId::II6,       RepresentationId::III1Upper, RepresentationId::III1Lower,
    RepresentationId::III2Upper, RepresentationId::III2Lower, RepresentationId::III3Upper,
    RepresentationId::III3Lower, RepresentationId::FourierUV};

const char* to_string(RepresentationId rep);
std::optional<RepresentationId> representation_from_string(std::string_view name);

enum class DomainId { D1, D1Plus, D2, D2Plus, D3 };
const char* to_string(DomainId d);
bool in_domain(DomainId d, cplx x);

struct EvalOutcome {
    cplx value;
    std::optional<RepresentationId> rep;
    std::size_t terms_used = 0;
    double tail_estimate = 0.0;
};

// Legendre functions on the plane cut along (-inf, 1].
EvalOutcome legendre_p(const ParamPair& p, cplx z, double tol = kDefaultTol);
EvalOutcome legendre_q(const ParamPair& p, cplx z, double tol = kDefaultTol);
// Q / (e^{i pi mu} Gamma(nu+mu+1)), entire in the parameters.
EvalOutcome legendre_qbold(const ParamPair& p, cplx z, double tol = kDefaultTol);

// Ferrers function of the first kind on D1.
EvalOutcome ferrers_p(const ParamPair& p, cplx x, double tol = kDefaultTol);

// Why rep cannot be used at (p, x); empty when it can.
std::optional<std::string> representation_unavailable(RepresentationId rep, const ParamPair& p, cplx x);

// Arguments of the hypergeometric factors in rep, as indices 1..18 into the
// argument list of the regions module (Group III uses the root Y1).
std::vector<int> representation_arguments(RepresentationId rep);

// Ferrers Q through one specific representation.
EvalOutcome ferrers_q_rep(RepresentationId rep, const ParamPair& p, cplx x, double tol = kDefaultTol);

// A half-plane representation (I5, I6, II2, II4) continued onto real x in
// (-1, 1) from the given side; its 2F1 factors then sit on the cut and take
// the boundary values of f21_cut. II4 needs x > 0.
EvalOutcome ferrers_q_rep_on_cut(RepresentationId rep, const ParamPair& p, double x, CutSide side,
                                 double tol = kDefaultTol);

// Ferrers Q through the best available representation.
EvalOutcome ferrers_q(const ParamPair& p, cplx x, double tol = kDefaultTol);

// Half-sum of boundary values of Q across (-1, 1), evaluated at x +- i eps.
EvalOutcome ferrers_q_via_limit(const ParamPair& p, double x, double eps = 1e-7, double tol = kDefaultTol);

// Residuals |lhs - rhs| / (|lhs| + |rhs| + 1) of the connection relations that
// apply at (p, x).
std::vector<std::pair<std::string, double>> connection_residuals(const ParamPair& p, cplx x,
                                                                  double tol = kDefaultTol);

// Residual of the associated Legendre equation for f at x, from five-point
// central differences with step h, divided by the sum of the magnitudes of its
// three terms. x must keep a distance of at least 0.01 from +-1.
double legendre_ode_residual(const std::function<cplx(cplx)>& f, const ParamPair& p, cplx x, double h = 1e-4);

// Alternative printed forms, exposed for cross-checks.
// Euler-transformed x^2 representation.
cplx ferrers_q_ii3_euler(const ParamPair& p, cplx x, double tol = kDefaultTol);
// Euler-transformed (1-x)/2 representation.
cplx ferrers_q_i1_euler(const ParamPair& p, cplx x, double tol = kDefaultTol);
// Trigonometric forms of the Group III representations at x = cos(theta).
cplx ferrers_q_theta_form(RepresentationId rep, const ParamPair& p, cplx theta, double tol = kDefaultTol);

}  // namespace ferrox
