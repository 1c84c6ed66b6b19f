#include "ferrox/ferrers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ferrox/regions.hpp"

namespace ferrox {

namespace {

using R = RepresentationId;

bool near_integer_at(cplx z, long lo, long hi) {
    if (dist_to_integer(z) >= kNearExclusion) return false;
    double n = std::round(z.real());
    return n >= double(lo) && n <= double(hi);
}

constexpr long kBig = std::numeric_limits<long>::max() / 2;

// Accumulates diagnostics over the hypergeometric factors of one formula.
struct Acc {
    explicit Acc(double t) : tol(t) {}

    double tol;
    std::size_t terms = 0;
    double tail = 0.0;

    // Limit onto (-1, 1) from one side: the half-plane sign is forced and 2F1
    // factors whose argument lands on [1, inf) take boundary values.
    std::optional<double> side;
    std::vector<CutSide> w_sides;  // side of approach per F call, in call order
    std::size_t next_w = 0;
    bool probe = false;            // record the sides instead of using them

    cplx F(cplx a, cplx b, cplx c, cplx w) {
        if (probe) w_sides.push_back(w.imag() > 0.0 ? CutSide::Above : CutSide::Below);
        if (side && !probe) {
            CutSide ws = w_sides.at(next_w++);
            if (w.imag() == 0.0 && w.real() > 1.0) return take(f21_cut({a, b, c}, w.real(), ws, tol));
        }
        return take(f21({a, b, c}, w, tol));
    }
    cplx Fr(cplx a, cplx b, cplx c, cplx w) { return take(f21_regularized({a, b, c}, w, tol)); }
    cplx take(const SeriesResult& r) {
        terms += r.terms_used;
        tail = std::max(tail, r.tail_estimate);
        return r.value;
    }
    EvalOutcome out(cplx v, std::optional<R> rep) const { return {v, rep, terms, tail}; }
};

cplx pw(cplx b, cplx e) { return principal_pow(b, e); }
cplx g(cplx z) { return gamma(z); }
cplx sec_pi(cplx z) { return 1.0 / cos_pi(z); }

std::string xstr(cplx x) {
    return "(" + std::to_string(x.real()) + "," + std::to_string(x.imag()) + ")";
}

// Sign of the half-plane for the +- formulas.
double half_plane_sign(cplx x) { return x.imag() > 0.0 ? 1.0 : -1.0; }
double half_plane_sign(const Acc& acc, cplx x) { return acc.side ? *acc.side : half_plane_sign(x); }

// sin(pi(mu - nu)) / (2 cos(pi nu))
cplx s_factor(const ParamPair& p) { return sin_pi(p.mu - p.nu) / (2.0 * cos_pi(p.nu)); }

// Ferrers P at x with Olver-regularized F, shared by several formulas.
cplx ferrers_p_value(Acc& acc, cplx nu, cplx mu, cplx x) {
    return pw((1.0 + x) / (1.0 - x), mu / 2.0) * acc.Fr(-nu, nu + 1.0, 1.0 - mu, (1.0 - x) / 2.0);
}

cplx eval_rep(R rep, const ParamPair& p, cplx x, Acc& acc) {
    const cplx nu = p.nu, mu = p.mu;
    const cplx i = kI;
    const double pi = kPi;
    const cplx sqpi = std::sqrt(pi);
    const cplx one_m_x2 = 1.0 - x * x;
    switch (rep) {
        case R::I1: {
            cplx t1 = cos_pi(mu) * ferrers_p_value(acc, nu, mu, x);
            cplx t2 = gamma_ratio({nu + mu + 1.0}, {nu - mu + 1.0}) * ferrers_p_value(acc, nu, -mu, x);
            return pi / (2.0 * sin_pi(mu)) * (t1 - t2);
        }
        case R::I2: {
            cplx t1 = cos_pi(nu) * g(mu) * pw((1.0 - x) / (1.0 + x), mu / 2.0) *
                      acc.F(-nu, nu + 1.0, 1.0 - mu, (1.0 + x) / 2.0);
            cplx t2 = cos_pi(nu + mu) * g(-mu) * gamma_ratio({nu + mu + 1.0}, {nu - mu + 1.0}) *
                      pw((1.0 + x) / (1.0 - x), mu / 2.0) * acc.F(-nu, nu + 1.0, 1.0 + mu, (1.0 + x) / 2.0);
            return -0.5 * (t1 + t2);
        }
        case R::I3: {
            cplx w = (x - 1.0) / (x + 1.0);
            cplx t1 = cos_pi(mu) * g(mu) * pw((1.0 + x) / (1.0 - x), mu / 2.0) * acc.F(-nu, -nu - mu, 1.0 - mu, w);
            cplx t2 = gamma_ratio({nu + mu + 1.0}, {nu - mu + 1.0}) * g(-mu) * pw((1.0 - x) / (1.0 + x), mu / 2.0) *
                      acc.F(-nu, mu - nu, 1.0 + mu, w);
            return pw(1.0 + x, nu) / pw(2.0, nu + 1.0) * (t1 + t2);
        }
        case R::I4: {
            cplx w = (x + 1.0) / (x - 1.0);
            cplx t1 = g(mu) * cos_pi(nu) * pw((1.0 - x) / (1.0 + x), mu / 2.0) *
                      acc.F(nu + 1.0, nu - mu + 1.0, 1.0 - mu, w);
            cplx t2 = g(-mu) * cos_pi(nu + mu) * gamma_ratio({nu + mu + 1.0}, {nu - mu + 1.0}) *
                      pw((1.0 + x) / (1.0 - x), mu / 2.0) * acc.F(nu + 1.0, nu + mu + 1.0, 1.0 + mu, w);
            return -pw(2.0, nu) * pw(1.0 - x, -nu - 1.0) * (t1 + t2);
        }
        case R::I5: {
            const double s = half_plane_sign(acc, x);
            const cplx S = s_factor(p);
            cplx w = 2.0 / (1.0 + x);
            cplx t1 = pw(2.0, nu) * (cos_pi(mu) - s * i * S) * gamma_ratio({nu + 1.0, nu + mu + 1.0}, {2.0 * nu + 2.0}) *
                      pw(1.0 + x, -1.0 + mu / 2.0 - nu) * pw(1.0 - x, -mu / 2.0) *
                      acc.F(nu - mu + 1.0, nu + 1.0, 2.0 * nu + 2.0, w);
            cplx t2 = s * i * pi * pw(2.0, -nu - 2.0) * sec_pi(nu) * gamma_ratio({-nu}, {-2.0 * nu, nu - mu + 1.0}) *
                      pw(1.0 + x, nu + mu / 2.0) * pw(1.0 - x, -mu / 2.0) * acc.F(-nu, -nu - mu, -2.0 * nu, w);
            return t1 + t2;
        }
        case R::I6: {
            const double s = half_plane_sign(acc, x);
            const cplx S = s_factor(p);
            cplx w = 2.0 / (1.0 - x);
            cplx t1 = pw(2.0, nu) * std::exp(-s * pi * i * (nu + 1.0)) * (cos_pi(mu) - s * i * S) *
                      gamma_ratio({nu + 1.0, nu + mu + 1.0}, {2.0 * nu + 2.0}) * pw(1.0 + x, mu / 2.0) *
                      pw(1.0 - x, -nu - mu / 2.0 - 1.0) * acc.F(nu + mu + 1.0, nu + 1.0, 2.0 * nu + 2.0, w);
            cplx t2 = s * i * pi * pw(2.0, -nu - 2.0) * std::exp(s * pi * i * nu) * sec_pi(nu) *
                      gamma_ratio({-nu}, {-2.0 * nu, nu - mu + 1.0}) * pw(1.0 + x, mu / 2.0) *
                      pw(1.0 - x, nu - mu / 2.0) * acc.F(-nu, mu - nu, -2.0 * nu, w);
            return t1 + t2;
        }
        case R::I7: {
            cplx a = nu + mu;
            cplx pp = ferrers_p_value(acc, nu, mu, x);
            cplx pm = ferrers_p_value(acc, nu, mu, -x);
            return pi / 2.0 * (cos_pi(a) / sin_pi(a) * pp - pm / sin_pi(a));
        }
        case R::II1: {
            cplx w = one_m_x2;
            cplx t1 = pw(2.0, mu - 1.0) * g(mu) * cos_pi(mu) * pw(one_m_x2, -mu / 2.0) *
                      acc.F((nu - mu + 1.0) / 2.0, (-nu - mu) / 2.0, 1.0 - mu, w);
            cplx t2 = g(-mu) * gamma_ratio({nu + mu + 1.0}, {nu - mu + 1.0}) * pw(one_m_x2, mu / 2.0) /
                      pw(2.0, 1.0 + mu) * acc.F((nu + mu + 1.0) / 2.0, (mu - nu) / 2.0, 1.0 + mu, w);
            return t1 + t2;
        }
        case R::II2: {
            const double s = half_plane_sign(acc, x);
            const cplx S = s_factor(p);
            cplx w = 1.0 / one_m_x2;
            cplx t1 = sqpi * pw(2.0, -nu - 1.0) * std::exp(s * 0.5 * i * pi * (-nu + mu - 1.0)) *
                      (cos_pi(mu) - s * i * S) * gamma_ratio({nu + mu + 1.0}, {nu + 1.5}) *
                      pw(one_m_x2, -nu / 2.0 - 0.5) * acc.F((nu - mu + 1.0) / 2.0, (nu + mu + 1.0) / 2.0, nu + 1.5, w);
            cplx t2 = std::pow(pi, 1.5) * pw(2.0, nu - 1.0) * std::exp(s * 0.5 * i * pi * (nu + mu + 1.0)) * sec_pi(nu) *
                      rgamma(nu - mu + 1.0) * rgamma(0.5 - nu) * pw(one_m_x2, nu / 2.0) *
                      acc.F(-(nu + mu) / 2.0, (mu - nu) / 2.0, 0.5 - nu, w);
            return t1 + t2;
        }
        case R::II3: {
            cplx a = nu + mu;
            cplx w = x * x;
            cplx t1 = -sin_pi(a / 2.0) * gamma_ratio({(a + 1.0) / 2.0}, {(nu - mu + 2.0) / 2.0}) *
                      acc.F(-a / 2.0, (nu - mu + 1.0) / 2.0, 0.5, w);
            cplx t2 = 2.0 * cos_pi(a / 2.0) * gamma_ratio({(a + 2.0) / 2.0}, {(nu - mu + 1.0) / 2.0}) * x *
                      acc.F((1.0 - a) / 2.0, (nu - mu + 2.0) / 2.0, 1.5, w);
            return sqpi * pw(2.0, mu - 1.0) * pw(one_m_x2, -mu / 2.0) * (t1 + t2);
        }
        case R::II4: {
            const double s = half_plane_sign(acc, x);
            const cplx S = s_factor(p);
            cplx w = 1.0 / (x * x);
            cplx t1 = sqpi * pw(2.0, -nu - 1.0) * std::exp(s * i * pi * mu) * (cos_pi(mu) - s * i * S) *
                      gamma_ratio({nu + mu + 1.0}, {nu + 1.5}) * pw(x, -nu - mu - 1.0) * pw(one_m_x2, mu / 2.0) *
                      acc.F((nu + mu + 1.0) / 2.0, (nu + mu + 2.0) / 2.0, nu + 1.5, w);
            cplx t2 = std::pow(pi, 1.5) * pw(2.0, nu - 1.0) * std::exp(s * pi * i * (0.5 + mu)) * sec_pi(nu) *
                      rgamma(nu - mu + 1.0) * rgamma(0.5 - nu) * pw(x, nu - mu) * pw(one_m_x2, mu / 2.0) *
                      acc.F((mu - nu) / 2.0, (mu - nu + 1.0) / 2.0, 0.5 - nu, w);
            return t1 + t2;
        }
        case R::II5: {
            cplx w = (x * x - 1.0) / (x * x);
            cplx t1 = pw(2.0, mu - 1.0) * cos_pi(mu) * g(mu) * pw(one_m_x2, -mu / 2.0) * pw(x, nu + mu) *
                      acc.F((-nu - mu) / 2.0, (1.0 - nu - mu) / 2.0, 1.0 - mu, w);
            cplx t2 = gamma_ratio({nu + mu + 1.0}, {nu - mu + 1.0}) * g(-mu) / pw(2.0, mu + 1.0) *
                      pw(one_m_x2, mu / 2.0) * pw(x, nu - mu) *
                      acc.F((mu - nu) / 2.0, (mu - nu + 1.0) / 2.0, 1.0 + mu, w);
            return t1 + t2;
        }
        case R::II6: {
            cplx a = nu + mu;
            cplx w = x * x / (x * x - 1.0);
            cplx t1 = -gamma_ratio({(a + 1.0) / 2.0}, {(nu - mu + 2.0) / 2.0}) * sin_pi(a / 2.0) / 2.0 *
                      pw(one_m_x2, -(nu + 1.0) / 2.0) * acc.F((nu - mu + 1.0) / 2.0, (a + 1.0) / 2.0, 0.5, w);
            cplx t2 = gamma_ratio({(a + 2.0) / 2.0}, {(nu - mu + 1.0) / 2.0}) * cos_pi(a / 2.0) * x *
                      pw(one_m_x2, (nu - 1.0) / 2.0) * acc.F((mu - nu + 1.0) / 2.0, (1.0 - a) / 2.0, 1.5, w);
            return sqpi * pw(2.0, mu) * (t1 + t2);
        }
        case R::III1Upper:
        case R::III1Lower: {
            const double s = rep == R::III1Upper ? 1.0 : -1.0;
            cplx r = std::sqrt(one_m_x2);
            cplx w = (-s * x + i * r) / (2.0 * i * r);
            cplx t1 = std::exp(s * i * pi / 2.0 * (mu + 0.5)) * gamma_ratio({nu + 0.5}, {nu - mu + 1.0}) *
                      pw(x + s * i * r, nu + 0.5) * acc.F(0.5 + mu, 0.5 - mu, 0.5 - nu, w);
            cplx t2 = std::exp(-s * i * pi / 2.0 * (mu + 0.5)) * gamma_ratio({nu + mu + 1.0}, {nu + 1.5}) *
                      (1.0 + std::exp(s * i * pi * (nu + mu)) * cos_pi(mu) / cos_pi(nu)) *
                      pw(x - s * i * r, nu + 0.5) * acc.F(0.5 + mu, 0.5 - mu, nu + 1.5, w);
            return sqpi / (std::pow(2.0, 1.5) * pw(one_m_x2, 0.25)) * (t1 + t2);
        }
        case R::III2Upper:
        case R::III2Lower: {
            const double s = rep == R::III2Upper ? 1.0 : -1.0;
            cplx r = std::sqrt(one_m_x2);
            cplx w = (x - s * i * r) / (x + s * i * r);
            cplx t1 = std::exp(s * i * pi * (mu + 0.5)) * gamma_ratio({nu + 0.5}, {nu - mu + 1.0}) *
                      pw(x + s * i * r, nu - mu) * acc.F(0.5 + mu, mu - nu, 0.5 - nu, w);
            cplx t2 = gamma_ratio({nu + mu + 1.0}, {nu + 1.5}) *
                      (1.0 + std::exp(s * i * pi * (nu + mu)) * cos_pi(mu) / cos_pi(nu)) *
                      pw(x - s * i * r, nu + mu + 1.0) * acc.F(0.5 + mu, nu + mu + 1.0, nu + 1.5, w);
            return sqpi * pw(2.0, mu - 1.0) * pw(one_m_x2, mu / 2.0) * (t1 + t2);
        }
        case R::III3Upper:
        case R::III3Lower: {
            const double s = rep == R::III3Upper ? 1.0 : -1.0;
            cplx r = std::sqrt(one_m_x2);
            cplx w = 2.0 * i * r / (s * x + i * r);
            cplx t1 = g(-mu) / pw(2.0, mu + 1.0) * gamma_ratio({nu + mu + 1.0}, {nu - mu + 1.0}) *
                      pw(one_m_x2, mu / 2.0) * pw(x + s * i * r, nu - mu) * acc.F(0.5 + mu, mu - nu, 1.0 + 2.0 * mu, w);
            cplx t2 = pw(2.0, mu - 1.0) * g(mu) * cos_pi(mu) * pw(x + s * i * r, nu + mu) / pw(one_m_x2, mu / 2.0) *
                      acc.F(0.5 - mu, -nu - mu, 1.0 - 2.0 * mu, w);
            return t1 + t2;
        }
        case R::FourierUV: {
            cplx r = std::sqrt(one_m_x2);
            cplx u = x + i * r, v = 1.0 / u;
            cplx e = nu + mu + 1.0;
            cplx t1 = pw(u, e) * acc.Fr(mu + 0.5, e, nu + 1.5, u / v);
            cplx t2 = pw(v, e) * acc.Fr(mu + 0.5, e, nu + 1.5, v / u);
            return sqpi * pw(2.0, mu - 1.0) * pw(one_m_x2, mu / 2.0) * gamma(e) * (t1 + t2);
        }
    }
    throw MathError(ErrorKind::Parameter, "unknown representation");
}

struct RepInfo {
    R rep;
    const char* name;
    DomainId domain;  // ignored for half-plane formulas
    bool half_plane;
    std::vector<int> args;
};

const std::vector<RepInfo>& rep_table() {
    static const std::vector<RepInfo> table = {
        {R::I1, "I1", DomainId::D1, false, {1}},
        {R::I2, "I2", DomainId::D1, false, {2}},
        {R::I3, "I3", DomainId::D1, false, {3}},
        {R::I4, "I4", DomainId::D1, false, {4}},
        {R::I5, "I5", DomainId::D1, true, {5}},
        {R::I6, "I6", DomainId::D1, true, {6}},
        {R::I7, "I7", DomainId::D1, false, {1, 2}},
        {R::II1, "II1", DomainId::D1Plus, false, {7}},
        {R::II2, "II2", DomainId::D1, true, {8}},
        {R::II3, "II3", DomainId::D1, false, {9}},
        {R::II4, "II4", DomainId::D1, true, {10}},
        {R::II5, "II5", DomainId::D1Plus, false, {11}},
        {R::II6, "II6", DomainId::D1, false, {12}},
        {R::III1Upper, "III1Upper", DomainId::D1, false, {13}},
        {R::III1Lower, "III1Lower", DomainId::D1, false, {17}},
        {R::III2Upper, "III2Upper", DomainId::D1, false, {14}},
        {R::III2Lower, "III2Lower", DomainId::D1, false, {18}},
        {R::III3Upper, "III3Upper", DomainId::D1Plus, false, {15}},
        {R::III3Lower, "III3Lower", DomainId::D1Plus, false, {16}},
        {R::FourierUV, "FourierUV", DomainId::D1, false, {14, 18}},
    };
    return table;
}

const RepInfo& info(R rep) { return rep_table()[static_cast<std::size_t>(rep)]; }

}  // namespace

bool ParamPair::mu_integer() const { return near_integer_at(mu, -kBig, kBig); }
bool ParamPair::two_mu_integer() const { return near_integer_at(2.0 * mu, -kBig, kBig); }
bool ParamPair::two_nu_integer() const { return near_integer_at(2.0 * nu, -kBig, kBig); }
bool ParamPair::nu_half_integer() const { return near_integer_at(nu + 0.5, -kBig, kBig); }
bool ParamPair::nu_mu_neg_n() const { return near_integer_at(nu + mu, -kBig, -1); }
bool ParamPair::nu_mu_neg_n0() const { return near_integer_at(nu + mu, -kBig, 0); }
bool ParamPair::nu_mu_integer() const { return near_integer_at(nu + mu, -kBig, kBig); }
bool ParamPair::nu_mu_pos_n() const { return near_integer_at(nu + mu, 1, kBig); }

const char* to_string(RepresentationId rep) { return info(rep).name; }

std::optional<RepresentationId> representation_from_string(std::string_view name) {
    for (const RepInfo& r : rep_table())
        if (name == r.name) return r.rep;
    return std::nullopt;
}

const char* to_string(DomainId d) {
    switch (d) {
        case DomainId::D1: return "D1";
        case DomainId::D1Plus: return "D1+";
        case DomainId::D2: return "D2";
        case DomainId::D2Plus: return "D2+";
        case DomainId::D3: return "D3";
    }
    return "?";
}

bool in_domain(DomainId d, cplx x) {
    switch (d) {
        case DomainId::D1: return in_d1(x);
        case DomainId::D1Plus: return in_d1_plus(x);
        case DomainId::D2: return in_d2(x);
        case DomainId::D2Plus: return in_d2_plus(x);
        case DomainId::D3: return in_d3(x);
    }
    return false;
}

std::vector<int> representation_arguments(RepresentationId rep) { return info(rep).args; }

std::optional<std::string> representation_unavailable(RepresentationId rep, const ParamPair& p, cplx x) {
    const RepInfo& ri = info(rep);
    if (!in_d1(x)) return std::string("x not in D1");
    if (ri.half_plane) {
        if (x.imag() == 0.0) return std::string("Im x = 0 (half-plane formula)");
    } else if (!in_domain(ri.domain, x)) {
        return std::string("x not in ") + to_string(ri.domain);
    }
    switch (rep) {
        case R::I1:
        case R::I2:
        case R::I3:
        case R::I4:
        case R::II1:
        case R::II5:
            if (p.mu_integer()) return std::string("μ ∈ ℤ");
            if (p.nu_mu_neg_n()) return std::string("ν+μ ∈ −ℕ");
            break;
        case R::I5:
        case R::I6:
            if (p.two_nu_integer()) return std::string("2ν ∈ ℤ");
            if (p.nu_mu_neg_n0()) return std::string("ν+μ ∈ −ℕ₀");
            break;
        case R::I7:
            // Printed as nu+mu not in -Z, which is the same set as Z.
            if (p.nu_mu_integer()) return std::string("ν+μ ∈ ℤ");
            break;
        case R::II2:
        case R::II4:
        case R::III1Upper:
        case R::III1Lower:
        case R::III2Upper:
        case R::III2Lower:
            if (p.nu_half_integer()) return std::string("ν+½ ∈ ℤ");
            if (p.nu_mu_neg_n()) return std::string("ν+μ ∈ −ℕ");
            break;
        case R::II3:
        case R::FourierUV:
            if (p.nu_mu_neg_n()) return std::string("ν+μ ∈ −ℕ");
            break;
        case R::II6:
            if (p.nu_mu_pos_n()) return std::string("ν+μ ∈ ℕ");
            // The gamma factors have poles on -N as well.
            if (p.nu_mu_neg_n()) return std::string("ν+μ ∈ −ℕ (gamma pole)");
            break;
        case R::III3Upper:
        case R::III3Lower:
            if (p.two_mu_integer()) return std::string("2μ ∈ ℤ");
            if (p.nu_mu_neg_n()) return std::string("ν+μ ∈ −ℕ");
            break;
    }
    return std::nullopt;
}

EvalOutcome legendre_p(const ParamPair& p, cplx z, double tol) {
    if (!in_d2(z)) throw MathError(ErrorKind::Domain, "legendre_p: z = " + xstr(z) + " not in D2");
    Acc acc{tol};
    cplx v = pw((z + 1.0) / (z - 1.0), p.mu / 2.0) * acc.Fr(-p.nu, p.nu + 1.0, 1.0 - p.mu, (1.0 - z) / 2.0);
    return acc.out(v, std::nullopt);
}

EvalOutcome legendre_qbold(const ParamPair& p, cplx z, double tol) {
    if (!in_d2(z)) throw MathError(ErrorKind::Domain, "legendre_qbold: z = " + xstr(z) + " not in D2");
    const cplx nu = p.nu, mu = p.mu;
    Acc acc{tol};
    cplx f = acc.Fr((nu + mu + 2.0) / 2.0, (nu + mu + 1.0) / 2.0, nu + 1.5, 1.0 / (z * z));
    cplx v = std::sqrt(kPi) * z2m1_pow(z, mu / 2.0) / (pw(2.0, nu + 1.0) * pw(z, nu + mu + 1.0)) * f;
    return acc.out(v, std::nullopt);
}

EvalOutcome legendre_q(const ParamPair& p, cplx z, double tol) {
    if (!in_d2(z)) throw MathError(ErrorKind::Domain, "legendre_q: z = " + xstr(z) + " not in D2");
    if (p.nu_mu_neg_n()) throw MathError(ErrorKind::Parameter, "legendre_q: ν+μ ∈ −ℕ");
    EvalOutcome q = legendre_qbold(p, z, tol);
    q.value *= std::exp(kI * kPi * p.mu) * gamma(p.nu + p.mu + 1.0);
    return q;
}

EvalOutcome ferrers_p(const ParamPair& p, cplx x, double tol) {
    if (!in_d1(x)) throw MathError(ErrorKind::Domain, "ferrers_p: x = " + xstr(x) + " not in D1");
    Acc acc{tol};
    return acc.out(ferrers_p_value(acc, p.nu, p.mu, x), std::nullopt);
}

EvalOutcome ferrers_q_rep(RepresentationId rep, const ParamPair& p, cplx x, double tol) {
    if (auto why = representation_unavailable(rep, p, x)) {
        ErrorKind kind = why->rfind("x ", 0) == 0 || why->rfind("Im x", 0) == 0 ? ErrorKind::Domain
                                                                                : ErrorKind::Parameter;
        throw MathError(kind, *why + " excluded by " + to_string(rep));
    }
    Acc acc{tol};
    cplx v = eval_rep(rep, p, x, acc);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw MathError(ErrorKind::Pole, std::string("non-finite value from ") + to_string(rep));
    return acc.out(v, rep);
}

double legendre_ode_residual(const std::function<cplx(cplx)>& f, const ParamPair& p, cplx x, double h) {
    if (std::abs(x - 1.0) <= 0.01 || std::abs(x + 1.0) <= 0.01)
        throw MathError(ErrorKind::Domain, "ode residual: x within 0.01 of a singular point");
    cplx fm2 = f(x - 2.0 * h), fm1 = f(x - h), f0 = f(x), fp1 = f(x + h), fp2 = f(x + 2.0 * h);
    cplx d1 = (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h);
    cplx d2 = (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h);
    const cplx q = 1.0 - x * x;
    cplx t1 = q * d2, t2 = -2.0 * x * d1, t3 = (p.nu * (p.nu + 1.0) - p.mu * p.mu / q) * f0;
    double scale = std::abs(t1) + std::abs(t2) + std::abs(t3);
    if (scale == 0.0) return 0.0;
    return std::abs(t1 + t2 + t3) / scale;
}

EvalOutcome ferrers_q_rep_on_cut(RepresentationId rep, const ParamPair& p, double x, CutSide side, double tol) {
    if (rep != R::I5 && rep != R::I6 && rep != R::II2 && rep != R::II4)
        throw MathError(ErrorKind::Parameter, std::string(to_string(rep)) + " is not a half-plane formula");
    if (!(x > -1.0 && x < 1.0)) throw MathError(ErrorKind::Domain, "x not in (-1, 1)");
    if (rep == R::II4 && !(x > 0.0)) throw MathError(ErrorKind::Domain, "II4 on the cut needs x > 0");
    const double s = side == CutSide::Above ? 1.0 : -1.0;
    const cplx probe_x(x, s * 1e-6);
    if (auto why = representation_unavailable(rep, p, probe_x))
        throw MathError(ErrorKind::Parameter, *why + " excluded by " + to_string(rep));
    // A first pass slightly off the axis records from which side each 2F1
    // argument reaches the ray [1, inf).
    Acc probe{tol};
    probe.probe = true;
    probe.side = s;
    eval_rep(rep, p, probe_x, probe);
    Acc acc{tol};
    acc.side = s;
    acc.w_sides = std::move(probe.w_sides);
    cplx v = eval_rep(rep, p, cplx(x, s * 0.0), acc);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw MathError(ErrorKind::Pole, std::string("non-finite value from ") + to_string(rep));
    return acc.out(v, rep);
}

EvalOutcome ferrers_q(const ParamPair& p, cplx x, double tol) {
    if (!in_d1(x)) throw MathError(ErrorKind::Domain, "x not in D1");
    struct Choice {
        R rep;
        double modulus;
    };
    std::vector<Choice> choices;
    std::string reasons;
    for (R rep : kAllRepresentations) {
        if (auto why = representation_unavailable(rep, p, x)) {
            reasons += std::string(reasons.empty() ? "" : "; ") + to_string(rep) + ": " + *why;
            continue;
        }
        double m = 0.0;
        bool inside = true;
        for (int j : info(rep).args) {
            inside = inside && in_region(j, x, RootVariant::Y1);
            m = std::max(m, std::abs(argument(j, x, RootVariant::Y1)));
        }
        if (!inside) {
            reasons += std::string(reasons.empty() ? "" : "; ") + to_string(rep) + ": series argument outside unit disk";
            continue;
        }
        choices.push_back({rep, m});
    }
    std::stable_sort(choices.begin(), choices.end(),
                     [](const Choice& a, const Choice& b) { return a.modulus < b.modulus; });
    for (const Choice& c : choices) {
        try {
            return ferrers_q_rep(c.rep, p, x, tol);
        } catch (const MathError& e) {
            reasons += std::string("; ") + to_string(c.rep) + ": " + e.what();
        }
    }
    throw MathError(ErrorKind::Parameter, "no valid representation: " + reasons);
}

EvalOutcome ferrers_q_via_limit(const ParamPair& p, double x, double eps, double tol) {
    if (!(x > -1.0 && x < 1.0)) throw MathError(ErrorKind::Domain, "ferrers_q_via_limit: x must lie in (-1, 1)");
    if (p.nu_mu_neg_n()) throw MathError(ErrorKind::Parameter, "ferrers_q_via_limit: ν+μ ∈ −ℕ");
    // e^{-i pi mu} Q = Gamma(nu+mu+1) Qbold
    EvalOutcome up = legendre_qbold(p, cplx(x, eps), tol);
    EvalOutcome dn = legendre_qbold(p, cplx(x, -eps), tol);
    cplx hm = 0.5 * kI * kPi * p.mu;
    cplx v = 0.5 * gamma(p.nu + p.mu + 1.0) * (std::exp(-hm) * up.value + std::exp(hm) * dn.value);
    return {v, std::nullopt, up.terms_used + dn.terms_used, std::max(up.tail_estimate, dn.tail_estimate)};
}

std::vector<std::pair<std::string, double>> connection_residuals(const ParamPair& p, cplx x, double tol) {
    std::vector<std::pair<std::string, double>> out;
    auto rel = [](cplx l, cplx r) { return std::abs(l - r) / (std::abs(l) + std::abs(r) + 1.0); };
    const cplx nu = p.nu, mu = p.mu, i = kI;
    const double pi = kPi;
    cplx fq;
    try {
        fq = ferrers_q(p, x, tol).value;
    } catch (const MathError&) {
        return out;
    }
    auto attempt = [&](const char* name, auto&& rhs) {
        try {
            out.emplace_back(name, rel(fq, rhs()));
        } catch (const MathError&) {
        }
    };
    if (x.imag() != 0.0 && in_d1(x)) {
        const double s = x.imag() > 0.0 ? 1.0 : -1.0;
        auto P = [&](cplx m) { return legendre_p({nu, m}, x, tol).value; };
        auto Q = [&](cplx n) { return legendre_q({n, mu}, x, tol).value; };
        const cplx S = s_factor(p);
        if (s > 0) {
            attempt("a", [&] { return std::exp(-1.5 * pi * i * mu) * Q(nu) + pi * i / 2.0 * std::exp(0.5 * pi * i * mu) * P(mu); });
            if (!p.mu_integer())
                attempt("b", [&] {
                    return 0.5 * pi * cos_pi(mu) / sin_pi(mu) * std::exp(0.5 * pi * i * mu) * P(mu) -
                           pi * std::exp(-0.5 * pi * i * mu) / (2.0 * sin_pi(mu)) *
                               gamma_ratio({nu + mu + 1.0}, {nu - mu + 1.0}) * P(-mu);
                });
            if (!p.nu_half_integer() && !ParamPair{-nu - 1.0, mu}.nu_mu_neg_n())
                attempt("c", [&] {
                    return std::exp(-0.5 * pi * i * mu) * (cos_pi(mu) - i * S) * Q(nu) +
                           i * std::exp(-0.5 * pi * i * mu) * S * Q(-nu - 1.0);
                });
        } else {
            attempt("d", [&] { return std::exp(-0.5 * pi * i * mu) * Q(nu) - pi * i / 2.0 * std::exp(-0.5 * pi * i * mu) * P(mu); });
            if (!p.mu_integer())
                attempt("e", [&] {
                    return 0.5 * pi * cos_pi(mu) / sin_pi(mu) * std::exp(-0.5 * pi * i * mu) * P(mu) -
                           pi * std::exp(0.5 * pi * i * mu) / (2.0 * sin_pi(mu)) *
                               gamma_ratio({nu + mu + 1.0}, {nu - mu + 1.0}) * P(-mu);
                });
            if (!p.nu_half_integer() && !ParamPair{-nu - 1.0, mu}.nu_mu_neg_n())
                attempt("f", [&] {
                    return std::exp(-1.5 * pi * i * mu) * (cos_pi(mu) + i * S) * Q(nu) -
                           i * std::exp(-1.5 * pi * i * mu) * S * Q(-nu - 1.0);
                });
        }
    }
    if (in_d1(x) && !p.mu_integer()) {
        Acc acc{tol};
        attempt("mu-reflection", [&] {
            cplx lhs_scale = 2.0 / pi * sin_pi(mu);
            cplx rhs = cos_pi(mu) * ferrers_p_value(acc, nu, mu, x) -
                       gamma_ratio({nu + mu + 1.0}, {nu - mu + 1.0}) * ferrers_p_value(acc, nu, -mu, x);
            return rhs / lhs_scale;
        });
    }
    return out;
}

cplx ferrers_q_ii3_euler(const ParamPair& p, cplx x, double tol) {
    if (auto why = representation_unavailable(R::II3, p, x)) throw MathError(ErrorKind::Parameter, *why);
    const cplx nu = p.nu, mu = p.mu, a = nu + mu;
    Acc acc{tol};
    cplx w = x * x;
    cplx t1 = -sin_pi(a / 2.0) * gamma_ratio({(a + 1.0) / 2.0}, {(nu - mu + 2.0) / 2.0}) *
              acc.F((a + 1.0) / 2.0, (mu - nu) / 2.0, 0.5, w);
    cplx t2 = 2.0 * cos_pi(a / 2.0) * gamma_ratio({(a + 2.0) / 2.0}, {(nu - mu + 1.0) / 2.0}) * x *
              acc.F((a + 2.0) / 2.0, (mu - nu + 1.0) / 2.0, 1.5, w);
    return std::sqrt(kPi) * pw(2.0, mu - 1.0) * pw(1.0 - w, mu / 2.0) * (t1 + t2);
}

cplx ferrers_q_i1_euler(const ParamPair& p, cplx x, double tol) {
    if (auto why = representation_unavailable(R::I1, p, x)) throw MathError(ErrorKind::Parameter, *why);
    const cplx nu = p.nu, mu = p.mu;
    Acc acc{tol};
    cplx w = (1.0 - x) / 2.0;
    cplx q = 1.0 - x * x;
    cplx t1 = pw(2.0, mu) * cos_pi(mu) * pw(q, -mu / 2.0) * acc.Fr(nu - mu + 1.0, -mu - nu, 1.0 - mu, w);
    cplx t2 = pw(2.0, -mu) * gamma_ratio({nu + mu + 1.0}, {nu - mu + 1.0}) * pw(q, mu / 2.0) *
              acc.Fr(nu + mu + 1.0, mu - nu, 1.0 + mu, w);
    return kPi / (2.0 * sin_pi(mu)) * (t1 - t2);
}

cplx ferrers_q_theta_form(RepresentationId rep, const ParamPair& p, cplx theta, double tol) {
    const cplx nu = p.nu, mu = p.mu, i = kI;
    const double pi = kPi;
    const cplx x = std::cos(theta), st = std::sin(theta);
    if (auto why = representation_unavailable(rep, p, x)) throw MathError(ErrorKind::Parameter, *why);
    Acc acc{tol};
    switch (rep) {
        case R::III1Upper:
        case R::III1Lower: {
            const double s = rep == R::III1Upper ? 1.0 : -1.0;
            cplx w = 0.5 + s * i / 2.0 * std::cos(theta) / st;
            cplx t1 = std::exp(s * i * pi / 2.0 * (mu + 0.5)) * gamma_ratio({nu + 0.5}, {nu - mu + 1.0}) *
                      std::exp(s * i * (nu + 0.5) * theta) * acc.F(0.5 + mu, 0.5 - mu, 0.5 - nu, w);
            cplx t2 = std::exp(-s * i * pi / 2.0 * (mu + 0.5)) * gamma_ratio({nu + mu + 1.0}, {nu + 1.5}) *
                      (1.0 + std::exp(s * i * pi * (nu + mu)) * cos_pi(mu) / cos_pi(nu)) *
                      std::exp(-s * i * (nu + 0.5) * theta) * acc.F(0.5 + mu, 0.5 - mu, nu + 1.5, w);
            return std::sqrt(pi) / (std::pow(2.0, 1.5) * std::sqrt(st)) * (t1 + t2);
        }
        case R::III2Upper:
        case R::III2Lower: {
            const double s = rep == R::III2Upper ? 1.0 : -1.0;
            cplx w = std::exp(-2.0 * s * i * theta);
            cplx t1 = std::exp(s * i * pi * (mu + 0.5)) * gamma_ratio({nu + 0.5}, {nu - mu + 1.0}) *
                      std::exp(s * i * (nu - mu) * theta) * acc.F(0.5 + mu, mu - nu, 0.5 - nu, w);
            cplx t2 = gamma_ratio({nu + mu + 1.0}, {nu + 1.5}) *
                      (1.0 + std::exp(s * i * pi * (nu + mu)) * cos_pi(mu) / cos_pi(nu)) *
                      std::exp(-s * i * (nu + mu + 1.0) * theta) * acc.F(0.5 + mu, nu + mu + 1.0, nu + 1.5, w);
            return std::sqrt(pi) * pw(2.0, mu - 1.0) * pw(st, mu) * (t1 + t2);
        }
        case R::III3Upper:
        case R::III3Lower: {
            const double s = rep == R::III3Upper ? 1.0 : -1.0;
            cplx w = 1.0 - std::exp(-2.0 * s * i * theta);
            cplx t1 = g(-mu) / pw(2.0, mu + 1.0) * gamma_ratio({nu + mu + 1.0}, {nu - mu + 1.0}) * pw(st, mu) *
                      std::exp(s * i * (nu - mu) * theta) * acc.F(0.5 + mu, mu - nu, 1.0 + 2.0 * mu, w);
            cplx t2 = pw(2.0, mu - 1.0) * g(mu) * cos_pi(mu) * std::exp(s * i * (nu + mu) * theta) / pw(st, mu) *
                      acc.F(0.5 - mu, -nu - mu, 1.0 - 2.0 * mu, w);
            return t1 + t2;
        }
        default:
            throw MathError(ErrorKind::Parameter, "theta form exists only for the Group III representations");
    }
}

}  // namespace ferrox
