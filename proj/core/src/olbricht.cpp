#include "ferrox/olbricht.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace ferrox {

namespace {

// c0 + cn nu + cm mu
struct Aff {
    double c0 = 0.0, cn = 0.0, cm = 0.0;
    cplx operator()(cplx nu, cplx mu) const { return c0 + cn * nu + cm * mu; }
};

std::string fmt_coef(double c, const char* sym, bool first) {
    std::ostringstream os;
    if (c == 0.0) return "";
    const bool neg = c < 0.0;
    double m = std::fabs(c);
    if (!first) os << (neg ? "-" : "+");
    else if (neg) os << "-";
    if (!(m == 1.0 && *sym)) {
        if (m == 0.5) os << "1/2";
        else if (m == 1.5) os << "3/2";
        else os << m;
        if (*sym) os << "*";
    }
    os << sym;
    return os.str();
}

std::string to_text(const Aff& a) {
    std::string s = fmt_coef(a.cn, "nu", true);
    s += fmt_coef(a.cm, "mu", s.empty());
    s += fmt_coef(a.c0, "", s.empty());
    return s.empty() ? "0" : s;
}

enum class Base {
    OneMinusXHalf,   // (1-x)/2
    OnePlusXHalf,    // (1+x)/2
    TwoOverOneMinusX,
    XP1OverXM1,      // (x+1)/(x-1)
    XM1OverXP1,      // (x-1)/(x+1)
    TwoOverOnePlusX,
    OneMinusX2,      // 1-x^2, principal power
    X2Minus1,        // (x-1)^a (x+1)^a
    X,
    InvX,
    TwoY,
    XPlusY,
    YMinusX,
    XMinusY,
};

const char* base_text(Base b) {
    switch (b) {
        case Base::OneMinusXHalf: return "((1-x)/2)";
        case Base::OnePlusXHalf: return "((1+x)/2)";
        case Base::TwoOverOneMinusX: return "(2/(1-x))";
        case Base::XP1OverXM1: return "((x+1)/(x-1))";
        case Base::XM1OverXP1: return "((x-1)/(x+1))";
        case Base::TwoOverOnePlusX: return "(2/(1+x))";
        case Base::OneMinusX2: return "(1-x^2)";
        case Base::X2Minus1: return "(x^2-1)";
        case Base::X: return "x";
        case Base::InvX: return "(1/x)";
        case Base::TwoY: return "(2y)";
        case Base::XPlusY: return "(x+y)";
        case Base::YMinusX: return "(y-x)";
        case Base::XMinusY: return "(x-y)";
    }
    return "?";
}

enum class Arg {
    OneMinusXHalf,  // (1-x)/2
    TwoOverOneMinusX,
    XM1OverXP1,
    X2,
    OneMinusX2,
    InvX2,
    InvOneMinusX2,
    X2OverX2M1,
    X2M1OverX2,
    YPlusXOver2Y,
    YMinusXOver2Y,
    TwoYOverYPlusX,
    TwoYOverYMinusX,
    XPlusYOverXMinusY,
    XMinusYOverXPlusY,
};

const char* arg_text(Arg a) {
    switch (a) {
        case Arg::OneMinusXHalf: return "(1-x)/2";
        case Arg::TwoOverOneMinusX: return "2/(1-x)";
        case Arg::XM1OverXP1: return "(x-1)/(x+1)";
        case Arg::X2: return "x^2";
        case Arg::OneMinusX2: return "1-x^2";
        case Arg::InvX2: return "1/x^2";
        case Arg::InvOneMinusX2: return "1/(1-x^2)";
        case Arg::X2OverX2M1: return "x^2/(x^2-1)";
        case Arg::X2M1OverX2: return "(x^2-1)/x^2";
        case Arg::YPlusXOver2Y: return "(y+x)/(2y)";
        case Arg::YMinusXOver2Y: return "(y-x)/(2y)";
        case Arg::TwoYOverYPlusX: return "2y/(y+x)";
        case Arg::TwoYOverYMinusX: return "2y/(y-x)";
        case Arg::XPlusYOverXMinusY: return "(x+y)/(x-y)";
        case Arg::XMinusYOverXPlusY: return "(x-y)/(x+y)";
    }
    return "?";
}

struct Factor {
    Base base;
    Aff exp;
};

struct Formula {
    std::vector<Factor> factors;
    Aff a, b, c;
    Arg arg;
    bool reflect = false;  // the entry is this formula evaluated at -x
};

using Coef = cplx (*)(cplx nu, cplx mu);

enum class RedKind {
    SameAs,       // another entry of the same group and root
    FerrersP,     // coef * Ferrers P_nu^{s mu}
    LegendreP,    // coef * P_nu^{s mu}
    QBold,        // coef * Qbold_{nu'}^mu
    QBoldSchafke, // as QBold for Im x > 0; two-term continuation for Im x < 0
    FerrersEven,  // coef * (P(x) + P(-x)), Ferrers P_nu^mu
    FerrersOdd,   // coef * (P(-x) - P(x))
};

struct Reduction {
    RedKind kind;
    Coef coef = nullptr;
    double mu_sign = 1.0;
    bool nu_flip = false;    // degree -nu-1 in place of nu
    bool x_reflect = false;  // evaluate at -x
    int target = 0;          // SameAs
    const char* text = "";
};

struct Entry {
    OlbrichtGroup group;
    int index;
    Formula f;
    OlbrichtDomain dom1, id1;
    Reduction red1;
    // Group III, root Y2; absent for Groups I and II and for entries admitting only Y1.
    std::optional<OlbrichtDomain> dom2, id2;
    std::optional<Reduction> red2;
};

constexpr double H = 0.5;

cplx sqrt_pi() { return std::sqrt(kPi); }

Reduction same(int target, const char* text, bool reflect = false) {
    Reduction r{RedKind::SameAs};
    r.target = target;
    r.x_reflect = reflect;
    r.text = text;
    return r;
}

Reduction red(RedKind k, Coef c, double mu_sign, bool nu_flip, bool reflect, const char* text) {
    Reduction r{k};
    r.coef = c;
    r.mu_sign = mu_sign;
    r.nu_flip = nu_flip;
    r.x_reflect = reflect;
    r.text = text;
    return r;
}

// Coefficients of the reductions.
cplx g1pm(cplx, cplx mu) { return gamma(1.0 + mu); }
cplx g1mm(cplx, cplx mu) { return gamma(1.0 - mu); }
cplx q_i9(cplx nu, cplx) { return principal_pow(4.0, -nu) / sqrt_pi() * gamma(0.5 - nu); }
cplx q_i10(cplx nu, cplx) { return principal_pow(4.0, nu + 1.0) / sqrt_pi() * gamma(nu + 1.5); }
cplx c_ii1(cplx nu, cplx mu) {
    return principal_pow(2.0, -mu - 1.0) / sqrt_pi() * gamma(nu / 2.0 - mu / 2.0 + 1.0) * gamma(-nu / 2.0 - mu / 2.0 + 0.5);
}
cplx c_ii2(cplx nu, cplx mu) {
    return principal_pow(2.0, -mu - 2.0) / sqrt_pi() * gamma(nu / 2.0 - mu / 2.0 + 0.5) * gamma(-nu / 2.0 - mu / 2.0);
}
cplx c_ii5(cplx, cplx mu) { return principal_pow(2.0, mu) * gamma(1.0 + mu); }
cplx c_ii7(cplx, cplx mu) { return principal_pow(2.0, -mu) * gamma(1.0 - mu); }
cplx c_ii9(cplx nu, cplx) { return principal_pow(2.0, -nu) / sqrt_pi() * gamma(0.5 - nu); }
cplx c_ii10(cplx nu, cplx) { return principal_pow(2.0, nu + 1.0) / sqrt_pi() * gamma(nu + 1.5); }
cplx c_iii5(cplx nu, cplx) { return gamma(0.5 - nu) / sqrt_pi(); }
cplx c_iii7(cplx nu, cplx) { return gamma(nu + 1.5) / sqrt_pi(); }
cplx c_iii9_y1(cplx, cplx mu) { return std::exp(0.5 * kI * kPi * mu) * principal_pow(4.0, mu) * gamma(1.0 + mu); }
cplx c_iii9_y2(cplx, cplx mu) { return principal_pow(4.0, mu) * gamma(1.0 + mu); }
cplx c_iii10_y1(cplx, cplx mu) { return std::exp(-0.5 * kI * kPi * mu) * principal_pow(4.0, -mu) * gamma(1.0 - mu); }
cplx c_iii10_y2(cplx, cplx mu) { return principal_pow(4.0, -mu) * gamma(1.0 - mu); }

Formula reflected(Formula f) {
    f.reflect = true;
    return f;
}

std::vector<Entry> build_group_i() {
    using D = OlbrichtDomain;
    const Formula f1{{{Base::OneMinusXHalf, {0, 0, H}}, {Base::OnePlusXHalf, {0, 0, H}}},
                     {0, -1, 1}, {1, 1, 1}, {1, 0, 1}, Arg::OneMinusXHalf};
    const Formula f2{{{Base::OneMinusXHalf, {0, 0, -H}}, {Base::OnePlusXHalf, {0, 0, H}}},
                     {0, -1, 0}, {1, 1, 0}, {1, 0, -1}, Arg::OneMinusXHalf};
    const Formula f3{{{Base::OneMinusXHalf, {0, 0, H}}, {Base::OnePlusXHalf, {0, 0, -H}}},
                     {0, -1, 0}, {1, 1, 0}, {1, 0, 1}, Arg::OneMinusXHalf};
    const Formula f4{{{Base::OneMinusXHalf, {0, 0, -H}}, {Base::OnePlusXHalf, {0, 0, -H}}},
                     {0, -1, -1}, {1, 1, -1}, {1, 0, -1}, Arg::OneMinusXHalf};
    const Formula f9{{{Base::TwoOverOneMinusX, {0, -1, 0}}, {Base::XP1OverXM1, {0, 0, H}}},
                     {0, -1, 0}, {0, -1, 1}, {0, -2, 0}, Arg::TwoOverOneMinusX};
    const Formula f10{{{Base::TwoOverOneMinusX, {1, 1, 0}}, {Base::XP1OverXM1, {0, 0, H}}},
                      {1, 1, 1}, {1, 1, 0}, {2, 2, 0}, Arg::TwoOverOneMinusX};
    const Formula f11{{{Base::TwoOverOneMinusX, {0, -1, 0}}, {Base::XP1OverXM1, {0, 0, -H}}},
                      {0, -1, 0}, {0, -1, -1}, {0, -2, 0}, Arg::TwoOverOneMinusX};
    const Formula f12{{{Base::TwoOverOneMinusX, {1, 1, 0}}, {Base::XP1OverXM1, {0, 0, -H}}},
                      {1, 1, 0}, {1, 1, -1}, {2, 2, 0}, Arg::TwoOverOneMinusX};
    const Formula f17{{{Base::XM1OverXP1, {0, 0, H}}, {Base::TwoOverOnePlusX, {0, -1, 0}}},
                      {0, -1, 0}, {0, -1, 1}, {1, 0, 1}, Arg::XM1OverXP1};
    const Formula f18{{{Base::XM1OverXP1, {0, 0, -H}}, {Base::TwoOverOnePlusX, {0, -1, 0}}},
                      {0, -1, 0}, {0, -1, -1}, {1, 0, -1}, Arg::XM1OverXP1};
    const Formula f19{{{Base::XM1OverXP1, {0, 0, H}}, {Base::TwoOverOnePlusX, {1, 1, 0}}},
                      {1, 1, 1}, {1, 1, 0}, {1, 0, 1}, Arg::XM1OverXP1};
    const Formula f20{{{Base::XM1OverXP1, {0, 0, -H}}, {Base::TwoOverOnePlusX, {1, 1, 0}}},
                      {1, 1, 0}, {1, 1, -1}, {1, 0, -1}, Arg::XM1OverXP1};
    const auto FP = RedKind::FerrersP;
    const auto LP = RedKind::LegendreP;
    const auto QB = RedKind::QBold;
    auto e = [](int i, Formula f, D dom, Reduction r) { return Entry{OlbrichtGroup::I, i, f, dom, dom, r, {}, {}, {}}; };
    return {
        e(1, f1, D::D1, red(FP, g1pm, -1, false, false, "Gamma(1+mu) FerrersP_nu^{-mu}(x)")),
        e(2, f2, D::D1, red(FP, g1mm, 1, false, false, "Gamma(1-mu) FerrersP_nu^{mu}(x)")),
        e(3, f3, D::D1, same(1, "equal to I.1 by Euler transform")),
        e(4, f4, D::D1, same(2, "equal to I.2 by Euler transform")),
        e(5, reflected(f1), D::D1, red(FP, g1pm, -1, false, true, "Gamma(1+mu) FerrersP_nu^{-mu}(-x)")),
        e(6, reflected(f2), D::D1, red(FP, g1mm, 1, false, true, "Gamma(1-mu) FerrersP_nu^{mu}(-x)")),
        e(7, reflected(f3), D::D1, same(5, "equal to I.5 by Euler transform")),
        e(8, reflected(f4), D::D1, same(6, "equal to I.6 by Euler transform")),
        e(9, f9, D::D3, red(QB, q_i9, 1, true, true, "4^{-nu} pi^{-1/2} Gamma(1/2-nu) Qbold_{-nu-1}^{mu}(-x)")),
        e(10, f10, D::D3, red(QB, q_i10, 1, false, true, "4^{nu+1} pi^{-1/2} Gamma(nu+3/2) Qbold_{nu}^{mu}(-x)")),
        e(11, f11, D::D3, same(9, "equal to I.9 (mu -> -mu symmetry of Qbold)")),
        e(12, f12, D::D3, same(10, "equal to I.10 (mu -> -mu symmetry of Qbold)")),
        e(13, reflected(f9), D::D2, red(QB, q_i9, 1, true, false, "4^{-nu} pi^{-1/2} Gamma(1/2-nu) Qbold_{-nu-1}^{mu}(x)")),
        e(14, reflected(f10), D::D2, red(QB, q_i10, 1, false, false, "4^{nu+1} pi^{-1/2} Gamma(nu+3/2) Qbold_{nu}^{mu}(x)")),
        e(15, reflected(f11), D::D2, same(13, "equal to I.13")),
        e(16, reflected(f12), D::D2, same(14, "equal to I.14")),
        e(17, f17, D::D2, red(LP, g1pm, -1, false, false, "Gamma(1+mu) P_nu^{-mu}(x)")),
        e(18, f18, D::D2, red(LP, g1mm, 1, false, false, "Gamma(1-mu) P_nu^{mu}(x)")),
        e(19, f19, D::D2, same(17, "equal to I.17 by Euler transform")),
        e(20, f20, D::D2, same(18, "equal to I.18 by Euler transform")),
        e(21, reflected(f17), D::D3, red(LP, g1pm, -1, false, true, "Gamma(1+mu) P_nu^{-mu}(-x)")),
        e(22, reflected(f18), D::D3, red(LP, g1mm, 1, false, true, "Gamma(1-mu) P_nu^{mu}(-x)")),
        e(23, reflected(f19), D::D3, same(21, "equal to I.21 by Euler transform")),
        e(24, reflected(f20), D::D3, same(22, "equal to I.22 by Euler transform")),
    };
}

std::vector<Entry> build_group_ii() {
    using D = OlbrichtDomain;
    const Aff hm{0, 0, H}, mhm{0, 0, -H};
    auto F = [](std::vector<Factor> fs, Aff a, Aff b, Aff c, Arg w) { return Formula{std::move(fs), a, b, c, w}; };
    const Factor one_x{Base::X, {1, 0, 0}};
    const auto FP = RedKind::FerrersP;
    const auto QB = RedKind::QBold;
    auto e = [](int i, Formula f, D dom, D idd, Reduction r) { return Entry{OlbrichtGroup::II, i, f, dom, idd, r, {}, {}, {}}; };
    return {
        e(1, F({{Base::OneMinusX2, hm}}, {0, -H, H}, {H, H, H}, {H, 0, 0}, Arg::X2), D::D1, D::D1,
          red(RedKind::FerrersEven, c_ii1, 1, false, false,
              "2^{-mu-1} pi^{-1/2} Gamma(nu/2-mu/2+1) Gamma(1/2-nu/2-mu/2) (FerrersP_nu^mu(x) + FerrersP_nu^mu(-x))")),
        e(2, F({one_x, {Base::OneMinusX2, hm}}, {H, -H, H}, {1, H, H}, {1.5, 0, 0}, Arg::X2), D::D1, D::D1,
          red(RedKind::FerrersOdd, c_ii2, 1, false, false,
              "2^{-mu-2} pi^{-1/2} Gamma(nu/2-mu/2+1/2) Gamma(-nu/2-mu/2) (FerrersP_nu^mu(-x) - FerrersP_nu^mu(x))")),
        e(3, F({{Base::OneMinusX2, mhm}}, {0, -H, -H}, {H, H, -H}, {H, 0, 0}, Arg::X2), D::D1, D::D1,
          same(1, "equal to II.1 by Euler transform")),
        e(4, F({one_x, {Base::OneMinusX2, mhm}}, {H, -H, -H}, {1, H, -H}, {1.5, 0, 0}, Arg::X2), D::D1, D::D1,
          same(2, "equal to II.2 by Euler transform")),
        e(5, F({{Base::OneMinusX2, hm}}, {0, -H, H}, {H, H, H}, {1, 0, 1}, Arg::OneMinusX2), D::D1NoImagAxis, D::D1Plus,
          red(FP, c_ii5, -1, false, false, "2^{mu} Gamma(1+mu) FerrersP_nu^{-mu}(x) on D1+")),
        e(6, F({one_x, {Base::OneMinusX2, hm}}, {H, -H, H}, {1, H, H}, {1, 0, 1}, Arg::OneMinusX2), D::D1NoImagAxis,
          D::D1Plus, same(5, "equal to II.5 by Euler transform on D1+")),
        e(7, F({{Base::OneMinusX2, mhm}}, {0, -H, -H}, {H, H, -H}, {1, 0, -1}, Arg::OneMinusX2), D::D1NoImagAxis, D::D1Plus,
          red(FP, c_ii7, 1, false, false, "2^{-mu} Gamma(1-mu) FerrersP_nu^{mu}(x) on D1+")),
        e(8, F({one_x, {Base::OneMinusX2, mhm}}, {1, H, -H}, {H, -H, -H}, {1, 0, -1}, Arg::OneMinusX2), D::D1NoImagAxis,
          D::D1Plus, same(7, "equal to II.7 by Euler transform on D1+")),
        e(9, F({{Base::X, {0, 1, -1}}, {Base::X2Minus1, hm}}, {0, -H, H}, {H, -H, H}, {H, -1, 0}, Arg::InvX2), D::D2, D::D2,
          red(QB, c_ii9, 1, true, false, "2^{-nu} pi^{-1/2} Gamma(1/2-nu) Qbold_{-nu-1}^{mu}(x)")),
        e(10, F({{Base::InvX, {1, 1, 1}}, {Base::X2Minus1, hm}}, {H, H, H}, {1, H, H}, {1.5, 1, 0}, Arg::InvX2), D::D2, D::D2,
          red(QB, c_ii10, 1, false, false, "2^{nu+1} pi^{-1/2} Gamma(nu+3/2) Qbold_{nu}^{mu}(x)")),
        e(11, F({{Base::X, {-1, -1, 1}}, {Base::X2Minus1, mhm}}, {H, H, -H}, {1, H, -H}, {1.5, 1, 0}, Arg::InvX2), D::D2,
          D::D2, same(10, "equal to II.10 (mu -> -mu symmetry of Qbold)")),
        e(12, F({{Base::X, {0, 1, 1}}, {Base::X2Minus1, mhm}}, {0, -H, -H}, {H, -H, -H}, {H, -1, 0}, Arg::InvX2), D::D2,
          D::D2, same(9, "equal to II.9 (mu -> -mu symmetry of Qbold)")),
        e(13, F({{Base::X2Minus1, {0, H, 0}}}, {0, -H, H}, {0, -H, -H}, {H, -1, 0}, Arg::InvOneMinusX2), D::D2, D::D2,
          same(9, "equal to II.9 by Pfaff transform")),
        e(14, F({{Base::X2Minus1, {-H, -H, 0}}}, {H, H, H}, {H, H, -H}, {1.5, 1, 0}, Arg::InvOneMinusX2), D::D2, D::D2,
          same(10, "equal to II.10 by Pfaff transform")),
        e(15, F({one_x, {Base::X2Minus1, {-H, H, 0}}}, {H, -H, H}, {H, -H, -H}, {H, -1, 0}, Arg::InvOneMinusX2), D::D2,
          D::D2, same(12, "equal to II.12 by Pfaff transform")),
        e(16, F({one_x, {Base::X2Minus1, {-1, -H, 0}}}, {1, H, H}, {1, H, -H}, {1.5, 1, 0}, Arg::InvOneMinusX2), D::D2,
          D::D2, same(11, "equal to II.11 by Pfaff transform")),
        e(17, F({{Base::OneMinusX2, {0, H, 0}}}, {0, -H, H}, {0, -H, -H}, {H, 0, 0}, Arg::X2OverX2M1), D::D1, D::D1,
          same(1, "equal to II.1 by Pfaff transform")),
        e(18, F({{Base::OneMinusX2, {-H, -H, 0}}}, {H, H, H}, {H, H, -H}, {H, 0, 0}, Arg::X2OverX2M1), D::D1, D::D1,
          same(3, "equal to II.3 by Pfaff transform")),
        e(19, F({one_x, {Base::OneMinusX2, {-H, H, 0}}}, {H, -H, H}, {H, -H, -H}, {1.5, 0, 0}, Arg::X2OverX2M1), D::D1,
          D::D1, same(2, "equal to II.2 by Pfaff transform")),
        e(20, F({one_x, {Base::OneMinusX2, {-1, -H, 0}}}, {1, H, H}, {1, H, -H}, {1.5, 0, 0}, Arg::X2OverX2M1), D::D1,
          D::D1, same(4, "equal to II.4 by Pfaff transform")),
        e(21, F({{Base::X, {0, 1, -1}}, {Base::OneMinusX2, hm}}, {0, -H, H}, {H, -H, H}, {1, 0, 1}, Arg::X2M1OverX2),
          D::D1Plus, D::D1Plus, same(5, "equal to II.5 by Pfaff transform")),
        e(22, F({{Base::X, {-1, -1, -1}}, {Base::OneMinusX2, hm}}, {H, H, H}, {1, H, H}, {1, 0, 1}, Arg::X2M1OverX2),
          D::D1Plus, D::D1Plus, same(6, "equal to II.6 by Pfaff transform")),
        e(23, F({{Base::X, {-1, -1, 1}}, {Base::OneMinusX2, mhm}}, {1, H, -H}, {H, H, -H}, {1, 0, -1}, Arg::X2M1OverX2),
          D::D1Plus, D::D1Plus, same(7, "equal to II.7 by Pfaff transform")),
        e(24, F({{Base::X, {0, 1, 1}}, {Base::OneMinusX2, mhm}}, {H, -H, -H}, {0, -H, -H}, {1, 0, -1}, Arg::X2M1OverX2),
          D::D1Plus, D::D1Plus, same(8, "equal to II.8 by Pfaff transform")),
    };
}

std::vector<Entry> build_group_iii() {
    using D = OlbrichtDomain;
    auto F = [](std::vector<Factor> fs, Aff a, Aff b, Aff c, Arg w) { return Formula{std::move(fs), a, b, c, w}; };
    // Y1 only
    auto e1 = [](int i, Formula f, Reduction r) { return Entry{OlbrichtGroup::III, i, f, D::D1, D::D1, r, {}, {}, {}}; };
    // both roots
    auto e2 = [](int i, Formula f, D d1, D i1, Reduction r1, D d2, D i2, Reduction r2) {
        return Entry{OlbrichtGroup::III, i, f, d1, i1, r1, d2, i2, r2};
    };
    const auto QS = RedKind::QBoldSchafke;
    const auto QB = RedKind::QBold;
    const auto FP = RedKind::FerrersP;
    const auto LP = RedKind::LegendreP;
    const Aff half{H, 0, 0}, mhalf{-H, 0, 0};
    const char* q5 = "pi^{-1/2} Gamma(1/2-nu) Qbold_{-nu-1}^{mu}(x) (Im x > 0); "
                     "pi^{-1/2} Gamma(1/2-nu) (e^{-i pi mu} Qbold_{-nu-1}^{mu}(x) - i pi P_nu^{-mu}(x) / Gamma(-nu-mu)) (Im x < 0)";
    const char* q5b = "pi^{-1/2} Gamma(1/2-nu) Qbold_{-nu-1}^{mu}(x)";
    const char* q7 = "pi^{-1/2} Gamma(nu+3/2) Qbold_{nu}^{mu}(x) (Im x > 0); "
                     "pi^{-1/2} Gamma(nu+3/2) (e^{-i pi mu} Qbold_{nu}^{mu}(x) - i pi P_nu^{-mu}(x) / Gamma(nu-mu+1)) (Im x < 0)";
    const char* q7b = "pi^{-1/2} Gamma(nu+3/2) Qbold_{nu}^{mu}(x)";
    std::vector<Entry> v = {
        e1(1, F({{Base::TwoY, {0, 1, 0}}}, {0, -1, 1}, {0, -1, -1}, {H, -1, 0}, Arg::YPlusXOver2Y),
           same(5, "equal to III.5 at -x", true)),
        e1(2, F({{Base::TwoY, mhalf}, {Base::YMinusX, {H, 1, 0}}}, {H, 0, -1}, {H, 0, 1}, {H, -1, 0}, Arg::YPlusXOver2Y),
           same(1, "equal to III.1 by Euler transform")),
        e1(3, F({{Base::TwoY, mhalf}, {Base::YMinusX, {-H, -1, 0}}}, {H, 0, -1}, {H, 0, 1}, {1.5, 1, 0}, Arg::YPlusXOver2Y),
           same(7, "equal to III.7 at -x", true)),
        e1(4, F({{Base::TwoY, {-1, -1, 0}}}, {1, 1, -1}, {1, 1, 1}, {1.5, 1, 0}, Arg::YPlusXOver2Y),
           same(3, "equal to III.3 by Euler transform")),
        e2(5, F({{Base::TwoY, {0, 1, 0}}}, {0, -1, 1}, {0, -1, -1}, {H, -1, 0}, Arg::YMinusXOver2Y), D::D1, D::D1NonReal,
           red(QS, c_iii5, 1, true, false, q5), D::D2, D::D2, red(QB, c_iii5, 1, true, false, q5b)),
        e2(6, F({{Base::TwoY, mhalf}, {Base::XPlusY, {H, 1, 0}}}, {H, 0, -1}, {H, 0, 1}, {H, -1, 0}, Arg::YMinusXOver2Y),
           D::D1, D::D1, same(5, "equal to III.5 by Euler transform"), D::D2, D::D2,
           same(5, "equal to III.5 by Euler transform")),
        e2(7, F({{Base::TwoY, mhalf}, {Base::XPlusY, {-H, -1, 0}}}, {H, 0, -1}, {H, 0, 1}, {1.5, 1, 0}, Arg::YMinusXOver2Y),
           D::D1, D::D1NonReal, red(QS, c_iii7, 1, false, false, q7), D::D2, D::D2, red(QB, c_iii7, 1, false, false, q7b)),
        e2(8, F({{Base::TwoY, {-1, -1, 0}}}, {1, 1, -1}, {1, 1, 1}, {1.5, 1, 0}, Arg::YMinusXOver2Y), D::D1, D::D1,
           same(7, "equal to III.7 by Euler transform"), D::D2, D::D2, same(7, "equal to III.7 by Euler transform")),
        e2(9, F({{Base::TwoY, {0, 0, 1}}, {Base::XPlusY, {0, 1, -1}}}, {0, -1, 1}, {H, 0, 1}, {1, 0, 2}, Arg::TwoYOverYPlusX),
           D::D1Plus, D::D1Plus, red(FP, c_iii9_y1, -1, false, false, "e^{i pi mu/2} 4^{mu} Gamma(1+mu) FerrersP_nu^{-mu}(x)"),
           D::D2Plus, D::D2Plus, red(LP, c_iii9_y2, -1, false, false, "4^{mu} Gamma(1+mu) P_nu^{-mu}(x)")),
        e2(10, F({{Base::TwoY, {0, 0, -1}}, {Base::XPlusY, {0, 1, 1}}}, {0, -1, -1}, {H, 0, -1}, {1, 0, -2}, Arg::TwoYOverYPlusX),
           D::D1Plus, D::D1Plus, red(FP, c_iii10_y1, 1, false, false, "e^{-i pi mu/2} 4^{-mu} Gamma(1-mu) FerrersP_nu^{mu}(x)"),
           D::D2Plus, D::D2Plus, red(LP, c_iii10_y2, 1, false, false, "4^{-mu} Gamma(1-mu) P_nu^{mu}(x)")),
        e2(11, F({{Base::TwoY, {0, 0, -1}}, {Base::XPlusY, {-1, -1, 1}}}, {1, 1, -1}, {H, 0, -1}, {1, 0, -2}, Arg::TwoYOverYPlusX),
           D::D1Plus, D::D1Plus, same(10, "equal to III.10 by Euler transform"), D::D2Plus, D::D2Plus,
           same(10, "equal to III.10 by Euler transform")),
        e2(12, F({{Base::TwoY, {0, 0, 1}}, {Base::XPlusY, {-1, -1, -1}}}, {1, 1, 1}, {H, 0, 1}, {1, 0, 2}, Arg::TwoYOverYPlusX),
           D::D1Plus, D::D1Plus, same(9, "equal to III.9 by Euler transform"), D::D2Plus, D::D2Plus,
           same(9, "equal to III.9 by Euler transform")),
    };
    // 13-16: Pfaff images of 9-12 with x - y in place of x + y.
    for (int j = 13; j <= 16; ++j) {
        Entry base = v[std::size_t(j - 4 - 1)];
        base.index = j;
        for (Factor& f : base.f.factors)
            if (f.base == Base::XPlusY) f.base = Base::XMinusY;
        base.f.arg = Arg::TwoYOverYMinusX;
        static const char* texts[] = {"equal to III.9 by Pfaff transform", "equal to III.10 by Pfaff transform",
                                      "equal to III.11 by Pfaff transform", "equal to III.12 by Pfaff transform"};
        base.red1 = same(j - 4, texts[j - 13]);
        base.red2 = same(j - 4, texts[j - 13]);
        v.push_back(base);
    }
    const char* pf[] = {"equal to III.1 by Pfaff transform", "equal to III.2 by Pfaff transform",
                        "equal to III.3 by Pfaff transform", "equal to III.4 by Pfaff transform",
                        "equal to III.5 by Pfaff transform", "equal to III.6 by Pfaff transform",
                        "equal to III.7 by Pfaff transform", "equal to III.8 by Pfaff transform"};
    // 17-20: arguments (x+y)/(x-y), Y1 only.
    v.push_back(e1(17, F({{Base::TwoY, {0, 0, 1}}, {Base::YMinusX, {0, 1, -1}}}, {0, -1, 1}, {H, 0, 1}, {H, -1, 0},
                         Arg::XPlusYOverXMinusY), same(1, pf[0])));
    v.push_back(e1(18, F({{Base::TwoY, {0, 0, -1}}, {Base::YMinusX, {0, 1, 1}}}, {0, -1, -1}, {H, 0, -1}, {H, -1, 0},
                         Arg::XPlusYOverXMinusY), same(2, pf[1])));
    v.push_back(e1(19, F({{Base::TwoY, {0, 0, 1}}, {Base::YMinusX, {-1, -1, -1}}}, {H, 0, 1}, {1, 1, 1}, {1.5, 1, 0},
                         Arg::XPlusYOverXMinusY), same(3, pf[2])));
    v.push_back(e1(20, F({{Base::TwoY, {0, 0, -1}}, {Base::YMinusX, {-1, -1, 1}}}, {H, 0, -1}, {1, 1, -1}, {1.5, 1, 0},
                         Arg::XPlusYOverXMinusY), same(4, pf[3])));
    // 21-24: arguments (x-y)/(x+y), both roots.
    auto both = [&](int i, Formula f, int target) {
        return e2(i, f, D::D1, D::D1, same(target, pf[target - 1]), D::D2, D::D2, same(target, pf[target - 1]));
    };
    v.push_back(both(21, F({{Base::TwoY, {0, 0, 1}}, {Base::XPlusY, {0, 1, -1}}}, {0, -1, 1}, {H, 0, 1}, {H, -1, 0},
                           Arg::XMinusYOverXPlusY), 5));
    v.push_back(both(22, F({{Base::TwoY, {0, 0, -1}}, {Base::XPlusY, {0, 1, 1}}}, {0, -1, -1}, {H, 0, -1}, {H, -1, 0},
                           Arg::XMinusYOverXPlusY), 6));
    v.push_back(both(23, F({{Base::TwoY, {0, 0, 1}}, {Base::XPlusY, {-1, -1, -1}}}, {H, 0, 1}, {1, 1, 1}, {1.5, 1, 0},
                           Arg::XMinusYOverXPlusY), 7));
    v.push_back(both(24, F({{Base::TwoY, {0, 0, -1}}, {Base::XPlusY, {-1, -1, 1}}}, {H, 0, -1}, {1, 1, -1}, {1.5, 1, 0},
                           Arg::XMinusYOverXPlusY), 8));
    (void)half;
    return v;
}

const std::vector<Entry>& entries(OlbrichtGroup g) {
    static const std::vector<Entry> gi = build_group_i();
    static const std::vector<Entry> gii = build_group_ii();
    static const std::vector<Entry> giii = build_group_iii();
    switch (g) {
        case OlbrichtGroup::I: return gi;
        case OlbrichtGroup::II: return gii;
        case OlbrichtGroup::III: return giii;
    }
    return gi;
}

const Entry& entry(OlbrichtGroup g, int index) {
    if (index < 1 || index > 24) throw MathError(ErrorKind::Parameter, "olbricht: index must be in 1..24");
    return entries(g)[std::size_t(index - 1)];
}

RootVariant root_of(const OlbrichtId& id) { return id.root.value_or(RootVariant::Y1); }

bool uses_y2(const OlbrichtId& id) { return id.group == OlbrichtGroup::III && root_of(id) == RootVariant::Y2; }

void check_root(const OlbrichtId& id) {
    if (id.group != OlbrichtGroup::III) return;
    const Entry& e = entry(id.group, id.index);
    if (root_of(id) == RootVariant::Y2 && !e.dom2)
        throw MathError(ErrorKind::Domain, to_string(id) + ": root Y2 not admitted (argument lands on the cut for x > 1)");
}

OlbrichtDomain analytic_domain_of(const OlbrichtId& id) {
    const Entry& e = entry(id.group, id.index);
    return uses_y2(id) ? *e.dom2 : e.dom1;
}

OlbrichtDomain identity_domain_of(const OlbrichtId& id) {
    const Entry& e = entry(id.group, id.index);
    return uses_y2(id) ? *e.id2 : e.id1;
}

const Reduction& reduction_of(const OlbrichtId& id) {
    const Entry& e = entry(id.group, id.index);
    return uses_y2(id) ? *e.red2 : e.red1;
}

cplx base_value(Base b, cplx x, cplx y) {
    switch (b) {
        case Base::OneMinusXHalf: return (1.0 - x) / 2.0;
        case Base::OnePlusXHalf: return (1.0 + x) / 2.0;
        case Base::TwoOverOneMinusX: return 2.0 / (1.0 - x);
        case Base::XP1OverXM1: return (x + 1.0) / (x - 1.0);
        case Base::XM1OverXP1: return (x - 1.0) / (x + 1.0);
        case Base::TwoOverOnePlusX: return 2.0 / (1.0 + x);
        case Base::OneMinusX2: return 1.0 - x * x;
        case Base::X2Minus1: return x * x - 1.0;
        case Base::X: return x;
        case Base::InvX: return 1.0 / x;
        case Base::TwoY: return 2.0 * y;
        case Base::XPlusY: return x + y;
        case Base::YMinusX: return y - x;
        case Base::XMinusY: return x - y;
    }
    return 0.0;
}

cplx arg_value(Arg a, cplx x, cplx y) {
    switch (a) {
        case Arg::OneMinusXHalf: return (1.0 - x) / 2.0;
        case Arg::TwoOverOneMinusX: return 2.0 / (1.0 - x);
        case Arg::XM1OverXP1: return (x - 1.0) / (x + 1.0);
        case Arg::X2: return x * x;
        case Arg::OneMinusX2: return 1.0 - x * x;
        case Arg::InvX2: return 1.0 / (x * x);
        case Arg::InvOneMinusX2: return 1.0 / (1.0 - x * x);
        case Arg::X2OverX2M1: return x * x / (x * x - 1.0);
        case Arg::X2M1OverX2: return (x * x - 1.0) / (x * x);
        case Arg::YPlusXOver2Y: return (y + x) / (2.0 * y);
        case Arg::YMinusXOver2Y: return (y - x) / (2.0 * y);
        case Arg::TwoYOverYPlusX: return 2.0 * y / (y + x);
        case Arg::TwoYOverYMinusX: return 2.0 * y / (y - x);
        case Arg::XPlusYOverXMinusY: return (x + y) / (x - y);
        case Arg::XMinusYOverXPlusY: return (x - y) / (x + y);
    }
    return 0.0;
}

std::string definition_text(const Entry& e, bool y2) {
    std::ostringstream os;
    if (e.f.reflect) os << "at -x: ";
    for (const Factor& f : e.f.factors) {
        if (f.base == Base::X && f.exp.c0 == 1.0 && f.exp.cn == 0.0 && f.exp.cm == 0.0) {
            os << "x ";
            continue;
        }
        os << base_text(f.base) << "^(" << to_text(f.exp) << ") ";
    }
    os << "2F1(" << to_text(e.f.a) << ", " << to_text(e.f.b) << "; " << to_text(e.f.c) << "; " << arg_text(e.f.arg) << ")";
    if (e.group == OlbrichtGroup::III) os << (y2 ? ", y = x sqrt(1-1/x^2)" : ", y = i sqrt(1-x^2)");
    return os.str();
}

cplx eval_formula(const Entry& e, const ParamPair& p, cplx x, RootVariant root, double tol, std::size_t& terms,
                  double& tail) {
    if (e.f.reflect) x = -x;
    cplx y = e.group == OlbrichtGroup::III ? root_y(root, x) : cplx(0.0);
    const cplx nu = p.nu, mu = p.mu;
    cplx pref = 1.0;
    for (const Factor& f : e.f.factors) {
        cplx ex = f.exp(nu, mu);
        pref *= f.base == Base::X2Minus1 ? z2m1_pow(x, ex) : principal_pow(base_value(f.base, x, y), ex);
    }
    SeriesResult s = f21({e.f.a(nu, mu), e.f.b(nu, mu), e.f.c(nu, mu)}, arg_value(e.f.arg, x, y), tol);
    terms += s.terms_used;
    tail = std::max(tail, s.tail_estimate);
    return pref * s.value;
}

}  // namespace

const char* to_string(OlbrichtGroup g) {
    switch (g) {
        case OlbrichtGroup::I: return "I";
        case OlbrichtGroup::II: return "II";
        case OlbrichtGroup::III: return "III";
    }
    return "?";
}

std::string to_string(const OlbrichtId& id) {
    std::string s = std::string(to_string(id.group)) + "." + std::to_string(id.index);
    if (id.group == OlbrichtGroup::III) s += root_of(id) == RootVariant::Y1 ? "/Y1" : "/Y2";
    return s;
}

const char* to_string(OlbrichtDomain d) {
    switch (d) {
        case OlbrichtDomain::D1: return "D1";
        case OlbrichtDomain::D1NonReal: return "D1 with Im x != 0";
        case OlbrichtDomain::D1NoImagAxis: return "D1 minus iR";
        case OlbrichtDomain::D1Plus: return "D1+";
        case OlbrichtDomain::D2: return "D2";
        case OlbrichtDomain::D2Plus: return "D2+";
        case OlbrichtDomain::D3: return "D3";
    }
    return "?";
}

bool in_domain(OlbrichtDomain d, cplx x) {
    switch (d) {
        case OlbrichtDomain::D1: return in_d1(x);
        case OlbrichtDomain::D1NonReal: return in_d1(x) && x.imag() != 0.0;
        case OlbrichtDomain::D1NoImagAxis: return in_d1(x) && x.real() != 0.0;
        case OlbrichtDomain::D1Plus: return in_d1_plus(x);
        case OlbrichtDomain::D2: return in_d2(x);
        case OlbrichtDomain::D2Plus: return in_d2_plus(x);
        case OlbrichtDomain::D3: return in_d3(x);
    }
    return false;
}

std::vector<RootVariant> admitted_roots(OlbrichtGroup g, int index) {
    if (g != OlbrichtGroup::III) return {};
    if (entry(g, index).dom2) return {RootVariant::Y1, RootVariant::Y2};
    return {RootVariant::Y1};
}

const std::vector<IdentityRecord>& olbricht_catalogue() {
    static const std::vector<IdentityRecord> cat = [] {
        std::vector<IdentityRecord> out;
        for (OlbrichtGroup g : {OlbrichtGroup::I, OlbrichtGroup::II, OlbrichtGroup::III}) {
            for (const Entry& e : entries(g)) {
                std::vector<std::optional<RootVariant>> roots;
                if (g == OlbrichtGroup::III)
                    for (RootVariant r : admitted_roots(g, e.index)) roots.push_back(r);
                else
                    roots.push_back(std::nullopt);
                for (auto r : roots) {
                    OlbrichtId id{g, e.index, r};
                    const Reduction& rd = reduction_of(id);
                    IdentityRecord rec{id, definition_text(e, uses_y2(id)), rd.text, analytic_domain_of(id),
                                       identity_domain_of(id), std::nullopt};
                    if (rd.kind == RedKind::SameAs) rec.same_as = OlbrichtId{g, rd.target, r};
                    out.push_back(std::move(rec));
                }
            }
        }
        return out;
    }();
    return cat;
}

const IdentityRecord& identity_record(const OlbrichtId& id) {
    check_root(id);
    for (const IdentityRecord& r : olbricht_catalogue())
        if (r.id.group == id.group && r.id.index == id.index &&
            (id.group != OlbrichtGroup::III || root_of(r.id) == root_of(id)))
            return r;
    throw MathError(ErrorKind::Parameter, "olbricht: unknown entry " + to_string(id));
}

EvalOutcome eval_olbricht(const OlbrichtId& id, const ParamPair& p, cplx x, double tol) {
    check_root(id);
    const Entry& e = entry(id.group, id.index);
    OlbrichtDomain d = analytic_domain_of(id);
    if (!in_domain(d, x))
        throw MathError(ErrorKind::Domain, to_string(id) + ": x not in " + to_string(d));
    EvalOutcome out{};
    out.value = eval_formula(e, p, x, root_of(id), tol, out.terms_used, out.tail_estimate);
    if (!std::isfinite(out.value.real()) || !std::isfinite(out.value.imag()))
        throw MathError(ErrorKind::Pole, to_string(id) + ": non-finite value");
    return out;
}

cplx olbricht_reduction(const OlbrichtId& id, const ParamPair& p, cplx x, double tol) {
    check_root(id);
    const Reduction& r = reduction_of(id);
    const cplx nu = p.nu, mu = p.mu;
    const cplx xr = r.x_reflect ? -x : x;
    switch (r.kind) {
        case RedKind::SameAs:
            return eval_olbricht({id.group, r.target, id.root}, p, xr, tol).value;
        case RedKind::FerrersP:
            return r.coef(nu, mu) * ferrers_p({nu, r.mu_sign * mu}, xr, tol).value;
        case RedKind::LegendreP:
            return r.coef(nu, mu) * legendre_p({nu, r.mu_sign * mu}, xr, tol).value;
        case RedKind::QBold: {
            cplx deg = r.nu_flip ? -nu - 1.0 : nu;
            return r.coef(nu, mu) * legendre_qbold({deg, mu}, xr, tol).value;
        }
        case RedKind::QBoldSchafke: {
            cplx deg = r.nu_flip ? -nu - 1.0 : nu;
            cplx q = legendre_qbold({deg, mu}, xr, tol).value;
            if (xr.imag() > 0.0) return r.coef(nu, mu) * q;
            if (xr.imag() == 0.0) throw MathError(ErrorKind::Domain, to_string(id) + ": reduction needs Im x != 0");
            // Continuation of Qbold once around z = 1.
            cplx pm = legendre_p({nu, -mu}, xr, tol).value;
            return r.coef(nu, mu) * (std::exp(-kI * kPi * mu) * q - kI * kPi * rgamma(deg - mu + 1.0) * pm);
        }
        case RedKind::FerrersEven:
            return r.coef(nu, mu) * (ferrers_p(p, xr, tol).value + ferrers_p(p, -xr, tol).value);
        case RedKind::FerrersOdd:
            return r.coef(nu, mu) * (ferrers_p(p, -xr, tol).value - ferrers_p(p, xr, tol).value);
    }
    throw MathError(ErrorKind::Parameter, "olbricht: unknown reduction");
}

std::vector<cplx> domain_samples(OlbrichtDomain d) {
    using c = cplx;
    switch (d) {
        case OlbrichtDomain::D1: return {c(0.2, 0), c(-0.3, 0.4), c(0.5, -0.2), c(0.1, 0.7), c(-0.6, -0.3)};
        case OlbrichtDomain::D1NonReal: return {c(0.2, 0.3), c(-0.3, 0.4), c(0.5, -0.2), c(0.1, 0.7), c(-0.6, -0.3)};
        case OlbrichtDomain::D1NoImagAxis:
        case OlbrichtDomain::D1Plus: return {c(0.2, 0), c(0.5, 0.4), c(0.7, -0.3), c(0.3, 1.1), c(0.9, -0.1)};
        case OlbrichtDomain::D2: return {c(2, 0), c(1.5, 0.5), c(-0.5, 1), c(3, -2), c(-2, -0.5)};
        case OlbrichtDomain::D2Plus: return {c(2, 0), c(1.5, 0.5), c(0.5, 1), c(3, -2), c(0.3, -0.8)};
        case OlbrichtDomain::D3: return {c(-2, 0), c(-1.5, -0.5), c(0.5, -1), c(-3, 2), c(2, 0.5)};
    }
    return {};
}

IdentityReport verify_identity(const OlbrichtId& id, const ParamPair& p, const std::vector<cplx>& x_samples,
                               double tol) {
    IdentityReport rep;
    for (cplx x : x_samples) {
        try {
            cplx lhs = eval_olbricht(id, p, x, tol).value;
            cplx rhs = olbricht_reduction(id, p, x, tol);
            double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
            double r = std::abs(lhs - rhs) / scale;
            rep.residuals.push_back(r);
            rep.max_residual = std::max(rep.max_residual, r);
        } catch (const MathError& e) {
            rep.errors.push_back(e.what());
            rep.residuals.push_back(std::numeric_limits<double>::infinity());
            rep.max_residual = std::numeric_limits<double>::infinity();
        }
    }
    return rep;
}

double ode_residual(const OlbrichtId& id, const ParamPair& p, cplx x, double h) {
    return legendre_ode_residual([&](cplx t) { return eval_olbricht(id, p, t, 1e-15).value; }, p, x, h);
}

}  // namespace ferrox
