#include "ferrox/regions.hpp"

#include <cmath>
#include <string>

namespace ferrox {

namespace {

MathError singular(int j, cplx x) {
    return MathError(ErrorKind::Domain, "argument w" + std::to_string(j) + " is singular at x = (" +
                                            std::to_string(x.real()) + "," + std::to_string(x.imag()) + ")");
}

bool is_pm_one(cplx x) { return x.imag() == 0.0 && std::fabs(x.real()) == 1.0; }

// theta = acos(x) = alpha + i beta with alpha in (0, pi), for x in D1.
void alpha_beta(cplx x, double& alpha, double& beta) {
    cplx theta = std::acos(x);
    alpha = theta.real();
    beta = theta.imag();
}

bool group3_y1(int j, cplx x) {
    double a, b;
    alpha_beta(x, a, b);
    double c2 = std::cos(2.0 * a);
    switch (j) {
        case 13: return std::exp(2.0 * b) * c2 < 0.5;
        case 14: return b < 0.0;
        case 15: return std::exp(-2.0 * b) * c2 > 0.5;
        case 16: return std::exp(2.0 * b) * c2 > 0.5;
        case 17: return std::exp(-2.0 * b) * c2 < 0.5;
        case 18: return b > 0.0;
    }
    return false;
}

}  // namespace

cplx argument(int j, cplx x, RootVariant root) {
    if (j < 1 || j > kNumArguments) throw MathError(ErrorKind::Parameter, "argument index must lie in 1..18");
    switch (j) {
        case 1: return (1.0 - x) / 2.0;
        case 2: return (1.0 + x) / 2.0;
        case 3:
            if (x == -1.0) throw singular(j, x);
            return (x - 1.0) / (x + 1.0);
        case 4:
            if (x == 1.0) throw singular(j, x);
            return (x + 1.0) / (x - 1.0);
        case 5:
            if (x == -1.0) throw singular(j, x);
            return 2.0 / (1.0 + x);
        case 6:
            if (x == 1.0) throw singular(j, x);
            return 2.0 / (1.0 - x);
        case 7: return 1.0 - x * x;
        case 8:
            if (is_pm_one(x)) throw singular(j, x);
            return 1.0 / (1.0 - x * x);
        case 9: return x * x;
        case 10:
            if (x == 0.0) throw singular(j, x);
            return 1.0 / (x * x);
        case 11:
            if (x == 0.0) throw singular(j, x);
            return (x * x - 1.0) / (x * x);
        case 12:
            if (is_pm_one(x)) throw singular(j, x);
            return x * x / (x * x - 1.0);
        default: break;
    }
    if (is_pm_one(x)) throw singular(j, x);
    cplx y = root_y(root, x);
    switch (j) {
        case 13: return (-x + y) / (2.0 * y);
        case 14: return (x - y) / (x + y);
        case 15: return 2.0 * y / (x + y);
        case 16: return 2.0 * y / (-x + y);
        case 17: return (x + y) / (2.0 * y);
        default: return (x + y) / (x - y);
    }
}

bool in_region(int j, cplx x, RootVariant root) {
    if (j < 1 || j > kNumArguments) throw MathError(ErrorKind::Parameter, "argument index must lie in 1..18");
    const double re = x.real(), im = x.imag();
    const double h = re * re - im * im;  // Re x^2
    switch (j) {
        case 1: return std::abs(1.0 - x) < 2.0;
        case 2: return std::abs(1.0 + x) < 2.0;
        case 3: return x != -1.0 && re > 0.0;
        case 4: return x != 1.0 && re < 0.0;
        case 5: return x != -1.0 && std::abs(1.0 + x) > 2.0;
        case 6: return x != 1.0 && std::abs(1.0 - x) > 2.0;
        case 7: return std::abs(1.0 - x) * std::abs(1.0 + x) < 1.0;
        case 8: return !is_pm_one(x) && std::abs(1.0 - x) * std::abs(1.0 + x) > 1.0;
        case 9: return std::abs(x) < 1.0;
        case 10: return x != 0.0 && std::abs(x) > 1.0;
        case 11: return x != 0.0 && h > 0.5;
        case 12: return !is_pm_one(x) && h < 0.5;
        default: break;
    }
    if (is_pm_one(x)) return false;
    if (root == RootVariant::Y1) {
        if (!in_d1(x)) return false;
        return group3_y1(j, x);
    }
    if (im == 0.0 && std::fabs(re) <= 1.0) return false;
    if (im > 0.0) return group3_y1(j, x);
    if (im < 0.0) {
        // Y2 = -Y1 below the axis, which swaps 13<->17, 14<->18, 15<->16.
        static constexpr int swap[] = {17, 18, 16, 15, 13, 14};
        return group3_y1(swap[j - 13], x);
    }
    // Real |x| > 1: Y2 is real and the maps are real; decide directly.
    return std::abs(argument(j, x, root)) < 1.0;
}

RegionReport classify(cplx x) {
    RegionReport r;
    r.x = x;
    for (int j = 1; j <= kNumArguments; ++j) r.inside[j - 1] = in_region(j, x, RootVariant::Y1);
    r.d1 = in_d1(x);
    r.d1_plus = in_d1_plus(x);
    r.d2 = in_d2(x);
    r.d2_plus = in_d2_plus(x);
    r.d3 = in_d3(x);
    return r;
}

double curve_alpha_max(CurveBranch branch) { return branch == CurveBranch::Plain ? kPi / 4.0 : kPi / 6.0; }

cplx curve_w13_closed(double alpha, CurveBranch branch) {
    if (!(alpha >= 0.0 && alpha <= curve_alpha_max(branch)))
        throw MathError(ErrorKind::Parameter, "curve_w13: alpha outside the parameter interval");
    double t = std::sqrt(2.0 * std::cos(2.0 * alpha));
    return {0.5 * (t + 1.0 / t) * std::cos(alpha), 0.5 * (t - 1.0 / t) * std::sin(alpha)};
}

cplx curve_w13(double alpha, CurveBranch branch) {
    if (!(alpha > 0.0 && alpha < curve_alpha_max(branch)))
        throw MathError(ErrorKind::Parameter, "curve_w13: alpha outside the open parameter interval");
    return curve_w13_closed(alpha, branch);
}

double golden_section_max(const std::function<double(double)>& f, double lo, double hi, double tol) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - invphi * (b - a), d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

CurveExtremes curve_w13_extremes(CurveBranch branch) {
    const double hi = curve_alpha_max(branch);
    auto at = [branch](double a) { return curve_w13_closed(a, branch); };
    double a_in = golden_section_max([&](double a) { return -at(a).real(); }, 0.0, hi);
    double a_out = golden_section_max([&](double a) { return at(a).real(); }, 0.0, hi);
    double a_up = golden_section_max([&](double a) { return at(a).imag(); }, 0.0, hi);
    return {at(a_in), at(a_out), at(a_up)};
}

}  // namespace ferrox
