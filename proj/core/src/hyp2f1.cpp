#include "ferrox/hyp2f1.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace ferrox {

namespace {

constexpr std::size_t kMaxTerms = 50000;
constexpr std::size_t kMaxPolyDegree = 100000;
// Gamma arguments closer than this to a pole make a route unusable.
constexpr double kPoleReject = 1e-8;
// Routes this close to a degenerate case lose digits to cancellation and are
// only used when nothing better exists.
constexpr double kNearDegenerate = 1e-3;
// A route whose terms cancel by more than this factor is only a fallback.
constexpr double kCondAccept = 1e3;

// Degree of the polynomial when a or b is in -N0, otherwise -1.
long long poly_degree(const HypParams& p) {
    long long n = -1;
    for (cplx v : {p.a, p.b}) {
        if (is_nonpositive_integer(v) && -v.real() <= double(kMaxPolyDegree)) {
            long long d = static_cast<long long>(-v.real());
            if (n < 0 || d < n) n = d;
        }
    }
    return n;
}

SeriesResult poly_sum(const HypParams& p, cplx w, long long degree) {
    cplx term = 1.0, sum = 1.0;
    for (long long n = 0; n < degree; ++n) {
        double dn = double(n);
        term *= (p.a + dn) * (p.b + dn) / ((p.c + dn) * (dn + 1.0)) * w;
        sum += term;
    }
    return {sum, static_cast<std::size_t>(degree + 1), 0.0};
}

// Result plus a cancellation estimate: sum of magnitudes over magnitude of sum.
struct Eval {
    SeriesResult r;
    double cond = 1.0;
};

// Raw Gauss series without domain checks; the caller guarantees convergence.
Eval raw_series_cond(const HypParams& p, cplx w, double tol) {
    const double n0 = std::max({std::abs(p.a), std::abs(p.b), std::abs(p.c)}) + 2.0;
    cplx term = 1.0, sum = 1.0;
    double mass = 1.0;
    for (std::size_t n = 0; n < kMaxTerms; ++n) {
        double dn = double(n);
        cplx ratio = (p.a + dn) * (p.b + dn) / ((p.c + dn) * (dn + 1.0)) * w;
        cplx next = term * ratio;
        double r = std::abs(ratio);
        double scale = std::max(std::abs(sum), std::numeric_limits<double>::min());
        if (dn >= n0 && r < 1.0 && std::abs(term) <= tol * scale) {
            double tail = std::abs(next) / ((1.0 - r) * scale);
            if (tail <= tol) return {{sum, n + 1, tail}, mass / scale};
        }
        term = next;
        sum += term;
        mass += std::abs(term);
        if (!std::isfinite(sum.real()) || !std::isfinite(sum.imag())) break;
    }
    throw MathError(ErrorKind::Convergence, "f21: series failed to converge within the term budget");
}

SeriesResult raw_series(const HypParams& p, cplx w, double tol) { return raw_series_cond(p, w, tol).r; }

// Taylor-step continuation of w(1-w)y'' + (c-(a+b+1)w)y' - ab y = 0 from
// w_s = w/(2|w|) along the ray to w.
Eval ode_continue(const HypParams& p, cplx w, double tol) {
    const cplx a = p.a, b = p.b, c = p.c;
    cplx w0 = 0.5 * w / std::abs(w);
    Eval f = raw_series_cond(p, w0, std::min(tol, 1e-15));
    Eval df = raw_series_cond({a + 1.0, b + 1.0, c + 1.0}, w0, std::min(tol, 1e-15));
    cplx y = f.r.value;
    cplx dy = a * b / c * df.r.value;
    std::size_t terms = f.r.terms_used + df.r.terms_used;
    double cond = std::max(f.cond, df.cond);

    const cplx s1 = a + b + 1.0, r0 = -a * b;
    for (int step = 0; step < 10000; ++step) {
        cplx remaining = w - w0;
        if (std::abs(remaining) == 0.0) break;
        double radius = std::min(std::abs(w0), std::abs(w0 - 1.0));
        cplx h = remaining;
        if (std::abs(h) > 0.5 * radius) h *= 0.5 * radius / std::abs(h);

        cplx p0 = w0 * (1.0 - w0), p1 = 1.0 - 2.0 * w0;
        const double p2 = -1.0;
        cplx q0 = c - s1 * w0, q1 = -s1;
        cplx ym = y, yn = dy;  // Taylor coefficients y_n, y_{n+1}
        cplx hp = h;           // h^{n+1}
        cplx val = ym + yn * h, der = yn;
        double mass = std::abs(ym) + std::abs(yn * h);
        int small = 0;
        for (int n = 0; n < 400; ++n) {
            double dn = double(n);
            cplx y2 = -((p1 * dn + q0) * (dn + 1.0) * yn + (p2 * dn * (dn - 1.0) + q1 * dn + r0) * ym) /
                      (p0 * (dn + 2.0) * (dn + 1.0));
            cplx hn2 = hp * h;
            cplx tv = y2 * hn2;
            cplx td = (dn + 2.0) * y2 * hp;
            val += tv;
            der += td;
            mass += std::abs(tv);
            ++terms;
            bool tiny = std::abs(tv) <= 1e-17 * std::abs(val) && std::abs(td) <= 1e-17 * std::abs(der);
            small = tiny ? small + 1 : 0;
            if (small >= 2) break;
            ym = yn;
            yn = y2;
            hp = hn2;
        }
        cond = std::max(cond, mass / std::max(std::abs(val), std::numeric_limits<double>::min()));
        y = val;
        dy = der;
        w0 += h;
        if (std::abs(w - w0) <= 1e-15 * std::abs(w)) break;
    }
    return {{y, terms, tol}, cond};
}

cplx finite_or_throw(cplx v) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw MathError(ErrorKind::Convergence, "f21: non-finite result");
    return v;
}

enum class Route { Direct, Pfaff, Inv, OneMinus, InvOneMinus, OneMinusInv, Ode };

struct Candidate {
    Route route;
    double modulus;
    bool near_degenerate;
};

bool real_in(cplx w, double lo, double hi) {
    return w.imag() == 0.0 && w.real() >= lo && w.real() <= hi;
}

// Gamma(c) in connection prefactors; dropped for the regularized function.
cplx gamma_c_factor(cplx c, bool regularized) { return regularized ? cplx(1.0) : gamma(c); }

Eval f21_impl(const HypParams& p, cplx w, double tol, bool regularized);

// Two connection terms, each a coefficient times a 2F1 at a common argument.
struct Term {
    cplx coef;
    HypParams hp;
};

// Sub-evaluation inside a connection formula. The working argument already
// satisfies |z| <= kThetaCut, so only the direct and Pfaff series are used;
// going back through the dispatcher could map z straight back to w.
Eval inner_series(const HypParams& p, cplx z, double tol) {
    long long deg = poly_degree(p);
    if (deg >= 0) return {poly_sum(p, z, deg), 1.0};
    Eval direct = raw_series_cond(p, z, tol);
    if (direct.cond <= kCondAccept || std::abs(z / (z - 1.0)) > kThetaCut) return direct;
    Eval pf = raw_series_cond({p.a, p.c - p.b, p.c}, z / (z - 1.0), tol);
    pf.r.value *= principal_pow(1.0 - z, -p.a);
    return pf.cond < direct.cond ? pf : direct;
}

Eval combine(const Term& t1, const Term& t2, cplx z, double tol, bool nested = true) {
    Eval out{{0.0, 0, 0.0}, 1.0};
    double mass = 0.0, inner = 1.0;
    for (const Term& t : {t1, t2}) {
        if (t.coef == 0.0) continue;
        Eval s = nested ? inner_series(t.hp, z, tol) : f21_impl(t.hp, z, tol, false);
        cplx part = t.coef * s.r.value;
        out.r.value += part;
        mass += std::abs(part);
        inner = std::max(inner, s.cond);
        out.r.terms_used += s.r.terms_used;
        out.r.tail_estimate = std::max(out.r.tail_estimate, s.r.tail_estimate);
    }
    out.r.value = finite_or_throw(out.r.value);
    double mag = std::abs(out.r.value);
    out.cond = inner * (mag > 0.0 ? mass / mag : 1.0);
    return out;
}

Eval eval_route(Route route, const HypParams& p, cplx w, double tol, bool regularized) {
    const cplx a = p.a, b = p.b, c = p.c;
    switch (route) {
        case Route::Direct: {
            Eval s = raw_series_cond(p, w, tol);
            if (regularized) s.r.value *= rgamma(c);
            return s;
        }
        case Route::Pfaff: {
            Eval s = raw_series_cond({a, c - b, c}, w / (w - 1.0), tol);
            s.r.value *= principal_pow(1.0 - w, -a);
            if (regularized) s.r.value *= rgamma(c);
            return s;
        }
        case Route::Inv: {
            cplx gc = gamma_c_factor(c, regularized);
            Term t1{gc * gamma_ratio({b - a}, {b, c - a}) * principal_pow(-w, -a), {a, a - c + 1.0, a - b + 1.0}};
            Term t2{gc * gamma_ratio({a - b}, {a, c - b}) * principal_pow(-w, -b), {b, b - c + 1.0, b - a + 1.0}};
            return combine(t1, t2, 1.0 / w, tol);
        }
        case Route::OneMinus: {
            cplx gc = gamma_c_factor(c, regularized);
            cplx s = c - a - b;
            Term t1{gc * gamma_ratio({s}, {c - a, c - b}), {a, b, 1.0 - s}};
            Term t2{gc * gamma_ratio({-s}, {a, b}) * principal_pow(1.0 - w, s), {c - a, c - b, s + 1.0}};
            return combine(t1, t2, 1.0 - w, tol);
        }
        case Route::InvOneMinus: {
            cplx gc = gamma_c_factor(c, regularized);
            Term t1{gc * gamma_ratio({b - a}, {b, c - a}) * principal_pow(1.0 - w, -a), {a, c - b, a - b + 1.0}};
            Term t2{gc * gamma_ratio({a - b}, {a, c - b}) * principal_pow(1.0 - w, -b), {b, c - a, b - a + 1.0}};
            return combine(t1, t2, 1.0 / (1.0 - w), tol);
        }
        case Route::OneMinusInv: {
            cplx gc = gamma_c_factor(c, regularized);
            cplx s = c - a - b;
            Term t1{gc * gamma_ratio({s}, {c - a, c - b}) * principal_pow(w, -a), {a, a - c + 1.0, 1.0 - s}};
            Term t2{gc * gamma_ratio({-s}, {a, b}) * principal_pow(1.0 - w, s) * principal_pow(w, a - c),
                    {c - a, 1.0 - a, s + 1.0}};
            return combine(t1, t2, 1.0 - 1.0 / w, tol);
        }
        case Route::Ode: {
            Eval s = ode_continue(p, w, tol);
            if (regularized) s.r.value *= rgamma(c);
            return s;
        }
    }
    throw MathError(ErrorKind::Convergence, "f21: unknown route");
}

std::vector<Candidate> candidates(const HypParams& p, cplx w, bool regularized) {
    const cplx a = p.a, b = p.b, c = p.c;
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<Candidate> out;
    out.push_back({Route::Direct, std::abs(w), false});
    out.push_back({Route::Pfaff, std::abs(w / (w - 1.0)), false});

    double dab = dist_to_integer(a - b);
    double dcab = dist_to_integer(c - a - b);
    bool c_ok = regularized || dist_to_nonpositive_integer(c) >= kPoleReject;
    if (c_ok && dab >= kPoleReject) {
        if (!real_in(w, 0.0, inf)) out.push_back({Route::Inv, std::abs(1.0 / w), dab < kNearDegenerate});
        if (!real_in(w, 0.0, 1.0))
            out.push_back({Route::InvOneMinus, std::abs(1.0 / (1.0 - w)), dab < kNearDegenerate});
    }
    if (c_ok && dcab >= kPoleReject && !real_in(w, -inf, 0.0)) {
        out.push_back({Route::OneMinus, std::abs(1.0 - w), dcab < kNearDegenerate});
        out.push_back({Route::OneMinusInv, std::abs(1.0 - 1.0 / w), dcab < kNearDegenerate});
    }
    std::stable_sort(out.begin(), out.end(), [](const Candidate& x, const Candidate& y) {
        if (x.near_degenerate != y.near_degenerate) return !x.near_degenerate;
        return x.modulus < y.modulus;
    });
    return out;
}

// Candidates are tried in order of working-argument modulus. The first one
// whose cancellation estimate stays small wins; otherwise the least
// ill-conditioned route is kept, with ODE continuation as a competitor.
Eval evaluate(const HypParams& p, cplx w, double tol, bool regularized) {
    Eval best{};
    bool have = false;
    for (const Candidate& cand : candidates(p, w, regularized)) {
        if (cand.modulus > kThetaCut) continue;
        Eval e;
        try {
            e = eval_route(cand.route, p, w, tol, regularized);
        } catch (const MathError&) {
            continue;
        }
        if (!cand.near_degenerate && e.cond <= kCondAccept) return e;
        if (!have || e.cond < best.cond) {
            best = e;
            have = true;
        }
    }
    if (have && best.cond <= kCondAccept) return best;
    Eval ode = eval_route(Route::Ode, p, w, tol, regularized);
    if (!have || ode.cond < best.cond) return ode;
    return best;
}

Eval f21_impl(const HypParams& p, cplx w, double tol, bool regularized) {
    if (is_nonpositive_integer(p.c)) {
        if (!regularized) {
            long long deg = poly_degree(p);
            if (deg >= 0 && double(deg) < -p.c.real() + 1.0) return {poly_sum(p, w, deg), 1.0};
            throw MathError(ErrorKind::Parameter, "f21: c is a nonpositive integer");
        }
        // F(a,b;-m;w)/Gamma(-m) = (a)_{m+1}(b)_{m+1}/(m+1)! w^{m+1} F(a+m+1,b+m+1;m+2;w)
        unsigned m = static_cast<unsigned>(-p.c.real());
        cplx pref = pochhammer(p.a, m + 1) * pochhammer(p.b, m + 1) * principal_pow(w, double(m + 1));
        for (unsigned k = 1; k <= m + 1; ++k) pref /= double(k);
        if (pref == 0.0) return {{0.0, 1, 0.0}, 1.0};
        double shift = double(m) + 1.0;
        Eval s = f21_impl({p.a + shift, p.b + shift, shift + 1.0}, w, tol, false);
        s.r.value *= pref;
        return s;
    }
    long long deg = poly_degree(p);
    if (deg >= 0) {
        SeriesResult s = poly_sum(p, w, deg);
        if (regularized) s.value *= rgamma(p.c);
        return {s, 1.0};
    }
    if (w == 0.0) return {{regularized ? rgamma(p.c) : cplx(1.0), 1, 0.0}, 1.0};
    if (real_in(w, 1.0, std::numeric_limits<double>::infinity()))
        throw MathError(ErrorKind::Cut, "f21: argument w = " + std::to_string(w.real()) + " lies on the cut [1, inf)");
    return evaluate(p, w, tol, regularized);
}

}  // namespace

const char* to_string(CutSide side) { return side == CutSide::Above ? "above" : "below"; }

const char* to_string(CutFormula formula) {
    switch (formula) {
        case CutFormula::B1: return "B1";
        case CutFormula::B2: return "B2";
        case CutFormula::B3: return "B3";
        case CutFormula::B4: return "B4";
    }
    return "?";
}

SeriesResult f21_series(const HypParams& p, cplx w, double tol) {
    if (is_nonpositive_integer(p.c)) throw MathError(ErrorKind::Parameter, "f21_series: c is a nonpositive integer");
    long long deg = poly_degree(p);
    if (deg >= 0) return poly_sum(p, w, deg);
    if (!(std::abs(w) < 1.0)) throw MathError(ErrorKind::Domain, "f21_series: requires |w| < 1");
    return raw_series(p, w, tol);
}

SeriesResult f21(const HypParams& p, cplx w, double tol) { return f21_impl(p, w, tol, false).r; }

SeriesResult f21_regularized(const HypParams& p, cplx w, double tol) { return f21_impl(p, w, tol, true).r; }

SeriesResult f21_cut_formula(CutFormula formula, const HypParams& p, double x, CutSide side, double tol) {
    if (!(x > 1.0)) throw MathError(ErrorKind::Domain, "f21_cut: x must exceed 1");
    if (is_nonpositive_integer(p.c)) throw MathError(ErrorKind::Parameter, "f21_cut: c is a nonpositive integer");
    const cplx a = p.a, b = p.b, c = p.c;
    const double sgn = side == CutSide::Above ? 1.0 : -1.0;
    auto phase = [&](cplx e) { return std::exp(sgn * kI * kPi * e); };
    auto degenerate = [&](const char* what) {
        return MathError(ErrorKind::Degenerate, std::string("f21_cut: ") + to_string(formula) + " degenerate (" +
                                                    what + " is an integer)");
    };
    const cplx gc = gamma(c);
    switch (formula) {
        case CutFormula::B1: {
            if (dist_to_integer(a - b) < kPoleReject) throw degenerate("a-b");
            Term t1{gc * gamma_ratio({b - a}, {b, c - a}) * phase(a) * principal_pow(x, -a), {a, a - c + 1.0, a - b + 1.0}};
            Term t2{gc * gamma_ratio({a - b}, {a, c - b}) * phase(b) * principal_pow(x, -b), {b, b - c + 1.0, b - a + 1.0}};
            return combine(t1, t2, 1.0 / x, tol, false).r;
        }
        case CutFormula::B2: {
            cplx s = c - a - b;
            if (dist_to_integer(s) < kPoleReject) throw degenerate("c-a-b");
            Term t1{gc * gamma_ratio({s}, {c - a, c - b}) * principal_pow(x, 1.0 - c), {a - c + 1.0, b - c + 1.0, 1.0 - s}};
            Term t2{gc * gamma_ratio({-s}, {a, b}) * phase(-s) * principal_pow(x - 1.0, s), {c - a, c - b, s + 1.0}};
            return combine(t1, t2, 1.0 - x, tol, false).r;
        }
        case CutFormula::B3: {
            cplx s = c - a - b;
            if (dist_to_integer(s) < kPoleReject) throw degenerate("c-a-b");
            Term t1{gc * gamma_ratio({s}, {c - a, c - b}) * principal_pow(x, -a), {a, a - c + 1.0, 1.0 - s}};
            Term t2{gc * gamma_ratio({-s}, {a, b}) * phase(-s) * principal_pow(x - 1.0, s) * principal_pow(x, a - c),
                    {1.0 - a, c - a, s + 1.0}};
            return combine(t1, t2, 1.0 - 1.0 / x, tol, false).r;
        }
        case CutFormula::B4: {
            if (dist_to_integer(a - b) < kPoleReject) throw degenerate("a-b");
            Term t1{gc * gamma_ratio({b - a}, {b, c - a}) * phase(a) * principal_pow(x - 1.0, -a), {a, c - b, a - b + 1.0}};
            Term t2{gc * gamma_ratio({a - b}, {a, c - b}) * phase(b) * principal_pow(x - 1.0, -b), {b, c - a, b - a + 1.0}};
            return combine(t1, t2, 1.0 / (1.0 - x), tol, false).r;
        }
    }
    throw MathError(ErrorKind::Parameter, "f21_cut: unknown formula");
}

SeriesResult f21_cut(const HypParams& p, double x, CutSide side, double tol) {
    if (!(x > 1.0)) throw MathError(ErrorKind::Domain, "f21_cut: x must exceed 1");
    if (is_nonpositive_integer(p.c)) throw MathError(ErrorKind::Parameter, "f21_cut: c is a nonpositive integer");
    long long deg = poly_degree(p);
    if (deg >= 0) return poly_sum(p, x, deg);

    struct Option {
        CutFormula f;
        double modulus;
        double dist;
    };
    double dab = dist_to_integer(p.a - p.b), dcab = dist_to_integer(p.c - p.a - p.b);
    std::vector<Option> opts = {{CutFormula::B1, 1.0 / x, dab},
                                {CutFormula::B2, x - 1.0, dcab},
                                {CutFormula::B3, 1.0 - 1.0 / x, dcab},
                                {CutFormula::B4, 1.0 / (x - 1.0), dab}};
    const Option* pick = nullptr;
    for (bool allow_near : {false, true}) {
        for (const Option& o : opts) {
            if (o.dist < kPoleReject || (!allow_near && o.dist < kNearDegenerate)) continue;
            if (!pick || o.modulus < pick->modulus) pick = &o;
        }
        if (pick) break;
    }
    if (!pick)
        throw MathError(ErrorKind::Degenerate, "f21_cut: all cut formulas degenerate (a-b and c-a-b are integers)");
    return f21_cut_formula(pick->f, p, x, side, tol);
}

}  // namespace ferrox
