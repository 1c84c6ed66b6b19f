#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "ferrox/ferrers.hpp"
#include "ferrox/fourier.hpp"
#include "ferrox/hyp2f1.hpp"
#include "ferrox/olbricht.hpp"
#include "ferrox/regions.hpp"
#include "ferrox_cli/cli.hpp"

namespace ferrox::cli {

namespace {

using ojson = nlohmann::ordered_json;

// Thrown for malformed input after CLI11 has accepted the command line.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ojson complex_json(cplx z) { return ojson{{"re", z.real()}, {"im", z.imag()}}; }

cplx need_complex(const std::string& name, const std::string& text) {
    auto z = parse_complex(text);
    if (!z) throw UsageError("--" + name + ": cannot parse complex literal '" + text + "'");
    return *z;
}

double resolve_tol(const std::optional<double>& flag) {
    if (flag) {
        if (!(*flag > 0.0)) throw UsageError("--tol must be positive");
        return *flag;
    }
    if (const char* env = std::getenv("FERROX_TOL")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(v > 0.0)) throw UsageError(std::string("FERROX_TOL: invalid value '") + env + "'");
        return v;
    }
    return kDefaultTol;
}

int math_error(std::ostream& out, const MathError& e) {
    ojson j{{"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}}};
    out << dump_json(j);
    return kMath;
}

// Common options of the Ferrers-evaluating commands.
struct PointArgs {
    std::string nu = "0", mu = "0", x;
    std::optional<double> tol;
};

void add_point_options(CLI::App* sub, PointArgs& a) {
    sub->add_option("--nu", a.nu, "degree (complex literal)")->required();
    sub->add_option("--mu", a.mu, "order (complex literal)")->required();
    sub->add_option("--x", a.x, "argument in D1 (complex literal)")->required();
    sub->add_option("--tol", a.tol, "relative tolerance (default 1e-12 or FERROX_TOL)");
}

// eval ----------------------------------------------------------------------

struct EvalArgs {
    PointArgs pt;
    std::string rep;
};

ojson eval_json(const EvalOutcome& r) {
    return ojson{{"value", complex_json(r.value)},
                 {"rep", r.rep ? to_string(*r.rep) : "none"},
                 {"terms_used", r.terms_used},
                 {"tail_estimate", r.tail_estimate}};
}

int cmd_eval(const EvalArgs& a, std::ostream& out) {
    const ParamPair p{need_complex("nu", a.pt.nu), need_complex("mu", a.pt.mu)};
    const cplx x = need_complex("x", a.pt.x);
    const double tol = resolve_tol(a.pt.tol);
    std::optional<RepresentationId> rep;
    if (!a.rep.empty()) {
        rep = representation_from_string(a.rep);
        if (!rep) throw UsageError("--rep: unknown representation '" + a.rep + "'");
    }
    try {
        EvalOutcome r = rep ? ferrers_q_rep(*rep, p, x, tol) : ferrers_q(p, x, tol);
        out << dump_json(eval_json(r));
        return kOk;
    } catch (const MathError& e) {
        return math_error(out, e);
    }
}

// compare -------------------------------------------------------------------

int cmd_compare(const PointArgs& a, std::ostream& out) {
    const ParamPair p{need_complex("nu", a.nu), need_complex("mu", a.mu)};
    const cplx x = need_complex("x", a.x);
    const double tol = resolve_tol(a.tol);
    if (!in_d1(x)) return math_error(out, MathError(ErrorKind::Domain, "x not in D1"));
    ojson rows = ojson::array();
    std::vector<cplx> values;
    for (RepresentationId rep : kAllRepresentations) {
        ojson row{{"rep", to_string(rep)}};
        if (auto why = representation_unavailable(rep, p, x)) {
            row["valid"] = false;
            row["reason"] = *why;
        } else {
            try {
                EvalOutcome r = ferrers_q_rep(rep, p, x, tol);
                row["valid"] = true;
                row["value"] = complex_json(r.value);
                row["terms_used"] = r.terms_used;
                row["tail_estimate"] = r.tail_estimate;
                values.push_back(r.value);
            } catch (const MathError& e) {
                row["valid"] = false;
                row["reason"] = e.what();
            }
        }
        rows.push_back(std::move(row));
    }
    double spread = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t k = i + 1; k < values.size(); ++k) {
            double s = std::max(std::abs(values[i]), std::abs(values[k]));
            if (s > 0.0) spread = std::max(spread, std::abs(values[i] - values[k]) / s);
        }
    ojson j{{"nu", complex_json(p.nu)},
            {"mu", complex_json(p.mu)},
            {"x", complex_json(x)},
            {"rows", rows},
            {"valid_count", values.size()},
            {"rel_spread", spread}};
    out << dump_json(j);
    return kOk;
}

// region --------------------------------------------------------------------

struct RegionArgs {
    std::optional<int> j;
    double re_min = -2, re_max = 2, im_min = -2, im_max = 2;
    int nx = 101, ny = 101;
    std::string format = "csv";
    std::string root = "Y1";
    unsigned threads = 0;
};

// Row-major grid, row 0 at im_max. Each cell holds a bit mask over j = 1..18.
std::vector<std::uint32_t> sample_grid(const RegionArgs& a, RootVariant root) {
    const std::size_t n = std::size_t(a.nx) * std::size_t(a.ny);
    std::vector<std::uint32_t> cells(n, 0);
    auto point = [&](int ix, int iy) {
        double re = a.re_min + (a.re_max - a.re_min) * ix / double(a.nx - 1);
        double im = a.im_max - (a.im_max - a.im_min) * iy / double(a.ny - 1);
        return cplx(re, im);
    };
    auto work = [&](int row_begin, int row_end) {
        for (int iy = row_begin; iy < row_end; ++iy)
            for (int ix = 0; ix < a.nx; ++ix) {
                cplx x = point(ix, iy);
                std::uint32_t mask = 0;
                for (int j = 1; j <= kNumArguments; ++j) {
                    if (a.j && *a.j != j) continue;
                    if (in_region(j, x, root)) mask |= 1u << (j - 1);
                }
                cells[std::size_t(iy) * std::size_t(a.nx) + std::size_t(ix)] = mask;
            }
    };
    unsigned t = a.threads ? a.threads : std::max(1u, std::thread::hardware_concurrency());
    t = std::min<unsigned>(t, unsigned(a.ny));
    std::vector<std::thread> pool;
    const int chunk = (a.ny + int(t) - 1) / int(t);
    for (unsigned w = 0; w < t; ++w) {
        int b = int(w) * chunk, e = std::min(a.ny, b + chunk);
        if (b < e) pool.emplace_back(work, b, e);
    }
    for (auto& th : pool) th.join();
    return cells;
}

int cmd_region(const RegionArgs& a, std::ostream& out) {
    if (a.nx < 2 || a.ny < 2) throw UsageError("grid: nx and ny must be at least 2");
    if (!(a.re_min < a.re_max) || !(a.im_min < a.im_max)) throw UsageError("grid: need re_min < re_max and im_min < im_max");
    if (a.j && (*a.j < 1 || *a.j > kNumArguments)) throw UsageError("--j must be in 1..18");
    if (a.format != "csv" && a.format != "pgm") throw UsageError("--format must be csv or pgm");
    if (a.root != "Y1" && a.root != "Y2") throw UsageError("--root must be Y1 or Y2");
    const RootVariant root = a.root == "Y1" ? RootVariant::Y1 : RootVariant::Y2;
    const auto cells = sample_grid(a, root);
    if (a.format == "pgm") {
        out << "P5\n" << a.nx << ' ' << a.ny << "\n255\n";
        std::string raster(cells.size(), '\0');
        for (std::size_t i = 0; i < cells.size(); ++i) {
            // Inside is dark; the all-j raster darkens with the number of regions.
            int count = std::popcount(cells[i]);
            int total = a.j ? 1 : kNumArguments;
            raster[i] = char(std::uint8_t(255 - (255 * count) / total));
        }
        out.write(raster.data(), std::streamsize(raster.size()));
        return kOk;
    }
    std::vector<std::string> header{"re", "im"};
    if (a.j) header.push_back("inside");
    else
        for (int j = 1; j <= kNumArguments; ++j) header.push_back("w" + std::to_string(j));
    out << csv_record(header);
    for (int iy = 0; iy < a.ny; ++iy)
        for (int ix = 0; ix < a.nx; ++ix) {
            double re = a.re_min + (a.re_max - a.re_min) * ix / double(a.nx - 1);
            double im = a.im_max - (a.im_max - a.im_min) * iy / double(a.ny - 1);
            std::uint32_t m = cells[std::size_t(iy) * std::size_t(a.nx) + std::size_t(ix)];
            std::vector<std::string> f{format_double(re), format_double(im)};
            if (a.j) f.push_back((m >> (*a.j - 1)) & 1u ? "1" : "0");
            else
                for (int j = 1; j <= kNumArguments; ++j) f.push_back((m >> (j - 1)) & 1u ? "1" : "0");
            out << csv_record(f);
        }
    return kOk;
}

// fourier -------------------------------------------------------------------

struct FourierArgs {
    std::string nu = "0", mu = "0", theta;
    std::size_t n_terms = 1000;
    std::optional<double> tol;
};

int cmd_fourier(const FourierArgs& a, std::ostream& out, std::ostream& err) {
    const cplx nu = need_complex("nu", a.nu), mu = need_complex("mu", a.mu);
    auto theta = parse_angle(a.theta);
    if (!theta) throw UsageError("--theta: cannot parse angle '" + a.theta + "'");
    const double tol = resolve_tol(a.tol);
    try {
        FourierTermStream s{nu, mu, *theta};
        ConvergenceInfo ci = convergence_class(mu, *theta);
        cplx sum = fourier_partial_sum(s, a.n_terms);
        ojson j{{"partial_sum", complex_json(sum)},
                {"n_terms", a.n_terms},
                {"class", to_string(ci.cls)},
                {"absolute_at_half_pi", ci.absolute_at_half_pi}};
        try {
            EvalOutcome ref = ferrers_q({nu, mu}, std::cos(*theta), tol);
            j["reference_value"] = complex_json(ref.value);
            j["reference_rep"] = ref.rep ? to_string(*ref.rep) : "none";
            j["discrepancy"] = std::abs(sum - ref.value);
        } catch (const MathError& e) {
            j["reference_error"] = e.what();
        }
        if (ci.cls == ConvergenceClass::Divergent) {
            std::string w = "series diverges for Re mu >= 1/2 away from theta = pi/2; partial sums do not approach Q";
            err << "warning: " << w << "\n";
            j["warning"] = w;
        } else if (ci.cls == ConvergenceClass::Unclassified) {
            std::string w = "convergence not classified for Re mu >= 1/2 at theta = pi/2";
            err << "warning: " << w << "\n";
            j["warning"] = w;
        }
        out << dump_json(j);
        return kOk;
    } catch (const MathError& e) {
        return math_error(out, e);
    }
}

// olbricht ------------------------------------------------------------------

struct OlbrichtArgs {
    std::string group;
    std::optional<int> index;
    int samples = 5;
    std::vector<std::string> nu, mu;
    bool catalogue = false;
    std::optional<double> tol;
};

constexpr double kIdentityThreshold = 1e-8;
constexpr double kOdeThreshold = 1e-4;

std::optional<OlbrichtGroup> group_from_string(const std::string& s) {
    if (s == "I") return OlbrichtGroup::I;
    if (s == "II") return OlbrichtGroup::II;
    if (s == "III") return OlbrichtGroup::III;
    return std::nullopt;
}

ojson record_json(const IdentityRecord& r) {
    ojson j{{"id", to_string(r.id)}, {"group", to_string(r.id.group)}, {"index", r.id.index}};
    if (r.id.group == OlbrichtGroup::III) j["root"] = r.id.root.value_or(RootVariant::Y1) == RootVariant::Y1 ? "Y1" : "Y2";
    j["definition"] = r.definition;
    j["reduction"] = r.reduction;
    j["analytic_domain"] = to_string(r.analytic_domain);
    j["identity_domain"] = to_string(r.identity_domain);
    if (r.same_as) j["same_as"] = to_string(*r.same_as);
    return j;
}

// Points in the upper half-plane inside both D1+ and D2+.
const std::vector<cplx>& upper_overlap_samples() {
    static const std::vector<cplx> v{{0.5, 0.4}, {0.3, 1.1}, {0.2, 0.3}, {1.5, 0.5}, {0.8, 2.0}};
    return v;
}

int cmd_olbricht(const OlbrichtArgs& a, std::ostream& out) {
    std::optional<OlbrichtGroup> g;
    if (!a.group.empty()) {
        g = group_from_string(a.group);
        if (!g) throw UsageError("--group must be I, II or III");
    }
    if (a.index && (*a.index < 1 || *a.index > 24)) throw UsageError("--index must be in 1..24");
    if (a.samples < 1 || a.samples > 5) throw UsageError("--samples must be in 1..5");
    if (a.nu.size() != a.mu.size()) throw UsageError("--nu and --mu must be given the same number of times");
    const double tol = resolve_tol(a.tol);

    std::vector<const IdentityRecord*> selected;
    for (const IdentityRecord& r : olbricht_catalogue())
        if ((!g || r.id.group == *g) && (!a.index || r.id.index == *a.index)) selected.push_back(&r);

    if (a.catalogue) {
        ojson cat = ojson::array();
        for (const IdentityRecord* r : selected) cat.push_back(record_json(*r));
        out << dump_json(ojson{{"catalogue", cat}});
        return kOk;
    }

    std::vector<ParamPair> params;
    for (std::size_t i = 0; i < a.nu.size(); ++i)
        params.push_back({need_complex("nu", a.nu[i]), need_complex("mu", a.mu[i])});
    if (params.empty()) params = {{0.3, 0.4}, {1.7, 0.25}, {cplx(-0.4, 0.2), cplx(0.1, 0.1)}};

    ojson entries = ojson::array();
    std::map<std::pair<int, int>, bool> entry_pass;
    std::size_t failed_records = 0;
    for (const IdentityRecord* r : selected) {
        auto id_samples = domain_samples(r->identity_domain);
        auto an_samples = domain_samples(r->analytic_domain);
        id_samples.resize(std::size_t(a.samples));
        an_samples.resize(std::size_t(a.samples));
        double id_max = 0.0, ode_max = 0.0;
        std::set<std::string> errors;
        for (const ParamPair& p : params) {
            IdentityReport rep = verify_identity(r->id, p, id_samples, tol);
            id_max = std::max(id_max, rep.max_residual);
            errors.insert(rep.errors.begin(), rep.errors.end());
            for (cplx x : an_samples) {
                try {
                    ode_max = std::max(ode_max, ode_residual(r->id, p, x));
                } catch (const MathError& e) {
                    errors.insert(e.what());
                    ode_max = std::numeric_limits<double>::infinity();
                }
            }
        }
        ojson j = record_json(*r);
        j["identity_residual_max"] = id_max;
        j["ode_residual_max"] = ode_max;
        if (r->id.group == OlbrichtGroup::III && admitted_roots(r->id.group, r->id.index).size() == 2) {
            // Y1 and Y2 coincide for Im x > 0; for Im x < 0 each follows its own reduction.
            double agree = 0.0;
            OlbrichtId y1{r->id.group, r->id.index, RootVariant::Y1}, y2{r->id.group, r->id.index, RootVariant::Y2};
            for (const ParamPair& p : params)
                for (cplx x : upper_overlap_samples()) {
                    try {
                        cplx v1 = eval_olbricht(y1, p, x, tol).value, v2 = eval_olbricht(y2, p, x, tol).value;
                        agree = std::max(agree, std::abs(v1 - v2) / std::max(std::abs(v1), 1e-300));
                    } catch (const MathError& e) {
                        errors.insert(e.what());
                    }
                }
            j["upper_half_plane_root_agreement"] = agree;
        }
        const bool pass = id_max < kIdentityThreshold && ode_max < kOdeThreshold;
        j["errors"] = ojson(std::vector<std::string>(errors.begin(), errors.end()));
        j["status"] = pass ? "pass" : "fail";
        if (!pass) ++failed_records;
        auto key = std::make_pair(int(r->id.group), r->id.index);
        auto it = entry_pass.find(key);
        entry_pass[key] = (it == entry_pass.end() ? true : it->second) && pass;
        entries.push_back(std::move(j));
    }
    std::size_t passed_entries = 0;
    for (auto& [k, v] : entry_pass) passed_entries += v ? 1 : 0;
    ojson ps = ojson::array();
    for (const ParamPair& p : params) ps.push_back({{"nu", complex_json(p.nu)}, {"mu", complex_json(p.mu)}});
    ojson j{{"parameters", ps},
            {"samples", a.samples},
            {"thresholds", {{"identity", kIdentityThreshold}, {"ode", kOdeThreshold}}},
            {"entries", entries},
            {"summary",
             {{"records", selected.size()},
              {"entries", entry_pass.size()},
              {"passed_entries", passed_entries},
              {"failed_records", failed_records}}}};
    out << dump_json(j);
    return failed_records ? kVerification : kOk;
}

// cut -----------------------------------------------------------------------

struct CutArgs {
    std::string a, b, c, side = "above", formula = "auto";
    double x = 2.0;
    std::optional<double> tol;
};

int cmd_cut(const CutArgs& args, std::ostream& out) {
    HypParams p{need_complex("a", args.a), need_complex("b", args.b), need_complex("c", args.c)};
    if (args.side != "above" && args.side != "below") throw UsageError("--side must be above or below");
    const CutSide side = args.side == "above" ? CutSide::Above : CutSide::Below;
    static const std::map<std::string, CutFormula> formulas{
        {"B1", CutFormula::B1}, {"B2", CutFormula::B2}, {"B3", CutFormula::B3}, {"B4", CutFormula::B4}};
    if (args.formula != "auto" && !formulas.count(args.formula)) throw UsageError("--formula must be auto or B1..B4");
    const double tol = resolve_tol(args.tol);
    try {
        SeriesResult r = args.formula == "auto" ? f21_cut(p, args.x, side, tol)
                                                : f21_cut_formula(formulas.at(args.formula), p, args.x, side, tol);
        ojson j{{"x", args.x},
                {"side", args.side},
                {"formula", args.formula},
                {"value", complex_json(r.value)},
                {"terms_used", r.terms_used},
                {"tail_estimate", r.tail_estimate}};
        out << dump_json(j);
        return kOk;
    } catch (const MathError& e) {
        return math_error(out, e);
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ferrers functions of the second kind through hypergeometric representations", "ferrox"};
    app.require_subcommand(1);

    EvalArgs ev;
    auto* s_eval = app.add_subcommand("eval", "evaluate Ferrers Q");
    add_point_options(s_eval, ev.pt);
    s_eval->add_option("--rep", ev.rep, "force one representation (I1..I7, II1..II6, III1U, ..., FourierUV)");

    PointArgs cmp;
    auto* s_cmp = app.add_subcommand("compare", "evaluate every representation and report the spread");
    add_point_options(s_cmp, cmp);

    RegionArgs rg;
    auto* s_rg = app.add_subcommand("region", "sample |w_j(x)| < 1 on a grid");
    s_rg->add_option("--j", rg.j, "argument index 1..18 (all when omitted)");
    s_rg->add_option("--re-min", rg.re_min);
    s_rg->add_option("--re-max", rg.re_max);
    s_rg->add_option("--im-min", rg.im_min);
    s_rg->add_option("--im-max", rg.im_max);
    s_rg->add_option("--nx", rg.nx, "columns (>= 2)");
    s_rg->add_option("--ny", rg.ny, "rows (>= 2)");
    s_rg->add_option("--format", rg.format, "csv or pgm");
    s_rg->add_option("--root", rg.root, "Y1 or Y2 for the square-root arguments");
    s_rg->add_option("--threads", rg.threads, "worker threads (0 = hardware)");

    FourierArgs fa;
    auto* s_f = app.add_subcommand("fourier", "partial sums of the Fourier expansion at x = cos(theta)");
    s_f->add_option("--nu", fa.nu)->required();
    s_f->add_option("--mu", fa.mu)->required();
    s_f->add_option("--theta", fa.theta, "angle in (0, pi), e.g. 1.0 or pi/3")->required();
    s_f->add_option("--n-terms", fa.n_terms, "number of terms");
    s_f->add_option("--tol", fa.tol);

    OlbrichtArgs oa;
    auto* s_o = app.add_subcommand("olbricht", "verify the 72 Olbricht solutions");
    s_o->add_option("--group", oa.group, "I, II or III");
    s_o->add_option("--index", oa.index, "entry 1..24");
    s_o->add_option("--samples", oa.samples, "sample points per entry (1..5)");
    s_o->add_option("--nu", oa.nu, "degree; repeat together with --mu for several parameter pairs");
    s_o->add_option("--mu", oa.mu, "order");
    s_o->add_flag("--catalogue", oa.catalogue, "print the catalogue without verifying");
    s_o->add_option("--tol", oa.tol);

    CutArgs ca;
    auto* s_c = app.add_subcommand("cut", "2F1 boundary values on the cut x > 1");
    s_c->add_option("--a", ca.a)->required();
    s_c->add_option("--b", ca.b)->required();
    s_c->add_option("--c", ca.c)->required();
    s_c->add_option("--x", ca.x, "real point > 1")->required();
    s_c->add_option("--side", ca.side, "above or below");
    s_c->add_option("--formula", ca.formula, "auto or B1..B4");
    s_c->add_option("--tol", ca.tol);

    std::vector<std::string> storage{"ferrox"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*s_eval) return cmd_eval(ev, out);
        if (*s_cmp) return cmd_compare(cmp, out);
        if (*s_rg) return cmd_region(rg, out);
        if (*s_f) return cmd_fourier(fa, out, err);
        if (*s_o) return cmd_olbricht(oa, out);
        if (*s_c) return cmd_cut(ca, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const MathError& e) {
        return math_error(out, e);
    }
    return kUsage;
}

}  // namespace ferrox::cli
