#include "shadowsum/checks.hpp"

#include <algorithm>
#include <cmath>

#include "shadowsum/fields.hpp"
#include "shadowsum/planar.hpp"
#include "shadowsum/recoupling.hpp"
#include "shadowsum/samples.hpp"
#include "shadowsum/tl_oracle.hpp"

namespace shadowsum {

RatFunc bracket_state_sum(const Shadow& s) {
    if (s.closed()) throw PreconditionViolated("bracket_state_sum needs a surface with boundary");
    Recoupling<LaurentField> rc{LaurentField{}};
    const LaurentField& field = rc.field();
    Shadow flat = s;
    for (auto& f : flat.faces) f.twice_gleam = 0;
    RatFunc total;
    for (const auto& c : enumerate_colorings(s, std::max(breadth(s), 0))) {
        long i_exp = 0, s_exp = 0;
        for (std::size_t f = 0; f < s.faces.size(); ++f) {
            const long u = c[f], g = s.faces[f].twice_gleam;
            i_exp += u * g;
            s_exp += u * (u + 2) * g;
        }
        total += term_weight(rc, flat, c) * field.phase(i_exp, s_exp);
    }
    return total;
}

Rational value_at_i(const RatFunc& f) {
    auto ev = [](const LaurentZ& p) {
        Rational v = 0;
        for (int e = p.low(); e <= p.high(); ++e) {
            if (sgn(p.coeff(e)) == 0) continue;
            const int m = ((e % 4) + 4) % 4;
            if (m % 2 != 0) throw PreconditionViolated("value at s = i is not real");
            v += Rational(p.coeff(e)) * (m == 0 ? 1 : -1);
        }
        return v;
    };
    Rational den = ev(f.den());
    if (sgn(den) == 0) throw DivisionByZero("denominator vanishes at s = i");
    return ev(f.num()) / den;
}

Complex value_at(const RatFunc& f, const Complex& s) {
    const long prec = s.precision();
    auto ev = [&](const LaurentZ& p) {
        Complex acc(0L, prec);
        for (int e = p.low(); e <= p.high(); ++e) {
            if (sgn(p.coeff(e)) == 0) continue;
            acc += pow(s, e) * Real(Rational(p.coeff(e)), prec);
        }
        return acc;
    };
    return ev(f.num()) / ev(f.den());
}

std::vector<std::string> check_suite_names() {
    return {"fusion", "recoupling", "tet_symmetry", "fundamental", "oracle", "reidemeister"};
}

namespace {

template <class F>
void for_admissible_tets(int max_color, int r, F&& f) {
    for (int a = 0; a <= max_color; ++a)
        for (int b = 0; b <= max_color; ++b)
            for (int e = 0; e <= max_color; ++e)
                for (int c = 0; c <= max_color; ++c)
                    for (int d = 0; d <= max_color; ++d)
                        for (int g = 0; g <= max_color; ++g)
                            if (admissible_triple(a, d, e, r) && admissible_triple(b, c, e, r) &&
                                admissible_triple(a, b, g, r) && admissible_triple(c, d, g, r))
                                f(a, b, e, c, d, g);
}

CheckResult tolerance_check(std::string suite, std::string name, long cases, double residual, double tol) {
    CheckResult r;
    r.suite = std::move(suite);
    r.name = std::move(name);
    r.cases = cases;
    r.residual = residual;
    r.passed = cases > 0 && residual < tol;
    r.detail = "tolerance " + Real::from_double(tol, 53).to_string(3);
    return r;
}

CheckResult exact_check(std::string suite, std::string name, long cases, long mismatches) {
    CheckResult r;
    r.suite = std::move(suite);
    r.name = std::move(name);
    r.cases = cases;
    r.passed = cases > 0 && mismatches == 0;
    r.detail = std::to_string(mismatches) + " mismatches";
    return r;
}

double rel_error(const Complex& x, const Complex& y) {
    Real scale = max(abs(y), Real(1L, y.precision()));
    return (abs(x - y) / scale).to_double();
}

std::vector<CheckResult> fusion_suite() {
    std::vector<CheckResult> out;
    for (const char* tv : {"0.9,0", "0,0.9", "1.1,0"}) {
        std::string tstr = tv;
        const auto comma = tstr.find(',');
        auto ctx = ScalarContext::generic(std::stod(tstr.substr(0, comma)), std::stod(tstr.substr(comma + 1)));
        Recoupling<ComplexField> rc{ComplexField(ctx)};
        long cases = 0;
        double worst = 0;
        for (int a = 0; a <= 6; ++a)
            for (int b = 0; b <= 6; ++b) {
                Complex sum(0L, ctx.precision_bits);
                for (int c = std::abs(a - b); c <= a + b; c += 2) sum += rc.delta(c);
                worst = std::max(worst, rel_error(sum, rc.delta(a) * rc.delta(b)));
                ++cases;
            }
        out.push_back(tolerance_check("fusion", "Delta_a Delta_b = sum Delta_c at t = " + tstr, cases, worst, 1e-25));
    }
    return out;
}

std::vector<CheckResult> recoupling_suite() {
    // sum_e sixj(a,b,e,c,d,f) Tet(a,b,e,c,d,f') = delta_{ff'} theta(a,b,f) theta(c,d,f) / Delta_f
    std::vector<CheckResult> out;
    for (auto ctx : {ScalarContext::generic(0.9, 0.0), ScalarContext::generic(0.54, 0.72), ScalarContext::root_of_unity(7)}) {
        Recoupling<ComplexField> rc{ComplexField(ctx)};
        const int r = ctx.mode == ScalarMode::RootOfUnity ? ctx.r : 0;
        long cases = 0;
        double worst = 0;
        for (int a = 0; a <= 4; ++a)
            for (int b = 0; b <= 4; ++b)
                for (int c = 0; c <= 4; ++c)
                    for (int d = 0; d <= 4; ++d) {
                        std::vector<int> fs, es;
                        for (int f = 0; f <= 8; ++f)
                            if (admissible_triple(a, b, f, r) && admissible_triple(c, d, f, r)) fs.push_back(f);
                        for (int e = 0; e <= 8; ++e)
                            if (admissible_triple(a, d, e, r) && admissible_triple(b, c, e, r)) es.push_back(e);
                        for (int f : fs)
                            for (int f2 : fs) {
                                Complex sum(0L, ctx.precision_bits);
                                for (int e : es) sum += rc.sixj(a, b, e, c, d, f) * rc.tet(a, b, e, c, d, f2);
                                Complex expect = f == f2 ? rc.theta(a, b, f) * rc.theta(c, d, f) / rc.delta(f)
                                                         : Complex(0L, ctx.precision_bits);
                                Complex scale = rc.theta(a, b, f) * rc.theta(c, d, f) / rc.delta(f);
                                Real s = max(abs(scale), Real(1L, ctx.precision_bits));
                                worst = std::max(worst, (abs(sum - expect) / s).to_double());
                                ++cases;
                            }
                    }
        out.push_back(tolerance_check("recoupling", "orthogonality at " + ctx.describe(), cases, worst, 1e-20));
    }
    return out;
}

std::vector<CheckResult> tet_symmetry_suite() {
    Recoupling<MinusOneField> rm{MinusOneField{}, false};
    Recoupling<ComplexField> rc{ComplexField(ScalarContext::generic(0.9, 0.0)), false};
    long cases = 0, bad = 0;
    double worst = 0;
    for_admissible_tets(4, 0, [&](int a, int b, int e, int c, int d, int f) {
        const Rational base = rm.tet_uncached(a, b, e, c, d, f);
        const Complex fbase = rc.tet_uncached(a, b, e, c, d, f);
        for (const auto& o : tet_orbit({a, b, e, c, d, f})) {
            if (rm.tet_uncached(o[0], o[1], o[2], o[3], o[4], o[5]) != base) ++bad;
            worst = std::max(worst, rel_error(rc.tet_uncached(o[0], o[1], o[2], o[3], o[4], o[5]), fbase));
            ++cases;
        }
    });
    return {exact_check("tet_symmetry", "24 symmetries at t = -1, labels <= 4", cases, bad),
            tolerance_check("tet_symmetry", "24 symmetries at t = 0.9, labels <= 4", cases, worst, 1e-25)};
}

std::vector<CheckResult> fundamental_suite() {
    std::vector<CheckResult> out;
    {
        Recoupling<MinusOneField> rm{MinusOneField{}};
        long cases = 0, bad = 0;
        for_admissible_tets(6, 0, [&](int a, int b, int e, int c, int d, int f) {
            Rational v = rm.tet(a, b, e, c, d, f);
            Rational rhs = rm.theta(a, d, e) * rm.theta(b, c, e) * rm.theta(a, b, f) * rm.theta(c, d, f) /
                           (rm.delta(e) * rm.delta(f));
            if (rhs < 0 || v * v > rhs) ++bad;
            ++cases;
        });
        out.push_back(exact_check("fundamental", "Tet^2 <= theta^4 / (Delta_e Delta_f) at t = -1, labels <= 6", cases, bad));
    }
    for (auto ctx : {ScalarContext::generic(0.9, 0.0, 64), ScalarContext::root_of_unity(7, 64)}) {
        Recoupling<ComplexField> rc{ComplexField(ctx)};
        const int r = ctx.mode == ScalarMode::RootOfUnity ? ctx.r : 0;
        long cases = 0;
        double worst = 0;  // largest |Tet|^2 / bound - 1, clipped at 0
        for_admissible_tets(6, r, [&](int a, int b, int e, int c, int d, int f) {
            double lhs = abs(rc.tet(a, b, e, c, d, f)).to_double();
            double rhs = (abs(rc.theta(a, d, e) * rc.theta(b, c, e) * rc.theta(a, b, f) * rc.theta(c, d, f)) /
                          abs(rc.delta(e) * rc.delta(f)))
                             .to_double();
            if (rhs > 0) worst = std::max(worst, lhs * lhs / rhs - 1);
            ++cases;
        });
        out.push_back(tolerance_check("fundamental", "fundamental estimate at " + ctx.describe(), cases, worst, 1e-12));
    }
    return out;
}

struct DiskSample {
    std::string name;
    OracleGraph graph;
};

std::vector<DiskSample> disk_samples() {
    std::vector<DiskSample> out;
    for (int n = 0; n <= 3; ++n) out.push_back({"unknot color " + std::to_string(n), unknot_graph(n)});
    out.push_back({"Hopf (1,1)", hopf_graph(1, 1)});
    out.push_back({"Hopf (1,2)", hopf_graph(1, 2)});
    out.push_back({"trefoil color 1", braid_closure({1, 1, 1}, 2, 1)});
    out.push_back({"mirror trefoil color 1", braid_closure({-1, -1, -1}, 2, 1)});
    out.push_back({"figure eight color 1", braid_closure({1, -2, 1, -2}, 3, 1)});
    out.push_back({"kinked unknot color 2", with_kink(braid_closure({1}, 2, 2), 0, true)});
    return out;
}

std::vector<CheckResult> oracle_suite() {
    std::vector<CheckResult> out;
    Recoupling<LaurentField> rl{LaurentField{}};
    {
        long cases = 0, bad = 0;
        for (int a = 0; a <= 4; ++a)
            for (int b = 0; b <= 4; ++b)
                for (int c = 0; c <= 4; ++c)
                    if (admissible_triple(a, b, c)) {
                        if (!(oracle_bracket(theta_graph(a, b, c)) == rl.theta(a, b, c))) ++bad;
                        ++cases;
                    }
        out.push_back(exact_check("oracle", "theta vs TL bracket, labels <= 4", cases, bad));
    }
    {
        long cases = 0, bad = 0;
        for_admissible_tets(3, 0, [&](int a, int b, int e, int c, int d, int f) {
            if (!(oracle_bracket(tet_graph(a, b, e, c, d, f)) == rl.tet(a, b, e, c, d, f))) ++bad;
            ++cases;
        });
        out.push_back(exact_check("oracle", "Tet vs TL bracket, labels <= 3", cases, bad));
    }
    {
        long cases = 0, bad = 0;
        const auto m1 = ScalarContext::minus_one();
        for (const auto& d : disk_samples()) {
            Shadow s = shadow_of(d.graph);
            RatFunc oracle = oracle_bracket(d.graph);
            if (!(bracket_state_sum(s) == oracle)) ++bad;
            EvalResult r = eval_boundary(s, m1);
            if (!r.exact || *r.exact != value_at_i(oracle)) ++bad;
            cases += 2;
        }
        out.push_back(exact_check("oracle", "disk state sums vs TL bracket (Laurent and t = -1)", cases, bad));
    }
    return out;
}

std::vector<CheckResult> reidemeister_suite(const EvalOptions& opt) {
    std::vector<CheckResult> out;
    const auto m1 = ScalarContext::minus_one();
    const auto g9 = ScalarContext::generic(0.9, 0.0);
    EvalOptions fine = opt;
    fine.epsilon = std::min(opt.epsilon, 1e-10);
    for (const auto& mp : reidemeister_pairs()) {
        EvalResult a = eval_closed(mp.before, m1, fine), b = eval_closed(mp.after, m1, fine);
        bool same = a.closed_form && b.closed_form ? *a.closed_form == *b.closed_form : false;
        CheckResult exact = exact_check("reidemeister", mp.name + " at t = -1", 1, same ? 0 : 1);
        if (a.closed_form && b.closed_form) exact.detail = a.closed_form->to_string() + " vs " + b.closed_form->to_string();
        out.push_back(exact);
        EvalResult x = eval_closed(mp.before, g9, fine), y = eval_closed(mp.after, g9, fine);
        out.push_back(tolerance_check("reidemeister", mp.name + " at t = 0.9", 1, abs(x.value - y.value).to_double(), 1e-8));
    }
    return out;
}

}  // namespace

std::vector<CheckResult> run_check_suite(const std::string& suite, const EvalOptions& opt) {
    if (suite == "fusion") return fusion_suite();
    if (suite == "recoupling") return recoupling_suite();
    if (suite == "tet_symmetry") return tet_symmetry_suite();
    if (suite == "fundamental") return fundamental_suite();
    if (suite == "oracle") return oracle_suite();
    if (suite == "reidemeister") return reidemeister_suite(opt);
    throw PreconditionViolated("unknown check suite '" + suite + "'");
}

}  // namespace shadowsum
