#include "shadowsum/statesum.hpp"

#include <cmath>
#include <memory>

namespace shadowsum {

std::string to_string(EvalStatus s) {
    switch (s) {
        case EvalStatus::Exact: return "Exact";
        case EvalStatus::Truncated: return "Truncated";
        case EvalStatus::DivergenceDetected: return "DivergenceDetected";
        case EvalStatus::Inconclusive: return "Inconclusive";
    }
    return "?";
}

std::string to_string(Convergence c) {
    switch (c) {
        case Convergence::ConvergesCertified: return "ConvergesCertified";
        case Convergence::DivergenceDetected: return "DivergenceDetected";
        case Convergence::Inconclusive: return "Inconclusive";
    }
    return "?";
}

namespace {

// Term weights in the active scalar regime; exact rationals at t = -1.
class TermEvaluator {
public:
    explicit TermEvaluator(const ScalarContext& ctx) : ctx_(ctx) {
        if (ctx.mode == ScalarMode::ExactMinusOne)
            exact_ = std::make_unique<Recoupling<MinusOneField>>(MinusOneField{});
        else
            complex_ = std::make_unique<Recoupling<ComplexField>>(make_complex_field(ctx));
    }

    bool exact_mode() const { return exact_ != nullptr; }
    long prec() const { return ctx_.precision_bits; }

    Rational exact(const Shadow& s, const Coloring& c) const { return term_weight(*exact_, s, c); }

    Complex operator()(const Shadow& s, const Coloring& c) const {
        if (exact_) return Complex(Real(exact(s, c), prec()));
        return term_weight(*complex_, s, c);
    }

    Real abs_delta(int n) const {
        if (exact_) return Real(static_cast<long>(n) + 1, prec());
        return abs(complex_->delta(n));
    }

private:
    ScalarContext ctx_;
    std::unique_ptr<Recoupling<MinusOneField>> exact_;
    std::unique_ptr<Recoupling<ComplexField>> complex_;
};

struct ShellSum {
    Complex value;
    Real magnitude;  // sum of |term|
    Rational exact = 0;
};

ShellSum sum_shell(const Shadow& s, const std::vector<Coloring>& shell, const TermEvaluator& ev, int workers) {
    ShellSum out{Complex(0L, ev.prec()), Real(0L, ev.prec())};
    if (ev.exact_mode()) {
        auto terms = parallel_map<Rational>(shell.size(), workers,
                                            [&](std::size_t i) -> Rational { return ev.exact(s, shell[i]); });
        for (const auto& t : terms) {
            out.exact += t;
            out.magnitude += Real(Rational(abs(t)), ev.prec());
        }
        out.value = Complex(Real(out.exact, ev.prec()));
    } else {
        auto terms = parallel_map<Complex>(shell.size(), workers, [&](std::size_t i) { return ev(s, shell[i]); });
        for (const auto& t : terms) {
            out.value += t;
            out.magnitude += abs(t);
        }
    }
    return out;
}

void require_generic_off_circle(const ScalarContext& ctx) {
    if (ctx.mode != ScalarMode::GenericComplex) return;
    Real d = abs(ctx.abs_t() - Real(1L, ctx.precision_bits));
    if (d < Real::from_double(1e-12, ctx.precision_bits))
        throw PreconditionViolated("|t| = 1 away from roots of unity is not supported");
}

void flag_odd_gleams(const Shadow& s, EvalResult& r) {
    if (s.has_odd_twice_gleam())
        r.diagnostics.push_back("odd twice-gleam: value depends on the chosen square root of t");
}

// Certified bound on sum_{U > n} sum_{c in shell U} |term(c)| for closed shadows,
// from the fundamental estimate for Tet and explicit bounds on |Delta_u|.
struct TailModel {
    bool certified = false;
    std::string reason;
    std::function<std::optional<Real>(int)> bound;
};

TailModel tail_model(const Shadow& s, const ScalarContext& ctx, const ColoringEnumerator& en, const TermEvaluator& ev) {
    TailModel m;
    const long prec = ctx.precision_bits;
    const int b = breadth(s);
    const int start = std::max(en.stable_from(), b);
    const long patterns = static_cast<long>(en.offsets().size());
    long x_pos = 0, x_neg = 0;
    for (const auto& f : s.faces) (f.euler_char > 0 ? x_pos : x_neg) += f.euler_char;
    Real k_vertex(1L, prec);
    for (const auto& v : s.vertices) k_vertex /= sqrt(ev.abs_delta(v.over) * ev.abs_delta(v.under));

    if (ctx.mode == ScalarMode::ExactMinusOne) {
        const long e = -(x_pos + x_neg);
        if (e <= 1) {
            m.reason = "face exponent " + std::to_string(e) + " too small for a p-series bound";
            return m;
        }
        m.certified = true;
        m.reason = "p-series bound with exponent " + std::to_string(e);
        m.bound = [=](int n) -> std::optional<Real> {
            if (n < start || n + 1 - b < 1) return std::nullopt;
            Real c = Real(static_cast<long>(n) + 2, prec) / Real(static_cast<long>(n) + 2 - b, prec);
            Real tail = pow(Real(static_cast<long>(n) + 1 - b, prec), 1 - e) / (e - 1);
            return pow(c, x_pos) * tail * k_vertex * patterns;
        };
        return m;
    }

    // |t| = rho != 1; work with rho' < 1 and flip gleams when rho > 1.
    Real rho = ctx.abs_t();
    const bool flip = rho > Real(1L, prec);
    if (flip) rho = Real(1L, prec) / rho;
    Real rho4 = pow(rho, 4);
    Real one(1L, prec);
    Real big_h = Real(2L, prec) / (one - rho4);
    Real big_l = (one - rho4) / (one + rho4);
    // Q(U) = a2 U^2 + a1 U + a0, in units where a gleam g contributes g u(u+2).
    double a2 = 0, a1 = 0, a0 = 0;
    for (const auto& f : s.faces) {
        double g = (flip ? -f.twice_gleam : f.twice_gleam) / 2.0;
        if (g > 0) {
            a2 += g;
            a1 += g * (2 - 2.0 * b);
            a0 += g * (static_cast<double>(b) * b - 2.0 * b);
        } else if (g < 0) {
            a2 += g;
            a1 += 2 * g;
        }
        const double x = f.euler_char;
        if (x >= 0)
            a1 += -2 * x;
        else {
            a1 += 2 * -x;
            a0 += -2 * -x * b;
        }
    }
    if (!(a2 > 0 || (a2 == 0 && a1 > 0))) {
        m.reason = "shell exponent does not grow";
        return m;
    }
    Real k_total = pow(big_h, x_pos) * pow(big_l, x_neg) * k_vertex * patterns;
    Real log_rho = log(rho);
    m.certified = true;
    m.reason = "geometric shell bound";
    m.bound = [=](int n) -> std::optional<Real> {
        if (n < start) return std::nullopt;
        const double mm = n + 1.0;
        const double q = a2 * mm * mm + a1 * mm + a0;
        const double d = a2 * (2 * mm + 1) + a1;
        if (d <= 0) return std::nullopt;
        Real head = exp(log_rho * Real::from_double(q, prec));
        Real ratio = exp(log_rho * Real::from_double(d, prec));
        return k_total * head / (Real(1L, prec) - ratio);
    };
    return m;
}

// Sums shells of a closed shadow until the certified or heuristic tail is below epsilon.
EvalResult sum_series(const Shadow& s, const ScalarContext& ctx, const EvalOptions& opt) {
    TermEvaluator ev(ctx);
    ColoringEnumerator en(s, 0);
    EvalResult res;
    res.value = Complex(0L, ctx.precision_bits);
    flag_odd_gleams(s, res);
    if (!en.has_stable_pattern()) throw PreconditionViolated("closed shadow without a stable shell pattern");
    const Real eps = Real::from_double(opt.epsilon, ctx.precision_bits);
    TailModel model = tail_model(s, ctx, en, ev);
    if (!model.certified) res.diagnostics.push_back("no certified tail: " + model.reason);

    Rational exact_sum = 0;
    std::vector<Real> mags;
    for (int u = 0; u < opt.max_shells; ++u) {
        auto shell = en.shell(u);
        ShellSum sh = sum_shell(s, shell, ev, opt.workers);
        res.value += sh.value;
        exact_sum += sh.exact;
        mags.push_back(sh.magnitude);
        res.shells_summed = u + 1;
        if (u >= en.stable_from() && en.offsets().empty()) {
            res.status = EvalStatus::Exact;
            res.tail_bound = Real(0L, ctx.precision_bits);
            if (ev.exact_mode()) res.exact = exact_sum;
            res.diagnostics.push_back("finite coloring set");
            return res;
        }
        if (model.certified) {
            auto b = model.bound(u);
            if (b && *b < eps) {
                res.status = EvalStatus::Truncated;
                res.tail_bound = *b;
                return res;
            }
        } else if (u >= en.stable_from() + 2) {
            const std::size_t n = mags.size();
            const Real small = eps / 10L;
            if (mags[n - 1] < small && mags[n - 2] < small && mags[n - 3] < small && mags[n - 1] <= mags[n - 2] &&
                mags[n - 2] <= mags[n - 3]) {
                res.status = EvalStatus::Truncated;
                res.tail_bound = mags[n - 1] + mags[n - 2] + mags[n - 3];
                res.diagnostics.push_back("heuristic tail estimate");
                return res;
            }
        }
    }
    res.status = EvalStatus::Inconclusive;
    res.diagnostics.push_back("max_shells reached before the tail fell below epsilon");
    return res;
}

EvalResult finite_sum(const Shadow& s, const ScalarContext& ctx, const EvalOptions& opt, int r) {
    TermEvaluator ev(ctx);
    ColoringEnumerator en(s, r);
    if (en.max_shell() < 0) throw PreconditionViolated("coloring set is not finite");
    EvalResult res;
    res.value = Complex(0L, ctx.precision_bits);
    flag_odd_gleams(s, res);
    Rational exact_sum = 0;
    for (int u = 0; u <= en.max_shell(); ++u) {
        ShellSum sh = sum_shell(s, en.shell(u), ev, opt.workers);
        res.value += sh.value;
        exact_sum += sh.exact;
    }
    res.shells_summed = en.max_shell() + 1;
    res.status = EvalStatus::Exact;
    res.tail_bound = Real(0L, ctx.precision_bits);
    if (ev.exact_mode()) res.exact = exact_sum;
    return res;
}

EvalResult closed_series(const Shadow& s, const ScalarContext& ctx, const EvalOptions& opt) {
    if (ctx.mode == ScalarMode::ExactMinusOne) {
        if (!z2_class(s).is_zero()) {
            EvalResult res;
            res.value = Complex(0L, ctx.precision_bits);
            res.exact = Rational(0);
            res.closed_form = ZetaExpression{};
            res.tail_bound = Real(0L, ctx.precision_bits);
            res.diagnostics.push_back("nonzero Z/2 homology class: no admissible colorings");
            return res;
        }
        std::string why;
        if (auto ex = exact_closed_minus_one(s, &why)) {
            EvalResult res;
            res.value = Complex(ex->value.evaluate(ctx.precision_bits));
            if (ex->value.is_rational()) res.exact = ex->value.constant;
            res.closed_form = ex->value;
            res.tail_bound = Real(0L, ctx.precision_bits);
            res.shells_summed = ex->shells_summed;
            res.status = EvalStatus::Exact;
            res.diagnostics.push_back("closed-form tail");
            return res;
        }
        auto res = sum_series(s, ctx, opt);
        res.diagnostics.push_back("closed form unavailable: " + why);
        return res;
    }
    return sum_series(s, ctx, opt);
}

}  // namespace

Complex term_weight(const Shadow& s, const Coloring& c, const ScalarContext& ctx) { return TermEvaluator(ctx)(s, c); }

EvalResult eval_closed(const Shadow& s, const ScalarContext& ctx, const EvalOptions& opt) {
    if (!s.closed()) throw PreconditionViolated("eval_closed needs a closed surface");
    if (s.surface.genus < 2) throw PreconditionViolated("eval_closed needs genus >= 2; use cesaro_eval for the torus");
    if (ctx.mode == ScalarMode::RootOfUnity) throw PreconditionViolated("use eval_root_of_unity at roots of unity");
    require_generic_off_circle(ctx);
    return closed_series(s, ctx, opt);
}

EvalResult eval_boundary(const Shadow& s, const ScalarContext& ctx, const EvalOptions& opt) {
    if (!s.has_pinned_faces()) throw PreconditionViolated("eval_boundary needs a boundary face");
    if (ctx.mode == ScalarMode::RootOfUnity) return finite_sum(s, ctx, opt, ctx.r);
    return finite_sum(s, ctx, opt, 0);
}

EvalResult eval_root_of_unity(const Shadow& s, const ScalarContext& ctx, const EvalOptions& opt) {
    if (ctx.mode != ScalarMode::RootOfUnity) throw PreconditionViolated("eval_root_of_unity needs a root of unity");
    return finite_sum(s, ctx, opt, ctx.r);
}

Classification classify_convergence(const Shadow& s, const ScalarContext& ctx, const EvalOptions& opt) {
    Classification c;
    if (ctx.mode == ScalarMode::RootOfUnity || !s.closed()) {
        c.verdict = Convergence::ConvergesCertified;
        c.reason = "finite sum";
        return c;
    }
    if (ctx.mode == ScalarMode::ExactMinusOne) {
        if (s.surface.genus >= 2) {
            c.verdict = Convergence::ConvergesCertified;
            c.reason = "t = -1 on genus >= 2";
        } else {
            c.reason = "t = -1 needs genus >= 2";
        }
        return c;
    }
    require_generic_off_circle(ctx);
    const long tg = s.total_twice_gleam();
    const bool inside = ctx.abs_t() < Real(1L, ctx.precision_bits);
    if ((tg > 0 && inside) || (tg < 0 && !inside)) {
        c.verdict = Convergence::ConvergesCertified;
        c.reason = tg > 0 ? "positive total gleam with |t| < 1" : "negative total gleam with |t| > 1";
        return c;
    }
    // Probe shell magnitudes; a window of 8 shells whose magnitudes stop
    // decaying (each ratio >= 0.99) signals divergence.
    TermEvaluator ev(ctx);
    ColoringEnumerator en(s, 0);
    const int window = 8;
    const int last = std::min(opt.max_shells, std::max(en.stable_from(), 0) + 40);
    for (int u = 0; u <= last; ++u) c.shell_magnitudes.push_back(sum_shell(s, en.shell(u), ev, opt.workers).magnitude.to_double());
    const auto& m = c.shell_magnitudes;
    const int n = static_cast<int>(m.size());
    if (n > window) {
        bool stalled = true;
        for (int i = n - window; i < n; ++i)
            if (!(m[i - 1] > 0) || m[i] < 0.99 * m[i - 1]) stalled = false;
        if (stalled) {
            c.verdict = Convergence::DivergenceDetected;
            c.reason = "shell magnitudes stopped decaying";
            return c;
        }
    }
    c.reason = "no certificate; shells decay";
    return c;
}

EvalResult eval_shadow(const Shadow& s, const ScalarContext& ctx, const EvalOptions& opt) {
    if (!s.closed()) return eval_boundary(s, ctx, opt);
    if (ctx.mode == ScalarMode::RootOfUnity) return eval_root_of_unity(s, ctx, opt);
    Classification c = classify_convergence(s, ctx, opt);
    if (c.verdict == Convergence::DivergenceDetected) throw Divergent("series diverges: " + c.reason);
    if (ctx.mode == ScalarMode::ExactMinusOne && s.surface.genus < 2)
        throw PreconditionViolated("t = -1 needs genus >= 2");
    EvalResult res = closed_series(s, ctx, opt);
    res.diagnostics.insert(res.diagnostics.begin(), "classification: " + to_string(c.verdict) + " (" + c.reason + ")");
    return res;
}

Shadow punctured(const Shadow& s, int face, int loop_color) {
    if (!s.closed()) throw PreconditionViolated("punctured needs a closed surface");
    if (face < 0 || face >= static_cast<int>(s.faces.size())) throw PreconditionViolated("punctured: no such face");
    Shadow out = s;
    out.surface.boundary += 1;
    out.faces[face].euler_char -= 1;
    Face collar;
    collar.id = "collar";
    collar.euler_char = 0;
    collar.boundary = true;
    out.faces.push_back(collar);
    Edge loop;
    loop.id = "boundary_loop";
    loop.color = loop_color;
    loop.faces = {face, static_cast<int>(out.faces.size()) - 1};
    loop.circle = true;
    out.edges.push_back(loop);
    validate(out);
    return out;
}

std::vector<Complex> cesaro_means(const Shadow& s, const ScalarContext& ctx, int n_max, const EvalOptions& opt) {
    if (!s.closed() || s.surface.genus != 1) throw PreconditionViolated("cesaro_eval needs a closed torus");
    if (ctx.mode == ScalarMode::RootOfUnity) throw PreconditionViolated("cesaro_eval: use eval_root_of_unity");
    require_generic_off_circle(ctx);
    if (n_max < 0) throw PreconditionViolated("n_max must be >= 0");
    const long prec = ctx.precision_bits;
    std::vector<Complex> means;
    Complex acc(0L, prec);
    Rational exact_acc = 0;
    Recoupling<MinusOneField> rc_exact(MinusOneField{});
    std::unique_ptr<Recoupling<ComplexField>> rc_complex;
    if (ctx.mode != ScalarMode::ExactMinusOne) rc_complex = std::make_unique<Recoupling<ComplexField>>(make_complex_field(ctx));
    for (int u = 0; u <= n_max; ++u) {
        EvalResult r = eval_boundary(punctured(s, 0, u), ctx, opt);
        if (ctx.mode == ScalarMode::ExactMinusOne) {
            exact_acc += rc_exact.delta(u) * *r.exact;
            means.emplace_back(Real(Rational(exact_acc / (u + 1)), prec));
        } else {
            acc += rc_complex->delta(u) * r.value;
            Real inv = Real(1L, prec) / static_cast<long>(u + 1);
            means.push_back(acc * inv);
        }
    }
    return means;
}

EvalResult cesaro_eval(const Shadow& s, const ScalarContext& ctx, int n_max, const EvalOptions& opt) {
    auto means = cesaro_means(s, ctx, n_max, opt);
    EvalResult res;
    res.value = means.back();
    res.shells_summed = n_max + 1;
    res.status = EvalStatus::Truncated;
    flag_odd_gleams(s, res);
    const int decade = n_max / 10;
    Real diff = abs(means.back() - means[decade]);
    res.tail_bound = diff;
    res.diagnostics.push_back("Cesaro mean over u <= " + std::to_string(n_max) + "; change since u <= " +
                              std::to_string(decade) + " is " + diff.to_string(6));
    return res;
}

FoldReport symmetry_fold(const Shadow& s, const ScalarContext& ctx, int framing, const EvalOptions& opt) {
    if (ctx.mode != ScalarMode::RootOfUnity) throw PreconditionViolated("symmetry_fold needs a root of unity");
    if (!s.closed()) throw PreconditionViolated("symmetry_fold needs a closed surface");
    const int r = ctx.r;
    const long prec = ctx.precision_bits;
    Recoupling<ComplexField> rc(make_complex_field(ctx));
    FoldReport rep;
    rep.full_sum = Complex(0L, prec);
    for (int u = 0; u <= r - 2; ++u) {
        EvalResult part = eval_root_of_unity(punctured(s, 0, u), ctx, opt);
        Complex term = rc.delta(u) * part.value;
        if (framing != 0) term = term * rc.half_twist_power(u, 2L * framing);
        rep.terms.push_back(term);
        rep.full_sum += term;
    }
    rep.symmetric = true;
    for (int u = 0; u <= r - 2; ++u) {
        double d = abs(rep.terms[u] - rep.terms[r - 2 - u]).to_double();
        rep.max_discrepancy = std::max(rep.max_discrepancy, d);
        if (!(d < 1e-10)) rep.symmetric = false;
    }
    EvalResult& res = rep.result;
    res.shells_summed = r - 1;
    res.status = EvalStatus::Exact;
    res.tail_bound = Real(0L, prec);
    if (rep.symmetric) {
        Complex folded(0L, prec);
        for (int u = 0; u <= (r - 3) / 2; ++u) folded += rep.terms[u];
        res.value = folded * 2L;
        res.diagnostics.push_back("folded u <-> r-2-u");
    } else {
        res.value = rep.full_sum;
        res.diagnostics.push_back("terms not symmetric (max discrepancy " + std::to_string(rep.max_discrepancy) +
                                  "); full sum returned");
    }
    return rep;
}

LimitScan limit_scan(const Shadow& s, const std::vector<int>& r_list, const EvalOptions& opt, long precision_bits) {
    ScalarContext m1 = ScalarContext::minus_one();
    m1.precision_bits = precision_bits;
    LimitScan scan;
    scan.reference = eval_closed(s, m1, opt).value * 2L;
    for (int r : r_list) {
        LimitPoint p;
        p.r = r;
        p.value = eval_root_of_unity(s, ScalarContext::root_of_unity(r, precision_bits), opt).value;
        p.difference = abs(p.value - scan.reference).to_double();
        scan.points.push_back(std::move(p));
    }
    return scan;
}

EvalResult evaluate(const Shadow& s, const ScalarContext& ctx, const EvalOptions& opt) {
    if (ctx.mode == ScalarMode::RootOfUnity) return eval_root_of_unity(s, ctx, opt);
    if (!s.closed()) return eval_boundary(s, ctx, opt);
    if (s.kind == DiagramKind::PureShadow) {
        if (s.surface.genus == 1 && ctx.mode == ScalarMode::ExactMinusOne) return cesaro_eval(s, ctx, opt.cesaro_terms, opt);
        return eval_shadow(s, ctx, opt);
    }
    if (s.surface.genus >= 2) return eval_closed(s, ctx, opt);
    if (s.surface.genus == 1) return cesaro_eval(s, ctx, opt.cesaro_terms, opt);
    throw PreconditionViolated("closed genus-0 link diagrams are not evaluated; draw them in the disk");
}

}  // namespace shadowsum
