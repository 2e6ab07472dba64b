#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "separating_table.hpp"
#include "shadowsum/charvar.hpp"
#include "shadowsum/checks.hpp"
#include "shadowsum/samples.hpp"
#include "shadowsum/statesum.hpp"

using namespace shadowsum;

namespace {

const long kPrec = kDefaultPrecisionBits;

struct Outcome {
    bool passed = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

double dist(const Complex& a, const Complex& b) { return abs(a - b).to_double(); }

PiExpression published_expression(const test::PublishedRow& row) {
    PiExpression e;
    e.constant = Rational(row.constant);
    e.constant.canonicalize();
    for (const auto& [k, c] : row.pi) {
        e.coeffs[k] = Rational(c);
        e.coeffs[k].canonicalize();
    }
    return e;
}

Outcome table_reproduction() {
    auto t0 = std::chrono::steady_clock::now();
    const auto& published = test::published_table();
    auto rows = reproduce_table(1e-10);
    bool ok = rows.size() == published.size();
    double worst = 0;
    for (std::size_t i = 0; ok && i < rows.size(); ++i) {
        ok = ok && rows[i].g1 == published[i].g1 && rows[i].g2 == published[i].g2;
        ok = ok && rows[i].expression == published_expression(published[i]);
        worst = std::max(worst, abs(rows[i].numeric - rows[i].series).to_double());
    }
    const double secs = seconds_since(t0);
    ok = ok && worst < 1e-9 && secs < 5;
    return {ok, std::to_string(rows.size()) + " rows, max |closed - series| " + fmt("%.1e", worst) + ", " +
                    fmt("%.2f", secs) + " s"};
}

Outcome cross_engine() {
    const auto m1 = ScalarContext::minus_one();
    bool ok = true;
    double worst = 0, slowest = 0;
    for (auto [a, b] : {std::pair{1, 1}, {1, 2}, {2, 2}, {1, 3}}) {
        auto t0 = std::chrono::steady_clock::now();
        EvalResult r = eval_closed(separating_curve_shadow({a, b}, 1), m1);
        slowest = std::max(slowest, seconds_since(t0));
        double d = abs(r.value.re - closed_form({a, b}).evaluate(kPrec)).to_double() + abs(r.value.im).to_double();
        worst = std::max(worst, d);
        ok = ok && d < 1e-8;
    }
    ok = ok && slowest < 30;
    return {ok, "max deviation " + fmt("%.1e", worst) + ", slowest case " + fmt("%.2f", slowest) + " s"};
}

Outcome normalization() {
    const auto m1 = ScalarContext::minus_one();
    EvalResult g2 = eval_closed(empty_surface(2), m1);
    EvalResult g3 = eval_closed(empty_surface(3), m1);
    const double d2 = dist(g2.value, Complex(zeta(2, kPrec)));
    const double d3 = dist(g3.value, Complex(pow(pi(kPrec), 4) / 90L));
    auto tail_ok = [](const EvalResult& r) { return r.tail_bound && r.tail_bound->to_double() <= 1e-8; };
    bool ok = d2 < 1e-8 && d3 < 1e-8 && tail_ok(g2) && tail_ok(g3);
    return {ok, "genus 2 off by " + fmt("%.1e", d2) + ", genus 3 off by " + fmt("%.1e", d3)};
}

Outcome suite(const std::string& name) {
    bool ok = true;
    long cases = 0;
    std::string failed;
    for (const CheckResult& r : run_check_suite(name)) {
        ok = ok && r.passed;
        cases += r.cases;
        if (!r.passed) failed += " [" + r.name + ": " + r.detail + "]";
    }
    return {ok, std::to_string(cases) + " cases" + (failed.empty() ? "" : "; failed" + failed)};
}

Outcome annulus() {
    Shadow s = annulus_cores(4, 1);
    EvalResult a = eval_boundary(s, ScalarContext::generic(0.9, 0));
    EvalResult b = eval_root_of_unity(s, ScalarContext::root_of_unity(3));
    const double da = dist(a.value, Complex(2L, kPrec)), db = dist(b.value, Complex(1L, kPrec));
    bool ok = da < 1e-10 && db < 1e-10 && a.status == EvalStatus::Exact && b.status == EvalStatus::Exact;
    return {ok, "t = 0.9 gives " + a.value.re.to_string(12) + " (" + to_string(a.status) + "), r = 3 gives " +
                    b.value.re.to_string(12) + " (" + to_string(b.status) + ")"};
}

Outcome symmetry() {
    bool ok = true;
    double term_gap = 0, fold_gap = 0;
    for (int r : {5, 7})
        for (const auto& s : {empty_surface(2), separating_curve_shadow({1, 1}, 1)}) {
            FoldReport rep = symmetry_fold(s, ScalarContext::root_of_unity(r));
            term_gap = std::max(term_gap, rep.max_discrepancy);
            fold_gap = std::max(fold_gap, dist(rep.result.value, rep.full_sum));
            ok = ok && rep.symmetric;
        }
    ok = ok && term_gap < 1e-10 && fold_gap < 1e-12;
    return {ok, "max term gap " + fmt("%.1e", term_gap) + ", max fold gap " + fmt("%.1e", fold_gap)};
}

Outcome limit() {
    bool ok = true;
    std::string detail;
    for (const auto& [label, s] : {std::pair{"empty", empty_surface(2)}, {"separating", separating_curve_shadow({1, 1}, 1)}}) {
        LimitScan scan = limit_scan(s, {11, 21, 31, 41, 51});
        for (std::size_t i = 1; i < scan.points.size(); ++i)
            ok = ok && scan.points[i].difference < scan.points[i - 1].difference;
        ok = ok && scan.points.back().difference < 0.02;
        detail += std::string(detail.empty() ? "" : ", ") + label + " at r = 51: " + fmt("%.4f", scan.points.back().difference);
    }
    return {ok, detail};
}

Complex shells_between(const Shadow& s, const ScalarContext& ctx, int from, int to) {
    ColoringEnumerator en(s);
    Complex acc(0L, ctx.precision_bits);
    for (int u = from; u < to; ++u)
        for (const auto& c : en.shell(u)) acc += term_weight(s, c, ctx);
    return acc;
}

Shadow gleamed_separating(int tg1, int tg2) {
    Shadow s = separating_curve_shadow({1, 1}, 1);
    s.kind = DiagramKind::PureShadow;
    s.faces[0].twice_gleam = tg1;
    s.faces[1].twice_gleam = tg2;
    validate(s);
    return s;
}

Outcome classifier() {
    const auto t09 = ScalarContext::generic(0.9, 0);
    Shadow positive = gleamed_separating(2, 0);
    Classification c = classify_convergence(positive, t09);
    EvalResult r = eval_shadow(positive, t09);
    bool ok = c.verdict == Convergence::ConvergesCertified && r.tail_bound && r.tail_bound->is_finite();
    double extra = 0;
    if (ok) {
        extra = abs(shells_between(positive, t09, r.shells_summed, r.shells_summed + 10)).to_double();
        ok = extra <= r.tail_bound->to_double();
    }
    Shadow bad = gleamed_separating(8, -8);
    std::string verdicts;
    for (double t : {0.9, 1.1}) {
        Convergence v = classify_convergence(bad, ScalarContext::generic(t, 0)).verdict;
        ok = ok && v == Convergence::DivergenceDetected;
        verdicts += (verdicts.empty() ? "" : ", ") + to_string(v);
    }
    return {ok, "positive gleam " + to_string(c.verdict) + ", 10 extra shells " + fmt("%.1e", extra) + " <= bound " +
                    (r.tail_bound ? r.tail_bound->to_string(3) : std::string("none")) + "; gleam (4,-4): " + verdicts};
}

Outcome vanishing() {
    const auto m1 = ScalarContext::minus_one();
    auto samples = nonseparating_samples();
    bool ok = samples.size() >= 10;
    int genus2 = 0, genus3 = 0;
    for (const auto& s : samples) {
        ok = ok && !z2_class(s).is_zero();
        ok = ok && enumerate_colorings(s, 12).empty();
        EvalResult r = eval_closed(s, m1);
        ok = ok && r.value.is_zero() && r.status == EvalStatus::Exact;
        (s.surface.genus == 2 ? genus2 : genus3) += 1;
    }
    return {ok, std::to_string(samples.size()) + " diagrams (" + std::to_string(genus2) + " on genus 2, " +
                    std::to_string(genus3) + " on genus 3), all exactly 0"};
}

Outcome cesaro() {
    auto means = cesaro_means(empty_surface(1), ScalarContext::minus_one(), 1000);
    double worst = 0;
    for (const auto& m : means) worst = std::max(worst, dist(m, Complex(1L, kPrec)));
    bool ok = means.size() >= 1000 && worst < 1e-12;
    return {ok, std::to_string(means.size()) + " means, max |mean - 1| " + fmt("%.1e", worst)};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"table reproduction", table_reproduction},
        {"cross-engine agreement", cross_engine},
        {"normalization", normalization},
        {"oracle equivalence", [] { return suite("oracle"); }},
        {"annulus discontinuity", annulus},
        {"symmetry principle", symmetry},
        {"limit at roots of unity", limit},
        {"convergence classifier", classifier},
        {"vanishing off the zero class", vanishing},
        {"invariance under moves", [] { return suite("reidemeister"); }},
        {"torus Cesaro means", cesaro},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        if (!o.passed) ++failures;
        std::printf("%s %2zu %s: %s\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
