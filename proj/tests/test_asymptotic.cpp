#include <cmath>
#include <vector>

#include "doctest.h"
#include "shadowsum/asymptotic.hpp"
#include "shadowsum/charvar.hpp"
#include "shadowsum/checks.hpp"
#include "shadowsum/planar.hpp"
#include "shadowsum/samples.hpp"
#include "shadowsum/statesum.hpp"
#include "support.hpp"

using namespace shadowsum;
using shadowsum::test::distance;

namespace {

const long kPrec = kDefaultPrecisionBits;

Rational q(long n, long d = 1) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

PartialFractions pf_of(std::vector<Rational> num, LinearFactors den) { return partial_fractions(QPoly(std::move(num)), den); }

// Direct partial sum of N(U)/D(U) for u0 <= U < u0 + n, in floating point.
Real partial_sum(const QPoly& num, const LinearFactors& den, long u0, long n, bool alternating) {
    Real acc(0L, kPrec);
    for (long u = u0; u < u0 + n; ++u) {
        Rational v = num(Rational(u));
        for (const auto& [shift, m] : den)
            for (int i = 0; i < m; ++i) v /= Rational(u + shift);
        if (alternating && u % 2 != 0) v = -v;
        acc += Real(v, kPrec);
    }
    return acc;
}

}  // namespace

TEST_CASE("harmonic numbers") {
    CHECK(harmonic(0, 1) == 0);
    CHECK(harmonic(3, 1) == q(11, 6));
    CHECK(harmonic(2, 2) == q(5, 4));
    CHECK(alternating_harmonic(2, 1) == q(-1, 2));
    CHECK(alternating_harmonic(3, 2) == q(-1) + q(1, 4) - q(1, 9));
}

TEST_CASE("polynomial interpolation is exact") {
    QPoly p({q(3), q(-1, 2), q(0), q(7, 3)});
    std::vector<Rational> xs, ys;
    for (int i = 0; i < 4; ++i) {
        xs.push_back(q(2 * i + 1));
        ys.push_back(p(xs.back()));
    }
    CHECK(QPoly::interpolate(xs, ys) == p);
    CHECK(p.degree() == 3);
    QPoly shifted = p.shifted(q(5));
    for (int x = -3; x <= 3; ++x) CHECK(shifted(q(x)) == p(q(x + 5)));
    CHECK(QPoly::linear(q(2)) * QPoly::linear(q(-2)) == QPoly({q(-4), q(0), q(1)}));
}

TEST_CASE("partial fractions") {
    // 1 / ((U+1)(U+2)) = 1/(U+1) - 1/(U+2)
    PartialFractions pf = pf_of({q(1)}, {{1, 1}, {2, 1}});
    CHECK(pf.polynomial.is_zero());
    CHECK(pf.terms.at(1) == std::vector<Rational>{q(1)});
    CHECK(pf.terms.at(2) == std::vector<Rational>{q(-1)});
    // (U^3 + 1) / U^2 = U + U^-2
    PartialFractions p2 = pf_of({q(1), q(0), q(0), q(1)}, {{0, 2}});
    CHECK(p2.polynomial == QPoly({q(0), q(1)}));
    CHECK(p2.terms.at(0) == std::vector<Rational>{q(0), q(1)});
}

TEST_CASE("rational tails in closed form") {
    auto tail = [](std::vector<Rational> num, LinearFactors den, long u0, bool alt) {
        return sum_rational_tail(pf_of(std::move(num), den), u0, alt);
    };
    auto telescoping = tail({q(1)}, {{1, 1}, {2, 1}}, 1, false);
    REQUIRE(telescoping);
    CHECK(*telescoping == ZetaExpression::from_rational(q(1, 2)));

    auto z2 = tail({q(1)}, {{0, 2}}, 1, false);
    REQUIRE(z2);
    CHECK(z2->zeta.at(2) == 1);
    CHECK(sgn(z2->constant) == 0);

    auto log2 = tail({q(1)}, {{0, 1}}, 1, true);
    REQUIRE(log2);
    CHECK(log2->log2 == -1);

    auto alt2 = tail({q(1)}, {{0, 2}}, 1, true);
    REQUIRE(alt2);
    CHECK(distance(Complex(alt2->evaluate(kPrec)), -zeta(2, kPrec) / 2L) < 1e-30);

    // 1/(U^2 (U+1)) from U = 1 is zeta(2) - 1.
    auto mixed = tail({q(1)}, {{0, 2}, {1, 1}}, 1, false);
    REQUIRE(mixed);
    CHECK(mixed->constant == -1);
    CHECK(mixed->zeta.at(2) == 1);

    // Odd zeta values survive as symbols.
    auto z3 = tail({q(2)}, {{3, 3}}, 0, false);
    REQUIRE(z3);
    CHECK(z3->odd_zetas().at(3) == 2);
    CHECK(z3->constant == -2 * (q(1) + q(1, 8)));

    CHECK_FALSE(tail({q(1)}, {{0, 1}}, 1, false));
    CHECK_FALSE(tail({q(0), q(1)}, {{0, 1}}, 1, true));
}

TEST_CASE("closed-form tails agree with direct summation") {
    struct Case {
        std::vector<Rational> num;
        LinearFactors den;
        long u0;
        bool alt;
    };
    std::vector<Case> cases{{{q(3), q(-1)}, {{1, 2}, {4, 2}}, 2, false},
                            {{q(1), q(1), q(1)}, {{0, 3}, {1, 2}}, 1, true},
                            {{q(5)}, {{2, 1}, {3, 1}, {7, 2}}, 0, true},
                            {{q(1), q(2)}, {{1, 4}}, 3, false}};
    for (const auto& c : cases) {
        auto closed = sum_rational_tail(partial_fractions(QPoly(c.num), c.den), c.u0, c.alt);
        REQUIRE(closed);
        Real direct = partial_sum(QPoly(c.num), c.den, c.u0, 200000, c.alt);
        CHECK(abs(closed->evaluate(kPrec) - direct).to_double() < 1e-6);
    }
}

TEST_CASE("expression rendering") {
    ZetaExpression z;
    z.constant = q(-4);
    z.zeta[2] = q(2);
    z.zeta[3] = q(-1, 2);
    z.log2 = q(3);
    CHECK(z.to_string() == "-4 + 1/3*pi^2 - 1/2*zeta(3) + 3*log(2)");
    CHECK_FALSE(z.is_rational());
    CHECK(ZetaExpression::from_rational(q(7, 3)).to_string() == "7/3");
    CHECK(z - z == ZetaExpression{});
}

TEST_CASE("exact t = -1 evaluation of separating curves matches the Bernoulli forms") {
    for (auto [g1, g2] : {std::pair{1, 1}, {1, 2}, {2, 2}, {1, 3}, {2, 3}}) {
        CAPTURE(g1);
        CAPTURE(g2);
        std::string why;
        auto ex = exact_closed_minus_one(separating_curve_shadow({g1, g2}, 1), &why);
        REQUIRE(ex);
        PiExpression expect = closed_form({g1, g2});
        CHECK(ex->value.constant == expect.constant);
        CHECK(ex->value.pi_powers() == expect.coeffs);
        CHECK(ex->value.odd_zetas().empty());
        CHECK(sgn(ex->value.log2) == 0);
    }
}

TEST_CASE("planar diagrams in genus 2 scale the empty value by their bracket") {
    const auto m1 = ScalarContext::minus_one();
    for (const auto& g : {hopf_graph(1, 1), braid_closure({1, 1, 1}, 2, 1), braid_closure({1, -2, 1, -2}, 3, 1),
                          with_kink(hopf_graph(1, 2), 1, true)}) {
        Shadow s = shadow_of(g, 2);
        EvalResult r = eval_closed(s, m1);
        REQUIRE(r.closed_form);
        ZetaExpression expect;
        expect.zeta[2] = value_at_i(oracle_bracket(g));
        CHECK(*r.closed_form == expect);
    }
}

TEST_CASE("closed forms agree with extrapolated partial sums") {
    const auto m1 = ScalarContext::minus_one();
    for (const auto& s : {crossing_pair(1, 2, true), planar_beside_separating(braid_closure({1, 2, 1}, 3, 1), 1),
                          one_point_pair(2, 2, 2), separating_curve_shadow({1, 2}, 3)}) {
        EvalResult closed = eval_closed(s, m1);
        REQUIRE(closed.closed_form);
        std::string why;
        auto ex = exact_closed_minus_one(s, &why);
        REQUIRE(ex);
        CHECK(distance(Complex(ex->value.evaluate(kPrec)), closed.value) < 1e-30);
        // Shell sums of diagrams with vertices decay slowly; the error of the
        // partial sums goes like C/N, so a Richardson step must close the gap.
        ColoringEnumerator en(s);
        Complex partial(0L, kPrec);
        std::vector<double> err;
        for (int u = 0; u < 600; ++u) {
            for (const auto& c : en.shell(u)) partial += term_weight(s, c, m1);
            if (u == 299 || u == 599) err.push_back((partial.re - closed.value.re).to_double());
        }
        CHECK(std::abs(err[1]) < std::abs(err[0]));
        CHECK(std::abs(2 * err[1] - err[0]) < 1e-4);
    }
}
