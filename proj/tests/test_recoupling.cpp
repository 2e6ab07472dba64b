#include <random>
#include <thread>
#include <vector>

#include "doctest.h"
#include "shadowsum/fields.hpp"
#include "shadowsum/recoupling.hpp"

using namespace shadowsum;

namespace {

Complex cx(const char* re, const char* im, long prec = 128) { return Complex(Real(re, prec), Real(im, prec)); }

Real tol(const char* v) { return Real(v, 128); }

// [n] straight from the definition (t^{2n} - t^{-2n}) / (t^2 - t^{-2}).
Complex direct_qint(const Complex& t, long n) {
    Complex a = pow(t, 2 * n), b = pow(t, -2 * n);
    return (a - b) / (pow(t, 2) - pow(t, -2));
}

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

}  // namespace

TEST_CASE("quantum integers at t = -1 are the integers") {
    Recoupling<MinusOneField> rc{MinusOneField{}};
    for (int n = 0; n <= 12; ++n) CHECK(rc.quantum_int(n) == n);
    CHECK(rc.quantum_factorial(5) == 120);
    for (int u = 0; u <= 8; ++u) CHECK(rc.delta(u) == Rational((u % 2 == 0 ? 1 : -1) * (u + 1)));
}

TEST_CASE("quantum integers at generic t") {
    Complex t = cx("0.9", "0.0");
    ComplexField f(ScalarContext::generic(t));
    Recoupling<ComplexField> rc{f};
    for (int n = 0; n <= 9; ++n) CHECK(abs(rc.quantum_int(n) - direct_qint(t, n)) < tol("1e-30"));
    CHECK(abs(rc.quantum_factorial(3) - direct_qint(t, 2) * direct_qint(t, 3)) < tol("1e-30"));
    // Delta_1 = -t^2 - t^-2
    CHECK(abs(rc.delta(1) + pow(t, 2) + pow(t, -2)) < tol("1e-30"));
    CHECK(abs(rc.delta(0) - Complex(1L, 128)) < tol("1e-30"));

    Complex z = cx("0.63", "0.63");
    Recoupling<ComplexField> rz{ComplexField(ScalarContext::generic(z))};
    for (int n = 0; n <= 9; ++n) CHECK(abs(rz.quantum_int(n) - direct_qint(z, n)) < tol("1e-28"));
}

TEST_CASE("quantum integers at roots of unity") {
    for (int r : {3, 5, 7, 13}) {
        ComplexField f(ScalarContext::root_of_unity(r));
        Complex t = f.context().t;
        for (int n = 1; n <= 2 * r; ++n) {
            CAPTURE(r);
            CAPTURE(n);
            if (n % r == 0) {
                CHECK(f.quantum_int(n).is_zero());
            } else {
                CHECK(abs(f.quantum_int(n) - direct_qint(t, n)) < tol("1e-30"));
            }
        }
        Real two_over_pi = Real(2L, 128) / pi(128);
        for (int n = 0; n <= r; ++n) {
            Real q = f.quantum_int(n).re;
            CHECK(q >= quantum_int_lower_bound(n, r, 128) - tol("1e-30"));
            if (2 * n <= r) CHECK(q >= two_over_pi * static_cast<long>(n) - tol("1e-30"));
        }
    }
    CHECK(admissible_triple(3, 2, 1, 5));
    CHECK_FALSE(admissible_triple(3, 3, 4, 5));  // 3+3+4 > 2r-4
    CHECK_FALSE(admissible_triple(4, 2, 2, 5));  // 4 > r-2
}

TEST_CASE("theta examples") {
    Recoupling<LaurentField> rl{LaurentField{}};
    for (int a = 0; a <= 6; ++a) CHECK(rl.theta(a, a, 0) == rl.delta(a));
    CHECK(rl.theta(1, 1, 2) == RatFunc(quantum_integer_poly(3)));
    CHECK(rl.theta(1, 1, 0) == RatFunc(LaurentZ::monomial(Integer(-1), 4) + LaurentZ::monomial(Integer(-1), -4)));
    CHECK_THROWS_AS(rl.theta(1, 1, 1), NonAdmissible);
    CHECK_THROWS_AS(rl.theta(1, 1, 4), NonAdmissible);

    Recoupling<MinusOneField> rm{MinusOneField{}};
    // (x+y+z+1)! x! y! z! / ((x+y)! (x+z)! (y+z)!) with x = y = z = 2
    CHECK(rm.theta(4, 4, 4) == Rational(35, 12));
    // theta(1,1,2) = [3] = 3 at t = -1
    CHECK(rm.theta(1, 1, 2) == 3);
}

TEST_CASE("tet degenerate cases") {
    Recoupling<MinusOneField> rm{MinusOneField{}};
    CHECK(rm.tet(1, 1, 0, 1, 1, 0) == -2);
    Recoupling<LaurentField> rl{LaurentField{}};
    for (int a = 0; a <= 4; ++a)
        for (int c = 0; c <= 4; ++c)
            for (int e = 0; e <= 8; ++e) {
                if (!admissible_triple(a, c, e)) continue;
                CHECK(rl.tet(a, a, e, c, c, 0) == rl.theta(a, c, e));
                CHECK(rm.tet(a, a, e, c, c, 0) == rm.theta(a, c, e));
            }
    CHECK_THROWS_AS(rm.tet(1, 2, 0, 1, 1, 0), NonAdmissible);
}

TEST_CASE("tet is invariant under the 24 tetrahedral symmetries") {
    Recoupling<MinusOneField> rm{MinusOneField{}, false};
    Recoupling<LaurentField> rl{LaurentField{}, false};
    int checked = 0;
    for_admissible_tets(4, 0, [&](int a, int b, int e, int c, int d, int f) {
        TetLabels l{a, b, e, c, d, f};
        Rational base = rm.tet_uncached(a, b, e, c, d, f);
        auto orbit = tet_orbit(l);
        CHECK(orbit.size() == 24);
        for (const auto& o : orbit) CHECK(rm.tet_uncached(o[0], o[1], o[2], o[3], o[4], o[5]) == base);
        if (a + b + c + d + e + f <= 12) {
            RatFunc lb = rl.tet_uncached(a, b, e, c, d, f);
            for (const auto& o : orbit) CHECK(rl.tet_uncached(o[0], o[1], o[2], o[3], o[4], o[5]) == lb);
        }
        ++checked;
    });
    CHECK(checked > 500);
}

TEST_CASE("memoized and uncached tet agree, including under concurrent use") {
    Complex t = cx("0.9", "0.0");
    ComplexField f(ScalarContext::generic(t));
    Recoupling<ComplexField> cached{f}, plain{f, false};
    std::vector<TetLabels> labels;
    for_admissible_tets(5, 0, [&](int a, int b, int e, int c, int d, int g) { labels.push_back({a, b, e, c, d, g}); });
    std::vector<std::thread> threads;
    std::vector<int> mismatches(4, 0);
    for (int w = 0; w < 4; ++w)
        threads.emplace_back([&, w] {
            for (std::size_t i = w; i < labels.size(); i += 2) {
                const auto& l = labels[i % labels.size()];
                Complex x = cached.tet(l[0], l[1], l[2], l[3], l[4], l[5]);
                Complex y = plain.tet_uncached(l[0], l[1], l[2], l[3], l[4], l[5]);
                if (!(abs(x - y) <= abs(y) * Real("1e-30", 128))) ++mismatches[w];
            }
        });
    for (auto& th : threads) th.join();
    for (int m : mismatches) CHECK(m == 0);
}

TEST_CASE("exact t = -1 agrees with the Laurent values at s = i") {
    Recoupling<MinusOneField> rm{MinusOneField{}};
    Recoupling<LaurentField> rl{LaurentField{}};
    auto at_i = [](const RatFunc& f) -> Rational {
        auto ev = [](const LaurentZ& p) -> Rational {
            Rational v = 0;
            for (int e = p.low(); e <= p.high(); ++e) {
                if (sgn(p.coeff(e)) == 0) continue;
                int m = ((e % 4) + 4) % 4;
                REQUIRE(m % 2 == 0);  // only even powers of s survive
                v += Rational(p.coeff(e)) * (m == 0 ? 1 : -1);
            }
            return v;
        };
        return ev(f.num()) / ev(f.den());
    };
    for_admissible_tets(3, 0, [&](int a, int b, int e, int c, int d, int f) {
        CHECK(rm.tet(a, b, e, c, d, f) == at_i(rl.tet(a, b, e, c, d, f)));
    });
}

namespace {

template <class RC, class AbsF>
void check_fundamental_estimate(const RC& rc, int max_color, int r, AbsF absval) {
    int checked = 0;
    for_admissible_tets(max_color, r, [&](int a, int b, int e, int c, int d, int f) {
        auto lhs = absval(rc.tet(a, b, e, c, d, f));
        auto rhs2 = absval(rc.theta(a, d, e) * rc.theta(b, c, e) * rc.theta(a, b, f) * rc.theta(c, d, f)) /
                    absval(rc.delta(e) * rc.delta(f));
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(e);
        CAPTURE(c);
        CAPTURE(d);
        CAPTURE(f);
        CHECK(lhs * lhs <= rhs2 * (1 + 1e-12));
        ++checked;
    });
    CHECK(checked > 0);
}

}  // namespace

TEST_CASE("fundamental estimate at t = -1") {
    Recoupling<MinusOneField> rm{MinusOneField{}};
    int checked = 0;
    for_admissible_tets(8, 0, [&](int a, int b, int e, int c, int d, int f) {
        Rational v = rm.tet(a, b, e, c, d, f);
        Rational rhs = rm.theta(a, d, e) * rm.theta(b, c, e) * rm.theta(a, b, f) * rm.theta(c, d, f) /
                       (rm.delta(e) * rm.delta(f));
        CHECK(rhs >= 0);
        CHECK(v * v <= rhs);
        ++checked;
    });
    CHECK(checked > 10000);
}

TEST_CASE("fundamental estimate in the floating modes") {
    auto absval = [](const Complex& z) { return abs(z).to_double(); };
    Recoupling<ComplexField> generic{ComplexField(ScalarContext::generic(cx("0.9", "0.0", 64), 64))};
    check_fundamental_estimate(generic, 8, 0, absval);
    Recoupling<ComplexField> root{ComplexField(ScalarContext::root_of_unity(7, 64))};
    check_fundamental_estimate(root, 8, 7, absval);
    Recoupling<ComplexField> root13{ComplexField(ScalarContext::root_of_unity(13, 64))};
    check_fundamental_estimate(root13, 8, 13, absval);
}

TEST_CASE("fusion: Delta_a Delta_b is the sum of Delta_c over admissible c") {
    Recoupling<ComplexField> rc{ComplexField(ScalarContext::generic(cx("0.9", "0.0")))};
    Recoupling<ComplexField> rz{ComplexField(ScalarContext::generic(cx("0.0", "0.9")))};
    for (auto* r : {&rc, &rz})
        for (int a = 0; a <= 6; ++a)
            for (int b = 0; b <= 6; ++b) {
                Complex sum(0L, 128);
                for (int c = 0; c <= a + b; ++c)
                    if (admissible_triple(a, b, c)) sum = sum + r->theta(a, b, c) / r->theta(a, b, c) * r->delta(c);
                Complex prod = r->delta(a) * r->delta(b);
                CHECK(abs(sum - prod) <= abs(prod) * tol("1e-25"));
            }
}

TEST_CASE("recoupling residual at |t| = 0.9") {
    // Orthogonality of the recoupling matrix:
    // sum_e sixj(a,b,e,c,d,f) * Tet(a,b,e,c,d,f') = delta_{ff'} theta(a,b,f) theta(c,d,f) / Delta_f
    Recoupling<ComplexField> rc{ComplexField(ScalarContext::generic(cx("0.9", "0.0")))};
    Recoupling<ComplexField> rz{ComplexField(ScalarContext::generic(cx("0.54", "0.72")))};
    std::mt19937 rng(20261015);
    std::uniform_int_distribution<int> col(0, 8);
    int trials = 0;
    for (auto* r : {&rc, &rz}) {
        int done = 0;
        while (done < 40) {
            int a = col(rng), b = col(rng), c = col(rng), d = col(rng);
            std::vector<int> fs, es;
            for (int f = 0; f <= 16; ++f)
                if (admissible_triple(a, b, f) && admissible_triple(c, d, f)) fs.push_back(f);
            for (int e = 0; e <= 16; ++e)
                if (admissible_triple(a, d, e) && admissible_triple(b, c, e)) es.push_back(e);
            if (fs.empty() || es.empty()) continue;
            for (int f : fs)
                for (int f2 : fs) {
                    Complex sum(0L, 128);
                    for (int e : es) sum = sum + r->sixj(a, b, e, c, d, f) * r->tet(a, b, e, c, d, f2);
                    Complex expect = f == f2 ? r->theta(a, b, f) * r->theta(c, d, f) / r->delta(f) : Complex(0L, 128);
                    Real scale = max(abs(r->theta(a, b, f) * r->theta(c, d, f) / r->delta(f)), Real(1L, 128));
                    CHECK(abs(sum - expect) / scale < tol("1e-10"));
                }
            ++done;
            ++trials;
        }
    }
    CHECK(trials == 80);
    CHECK_THROWS_AS(rc.sixj(1, 1, 3, 1, 1, 0), NonAdmissible);
}

TEST_CASE("sixj matches its definition") {
    Recoupling<LaurentField> rl{LaurentField{}};
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int k = 0; k <= 6; ++k) {
                if (!admissible_triple(a, b, k)) continue;
                RatFunc v = rl.sixj(a, b, 0, b, a, k);
                RatFunc expect = rl.tet(a, b, 0, b, a, k) * rl.delta(0) / (rl.theta(a, a, 0) * rl.theta(b, b, 0));
                CHECK(v == expect);
                // With e = 0 the tetrahedron degenerates to theta(a,b,k).
                CHECK(v == rl.theta(a, b, k) / (rl.delta(a) * rl.delta(b)));
            }
}

TEST_CASE("half twists") {
    Recoupling<MinusOneField> rm{MinusOneField{}};
    CHECK(rm.half_twist(0) == 1);
    CHECK(rm.half_twist(1) == 1);  // i * i^3
    for (int u = 0; u <= 8; ++u) {
        Rational sq = rm.half_twist(u) * rm.half_twist(u);
        // (-1)^u t^{u(u+2)} at t = -1
        int e = u + u * (u + 2);
        CHECK(sq == (e % 2 == 0 ? 1 : -1));
        CHECK(rm.half_twist_power(u, 2) == sq);
    }
    Complex t = cx("0.7", "0.5");
    Recoupling<ComplexField> rc{ComplexField(ScalarContext::generic(t))};
    CHECK(abs(rc.half_twist(0) - Complex(1L, 128)) < tol("1e-35"));
    for (int u = 0; u <= 8; ++u) {
        Complex sq = rc.half_twist(u) * rc.half_twist(u);
        Complex expect = pow(t, u * (u + 2)) * Complex(u % 2 == 0 ? 1L : -1L, 128);
        CHECK(abs(sq - expect) <= abs(expect) * tol("1e-30"));
        CHECK(abs(rc.half_twist_power(u, -3) * pow(rc.half_twist(u), 3) - Complex(1L, 128)) < tol("1e-28"));
    }
}
