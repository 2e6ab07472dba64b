#include <cmath>
#include <vector>

#include "doctest.h"
#include "separating_table.hpp"
#include "shadowsum/charvar.hpp"
#include "shadowsum/errors.hpp"
#include "shadowsum/statesum.hpp"
#include "support.hpp"

using namespace shadowsum;
using shadowsum::test::distance;

namespace {

const long kPrec = kDefaultPrecisionBits;

// Akiyama-Tanigawa triangle; yields B_1 = +1/2, which even indices do not see.
std::vector<Rational> bernoulli_by_triangle(int n) {
    std::vector<Rational> a(n + 1), out;
    for (int m = 0; m <= n; ++m) {
        a[m] = Rational(1, m + 1);
        for (int j = m; j >= 1; --j) {
            a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
            a[j - 1].canonicalize();
        }
        out.push_back(a[0]);
    }
    return out;
}

PiExpression expected(const shadowsum::test::PublishedRow& row) {
    PiExpression e;
    e.constant = Rational(row.constant);
    e.constant.canonicalize();
    for (const auto& [k, c] : row.pi) {
        e.coeffs[k] = Rational(c);
        e.coeffs[k].canonicalize();
    }
    return e;
}

}  // namespace

TEST_CASE("Bernoulli numbers") {
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(12) == Rational(-691, 2730));
    auto brute = bernoulli_by_triangle(30);
    for (int n = 2; n <= 30; n += 2) {
        CAPTURE(n);
        CHECK(bernoulli(n) == brute[n]);
    }
    CHECK_THROWS_AS(bernoulli(3), OddIndex);
    CHECK_THROWS_AS(bernoulli(1), PreconditionViolated);
    CHECK_THROWS_AS(bernoulli(0), PreconditionViolated);
}

TEST_CASE("even zeta values match p-series with integral tail bounds") {
    for (int r : {2, 4, 6, 8}) {
        CAPTURE(r);
        const long n = 2000000;
        double s = 0;
        for (long u = n; u >= 1; --u) s += std::pow(static_cast<double>(u), -r);
        // sum_{u > n} u^-r lies between the integrals from n+1 and from n.
        const double lo = s + std::pow(static_cast<double>(n + 1), 1 - r) / (r - 1);
        const double hi = s + std::pow(static_cast<double>(n), 1 - r) / (r - 1);
        const double z = (Real(zeta_even_coefficient(r), kPrec) * pow(pi(kPrec), r)).to_double();
        CHECK(z > lo - 1e-12);
        CHECK(z < hi + 1e-12);
        CHECK(std::abs(z - zeta(static_cast<unsigned long>(r), kPrec).to_double()) < 1e-14);
    }
}

TEST_CASE("separating series basics") {
    auto v11 = separating_series({1, 1}, 1e-12);
    CHECK(std::abs(v11.value.to_double() + 2) < 1e-11);
    auto v12 = separating_series({1, 2}, 1e-12);
    CHECK(std::abs(v12.value.to_double() - (-4 + M_PI * M_PI / 3)) < 1e-11);
    for (auto [a, b] : {std::pair{1, 3}, {2, 4}, {3, 5}}) {
        auto x = separating_series({a, b}, 1e-12), y = separating_series({b, a}, 1e-12);
        CHECK(abs(x.value - y.value).to_double() < 1e-30);
        CHECK(closed_form({a, b}) == closed_form({b, a}));
    }
    CHECK(v11.tail_bound.to_double() <= 1e-12);
    CHECK_THROWS_AS(separating_series({0, 2}, 1e-10), PreconditionViolated);
    CHECK_THROWS_AS(separating_series({1, 1}, 0), PreconditionViolated);
    CHECK_THROWS_AS(closed_form({2, 0}), PreconditionViolated);
}

TEST_CASE("published table of separating integrals") {
    const auto& published = shadowsum::test::published_table();
    auto rows = reproduce_table(1e-12);
    REQUIRE(rows.size() == published.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& p = published[i];
        CAPTURE(p.g1);
        CAPTURE(p.g2);
        CHECK(rows[i].genus == p.genus);
        CHECK(rows[i].g1 == p.g1);
        CHECK(rows[i].g2 == p.g2);
        CHECK(rows[i].expression == expected(p));
        CHECK(abs(rows[i].numeric - rows[i].series).to_double() < 1e-9);
        CHECK(rows[i].series_tail.to_double() <= 1e-12);
    }
}

TEST_CASE("rendering of pi expressions") {
    CHECK(closed_form({1, 1}).to_string() == "-2");
    CHECK(closed_form({1, 2}).to_string() == "-4 + 1/3*pi^2");
    CHECK(closed_form({4, 5}).to_string() == "-11440 + 1001*pi^2 + 209/15*pi^4 + 62/315*pi^6 + 1/675*pi^8");
}

TEST_CASE("closed forms agree with series for all splits up to genus 10") {
    for (int g1 = 1; g1 <= 9; ++g1)
        for (int g2 = 1; g1 + g2 <= 10; ++g2) {
            CAPTURE(g1);
            CAPTURE(g2);
            auto sv = separating_series({g1, g2}, 1e-11);
            CHECK(abs(closed_form({g1, g2}).evaluate(kPrec) - sv.value).to_double() < 1e-9);
        }
}

TEST_CASE("state sums of separating curves agree with the series") {
    const auto m1 = ScalarContext::minus_one();
    for (int g1 = 1; g1 <= 3; ++g1)
        for (int g2 = 1; g1 + g2 <= 4; ++g2) {
            CAPTURE(g1);
            CAPTURE(g2);
            Shadow s = separating_curve_shadow({g1, g2}, 1);
            // Term by term: colorings (u-1, u) and (u, u-1) give the series summand at u.
            const long a = 2L * g1 - 1, b = 2L * g2 - 1;
            Complex states(0L, kPrec);
            Real partial(0L, kPrec);
            for (long u = 1; u <= 60; ++u) {
                states += term_weight(s, Coloring{static_cast<int>(u - 1), static_cast<int>(u)}, m1);
                states += term_weight(s, Coloring{static_cast<int>(u), static_cast<int>(u - 1)}, m1);
                Real ru(u, kPrec), ru1(u + 1, kPrec);
                partial -= Real(1L, kPrec) / (pow(ru, a) * pow(ru1, b)) + Real(1L, kPrec) / (pow(ru1, a) * pow(ru, b));
            }
            CHECK(distance(states, partial) < 1e-30);
            EvalResult r = eval_closed(s, m1);
            auto sv = separating_series({g1, g2}, 1e-12);
            CHECK(distance(r.value, sv.value) < 1e-8);
        }
}
