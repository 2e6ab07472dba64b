#include "shadowsum/charvar.hpp"

#include <cmath>
#include <mutex>
#include <sstream>

namespace shadowsum {

namespace {

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Integer factorial(long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

}  // namespace

Rational bernoulli(int n) {
    if (n < 2) throw PreconditionViolated("bernoulli needs n >= 2");
    if (n % 2 != 0) throw OddIndex("bernoulli(" + std::to_string(n) + ")");
    static std::mutex mu;
    static std::vector<Rational> table{Rational(1)};
    std::lock_guard lock(mu);
    while (static_cast<int>(table.size()) <= n) {
        const long m = static_cast<long>(table.size());
        Rational s = 0;
        for (long k = 0; k < m; ++k) s += Rational(binomial(m + 1, k)) * table[k];
        Rational b = -s / Rational(m + 1);
        b.canonicalize();
        table.push_back(b);
    }
    return table[n];
}

Rational zeta_even_coefficient(int n) {
    Rational b = abs(bernoulli(n));
    Integer two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(n - 1));
    Rational out = b * Rational(two_pow) / Rational(factorial(n));
    out.canonicalize();
    return out;
}

Real PiExpression::evaluate(long prec) const {
    Real v(constant, prec);
    const Real p = pi(prec);
    for (const auto& [k, c] : coeffs) v += Real(c, prec) * pow(p, k);
    return v;
}

std::string PiExpression::to_string() const {
    std::ostringstream os;
    os << constant.get_str();
    for (const auto& [k, c] : coeffs) {
        if (sgn(c) == 0) continue;
        Rational a = abs(c);
        os << (sgn(c) < 0 ? " - " : " + ") << a.get_str() << "*pi^" << k;
    }
    return os.str();
}

bool operator==(const PiExpression& a, const PiExpression& b) {
    if (a.constant != b.constant) return false;
    auto nonzero = [](const std::map<int, Rational>& m) {
        std::map<int, Rational> out;
        for (const auto& [k, c] : m)
            if (sgn(c) != 0) out[k] = c;
        return out;
    };
    return nonzero(a.coeffs) == nonzero(b.coeffs);
}

SeriesValue separating_series(GenusSplit g, double epsilon, long prec) {
    if (g.g1 < 1 || g.g2 < 1) throw PreconditionViolated("separating_series needs both genera >= 1");
    if (!(epsilon > 0)) throw PreconditionViolated("epsilon must be positive");
    const long a = 2L * g.g1 - 1, b = 2L * g.g2 - 1, p = a + b;
    // Each summand lies between 2 (u+1)^{-p} and 2 u^{-p}; the tail beyond N is
    // estimated by the midpoint of the two Hurwitz sums, off by at most (N+1)^{-p}.
    long n = 1;
    while (std::pow(static_cast<double>(n + 1), -static_cast<double>(p)) > epsilon / 4) n *= 2;
    const long wp = prec + 32;
    Real sum(0L, wp), hp(0L, wp);
    for (long u = 1; u <= n + 1; ++u) {
        Real ru(u, wp), ru1(u + 1, wp);
        Real inv_p = Real(1L, wp) / pow(ru, p);
        hp += inv_p;
        if (u <= n) {
            Real t1 = Real(1L, wp) / (pow(ru, a) * pow(ru1, b));
            Real t2 = Real(1L, wp) / (pow(ru1, a) * pow(ru, b));
            sum += t1 + t2;
        }
    }
    Real z = zeta(static_cast<unsigned long>(p), wp);
    Real inv_n1 = Real(1L, wp) / pow(Real(n + 1, wp), p);
    Real upper = (z - (hp - inv_n1)) * 2L;  // 2 sum_{u > n} u^{-p}
    Real lower = (z - hp) * 2L;             // 2 sum_{u > n} (u+1)^{-p}
    SeriesValue out;
    out.value = with_precision(-(sum + (upper + lower) / 2L), prec);
    out.tail_bound = with_precision((upper - lower) / 2L, prec);
    out.terms = n;
    return out;
}

PiExpression closed_form(GenusSplit g) {
    if (g.g1 < 1 || g.g2 < 1) throw PreconditionViolated("closed_form needs both genera >= 1");
    PiExpression out;
    auto add_zeta = [&](int k, const Rational& weight) {
        out.coeffs[k] += weight * zeta_even_coefficient(k);
        out.coeffs[k].canonicalize();
    };
    const long G = g.small(), H = g.large();
    if (G == H) {
        for (long j = 1; j <= 2 * G - 1; ++j) out.constant -= 2 * Rational(binomial(4 * G - j - 3, 2 * G - j - 1));
        for (long j = 1; j <= G - 1; ++j)
            add_zeta(static_cast<int>(2 * j), 4 * Rational(binomial(4 * G - 2 * j - 3, 2 * G - 2 * j - 1)));
    } else {
        const long n = 2 * G + 2 * H - 3;
        for (long j = 1; j <= 2 * G - 1; ++j) out.constant -= Rational(binomial(n - j, 2 * G - j - 1));
        for (long j = 1; j <= 2 * H - 1; ++j) out.constant -= Rational(binomial(n - j, 2 * H - j - 1));
        for (long i = 1; i <= G - 1; ++i)
            add_zeta(static_cast<int>(2 * i),
                     2 * Rational(binomial(n - 2 * i, 2 * G - 2 * i - 1) + binomial(n - 2 * i, 2 * H - 2 * i - 1)));
        for (long i = G; i <= H - 1; ++i)
            add_zeta(static_cast<int>(2 * i), 2 * Rational(binomial(n - 2 * i, 2 * H - 2 * i - 1)));
    }
    out.constant.canonicalize();
    return out;
}

Shadow separating_curve_shadow(GenusSplit g, int color) {
    Shadow s;
    s.surface = {g.g1 + g.g2, 0};
    s.faces = {Face{"f1", 1 - 2 * g.g1, false, 0}, Face{"f2", 1 - 2 * g.g2, false, 0}};
    Edge e;
    e.id = "beta";
    e.color = color;
    e.faces = {0, 1};
    e.circle = true;
    s.edges.push_back(e);
    validate(s);
    return s;
}

std::vector<TableRow> reproduce_table(double epsilon, long prec) {
    std::vector<TableRow> rows;
    for (int g1 = 1; g1 <= 5; ++g1)
        for (int g2 = g1; g2 <= 5; ++g2) {
            TableRow row;
            row.genus = g1 + g2;
            row.g1 = g1;
            row.g2 = g2;
            row.expression = closed_form({g1, g2});
            row.numeric = row.expression.evaluate(prec);
            auto sv = separating_series({g1, g2}, epsilon, prec);
            row.series = sv.value;
            row.series_tail = sv.tail_bound;
            rows.push_back(std::move(row));
        }
    return rows;
}

}  // namespace shadowsum
