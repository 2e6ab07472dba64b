#pragma once

#include <map>
#include <string>
#include <vector>

#include "shadowsum/diagram.hpp"
#include "shadowsum/numeric.hpp"

namespace shadowsum {

// B_n for even n >= 2; OddIndex for odd n.
Rational bernoulli(int n);

// zeta(n) = |B_n| (2 pi)^n / (2 n!) as the coefficient of pi^n, n even >= 2.
Rational zeta_even_coefficient(int n);

// c0 + sum_k c_k * pi^k with even k.
struct PiExpression {
    Rational constant = 0;
    std::map<int, Rational> coeffs;

    Real evaluate(long prec) const;
    // "c0 + c2*pi^2 + c4*pi^4 + ...", ascending powers, zero terms omitted.
    std::string to_string() const;
    friend bool operator==(const PiExpression& a, const PiExpression& b);
};

// Genera of the two sides of a separating curve on a closed surface.
struct GenusSplit {
    int g1 = 1;
    int g2 = 1;
    int genus() const { return g1 + g2; }
    int small() const { return g1 < g2 ? g1 : g2; }
    int large() const { return g1 < g2 ? g2 : g1; }
};

struct SeriesValue {
    Real value;
    Real tail_bound;
    long terms = 0;
};

// -sum_{u>=1} (u^{1-2G1} (u+1)^{1-2G2} + (u+1)^{1-2G1} u^{1-2G2}), truncated once the
// certified tail is below epsilon.
SeriesValue separating_series(GenusSplit g, double epsilon, long prec = kDefaultPrecisionBits);

// Bernoulli-number closed form of the separating series.
PiExpression closed_form(GenusSplit g);

// Two faces of Euler characteristic 1-2G1 and 1-2G2 meeting along a circle.
Shadow separating_curve_shadow(GenusSplit g, int color = 1);

struct TableRow {
    int genus = 0;
    int g1 = 0;
    int g2 = 0;
    PiExpression expression;
    Real numeric;  // closed form evaluated
    Real series;   // separating_series
    Real series_tail;
};

// Splits with 1 <= G1 <= G2 <= 5, ordered by G1 then G2.
std::vector<TableRow> reproduce_table(double epsilon = 1e-10, long prec = kDefaultPrecisionBits);

}  // namespace shadowsum
