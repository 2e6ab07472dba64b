#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shadowsum/diagram.hpp"
#include "shadowsum/numeric.hpp"

namespace shadowsum {

// c + sum_k z_k * zeta(k) + l * log(2), exact rational coefficients.
struct ZetaExpression {
    Rational constant = 0;
    std::map<int, Rational> zeta;  // k >= 2
    Rational log2 = 0;

    static ZetaExpression from_rational(const Rational& q);
    bool is_rational() const;
    // Even zeta values become rational multiples of pi^k.
    std::map<int, Rational> pi_powers() const;
    std::map<int, Rational> odd_zetas() const;
    Real evaluate(long prec) const;
    std::string to_string() const;

    ZetaExpression& operator+=(const ZetaExpression& o);
    friend ZetaExpression operator+(ZetaExpression a, const ZetaExpression& b) { return a += b; }
    friend ZetaExpression operator-(const ZetaExpression& a, const ZetaExpression& b);
    friend bool operator==(const ZetaExpression& a, const ZetaExpression& b);
};

// H_n^{(k)} = sum_{j=1}^n j^{-k}
Rational harmonic(long n, int k);
// sum_{j=1}^n (-1)^j j^{-k}
Rational alternating_harmonic(long n, int k);

// Polynomials over the rationals, ascending coefficients.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }
    static QPoly linear(const Rational& root_shift);  // x + root_shift

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const Rational& coeff(int i) const { return c_[i]; }
    Rational operator()(const Rational& x) const;
    QPoly shifted(const Rational& h) const;  // p(x + h)

    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

    // Interpolating polynomial through (x_i, y_i), distinct nodes.
    static QPoly interpolate(const std::vector<Rational>& x, const std::vector<Rational>& y);

private:
    void trim();
    std::vector<Rational> c_;
};

// prod_q (U + q)^{m_q}
using LinearFactors = std::map<long, int>;

struct PartialFractions {
    QPoly polynomial;
    std::map<long, std::vector<Rational>> terms;  // q -> coefficients of (U+q)^{-1}, (U+q)^{-2}, ...
};
PartialFractions partial_fractions(const QPoly& numerator, const LinearFactors& denominator);

// sum_{U >= u0} N(U)/D(U) and sum_{U >= u0} (-1)^U N(U)/D(U), exactly. Returns
// nothing if the series diverges.
std::optional<ZetaExpression> sum_rational_tail(const PartialFractions& pf, long u0, bool alternating);

// Exact value at t = -1 of the state sum of a closed shadow: finite shells
// below the stable range plus a closed-form tail. Returns nothing, with a
// reason, when the sign pattern of the shells is not periodic with period 2.
struct ExactMinusOne {
    ZetaExpression value;
    int shells_summed = 0;
    int interpolation_degree = 0;
};
std::optional<ExactMinusOne> exact_closed_minus_one(const Shadow& s, std::string* why_not = nullptr);

}  // namespace shadowsum
