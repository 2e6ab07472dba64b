#include "shadowsum/laurent.hpp"

namespace shadowsum {

LaurentZ quantum_integer_poly(int n) {
    if (n == 0) return LaurentZ();
    if (n < 0) return -quantum_integer_poly(-n);
    LaurentZ p;
    for (int j = 0; j < n; ++j) p += LaurentZ::monomial(Integer(1), 4 * (n - 1) - 8 * j);
    return p;
}

namespace {

Integer content(const LaurentZ& p) {
    Integer g = 0;
    for (int e = p.low(); e <= p.high(); ++e) {
        Integer c = p.coeff(e);
        if (sgn(c) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    return g;
}

LaurentZ scaled_down(const LaurentZ& p, const Integer& g) {
    LaurentZ r;
    for (int e = p.low(); e <= p.high(); ++e) {
        Integer c = p.coeff(e);
        if (sgn(c) != 0) r += LaurentZ::monomial(Integer(c / g), e);
    }
    return r;
}

}  // namespace

RatFunc::RatFunc(LaurentZ num, LaurentZ den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = LaurentZ(Integer(1));
        return;
    }
    int span = (den_.high() - den_.low()) / 4 + 1;
    for (int k = span; k >= 2; --k) {
        LaurentZ q = quantum_integer_poly(k);
        while (den_.high() - den_.low() >= 4 * (k - 1)) {
            auto dn = den_.exact_div(q);
            if (!dn) break;
            auto nn = num_.exact_div(q);
            if (!nn) break;
            den_ = std::move(*dn);
            num_ = std::move(*nn);
        }
    }
    Integer g = gcd(content(num_), content(den_));
    if (sgn(den_.leading()) < 0) g = -g;
    if (g != 1) {
        num_ = scaled_down(num_, g);
        den_ = scaled_down(den_, g);
    }
    int shift = -den_.low();
    num_ = num_.shifted(shift);
    den_ = den_.shifted(shift);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.num_.is_zero()) throw DivisionByZero("division by the zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::optional<LaurentZ> RatFunc::as_polynomial() const { return num_.exact_div(den_); }

std::string RatFunc::to_string() const {
    if (den_ == LaurentZ(Integer(1))) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

}  // namespace shadowsum
