#pragma once

#include "shadowsum/context.hpp"
#include "shadowsum/errors.hpp"
#include "shadowsum/laurent.hpp"
#include "shadowsum/numeric.hpp"

namespace shadowsum {

// Scalar fields the recoupling formulas are instantiated over. Each one
// supplies quantum integers and the phase i^a * s^b (s the square root of t).

// Exact arithmetic at t = -1 with s = i.
struct MinusOneField {
    using Value = Rational;

    Value zero() const { return Value(0); }
    Value one() const { return Value(1); }
    Value from_int(long n) const { return Value(n); }
    Value quantum_int(long n) const { return Value(n); }
    Value phase(long i_exp, long s_exp) const {
        long e = i_exp + s_exp;
        if (e % 2 != 0) throw PreconditionViolated("imaginary phase at t = -1 (odd twice-gleam)");
        return Value((e / 2) % 2 == 0 ? 1 : -1);
    }
    Value divide(const Value& a, const Value& b) const {
        if (sgn(b) == 0) throw DivisionByZero("exact division by zero");
        return a / b;
    }
    bool is_zero(const Value& v) const { return sgn(v) == 0; }
    int root_order() const { return 0; }
};

// Floating complex arithmetic at generic t or at t = exp(i pi / 2r).
class ComplexField {
public:
    using Value = Complex;

    explicit ComplexField(const ScalarContext& ctx);

    Value zero() const { return Complex(0L, prec_); }
    Value one() const { return Complex(1L, prec_); }
    Value from_int(long n) const { return Complex(n, prec_); }
    Value quantum_int(long n) const;
    Value phase(long i_exp, long s_exp) const;
    Value divide(const Value& a, const Value& b) const {
        if (b.is_zero()) throw DivisionByZero("complex division by zero");
        return a / b;
    }
    bool is_zero(const Value& v) const { return v.is_zero(); }
    int root_order() const { return r_; }
    long precision() const { return prec_; }
    const ScalarContext& context() const { return ctx_; }

private:
    ScalarContext ctx_;
    long prec_;
    int r_;
    Complex t2_;
    Complex t2_diff_;
    Real sin_pi_r_;
};

// Rational functions in s with integer coefficients; used by the oracle tests.
struct LaurentField {
    using Value = RatFunc;

    Value zero() const { return RatFunc(); }
    Value one() const { return RatFunc(1); }
    Value from_int(long n) const { return RatFunc(n); }
    Value quantum_int(long n) const { return RatFunc(quantum_integer_poly(static_cast<int>(n))); }
    Value phase(long i_exp, long s_exp) const {
        if (i_exp % 2 != 0) throw PreconditionViolated("odd power of i is not a Laurent polynomial");
        long sign = (i_exp / 2) % 2 == 0 ? 1 : -1;
        return RatFunc(LaurentZ::monomial(Integer(sign), static_cast<int>(s_exp)));
    }
    Value divide(const Value& a, const Value& b) const { return a / b; }
    bool is_zero(const Value& v) const { return v.is_zero(); }
    int root_order() const { return 0; }
};

ComplexField make_complex_field(const ScalarContext& ctx);

}  // namespace shadowsum
