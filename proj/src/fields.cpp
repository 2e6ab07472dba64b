#include "shadowsum/fields.hpp"

namespace shadowsum {

ComplexField::ComplexField(const ScalarContext& ctx)
    : ctx_(ctx), prec_(ctx.precision_bits), r_(ctx.mode == ScalarMode::RootOfUnity ? ctx.r : 0) {
    if (ctx.mode == ScalarMode::ExactMinusOne)
        throw PreconditionViolated("complex field requested for the exact t = -1 context");
    t2_ = ctx.t * ctx.t;
    t2_diff_ = t2_ - Complex(1L, prec_) / t2_;
    if (r_ > 0) sin_pi_r_ = sin(pi(prec_) / static_cast<long>(r_));
}

Complex ComplexField::quantum_int(long n) const {
    if (n == 0) return zero();
    if (n == 1) return one();
    if (r_ > 0) {
        if (n % r_ == 0) return zero();
        Real v = sin(pi(prec_) * n / static_cast<long>(r_)) / sin_pi_r_;
        return Complex(v, Real(0L, prec_));
    }
    if (t2_diff_.is_zero()) throw DivisionByZero("t^2 = t^-2: quantum integers undefined");
    Complex p = pow(t2_, n);
    return (p - Complex(1L, prec_) / p) / t2_diff_;
}

Complex ComplexField::phase(long i_exp, long s_exp) const {
    return i_pow(i_exp, prec_) * pow(ctx_.sqrt_t, s_exp);
}

ComplexField make_complex_field(const ScalarContext& ctx) { return ComplexField(ctx); }

}  // namespace shadowsum
