#include "shadowsum/context.hpp"

#include <cstdlib>
#include <sstream>

#include "shadowsum/errors.hpp"

namespace shadowsum {

ScalarContext ScalarContext::minus_one() {
    ScalarContext ctx;
    ctx.mode = ScalarMode::ExactMinusOne;
    ctx.t = Complex(-1L, ctx.precision_bits);
    ctx.sqrt_t = i_pow(1, ctx.precision_bits);
    return ctx;
}

ScalarContext ScalarContext::generic(const Complex& t, long precision_bits, std::optional<Complex> sqrt_t) {
    if (t.is_zero()) throw PreconditionViolated("t must be nonzero");
    ScalarContext ctx;
    ctx.mode = ScalarMode::GenericComplex;
    ctx.precision_bits = precision_bits;
    ctx.t = with_precision(t, precision_bits);
    if (sqrt_t) {
        Complex s = with_precision(*sqrt_t, precision_bits);
        Real err = abs(s * s - ctx.t);
        Real tol = abs(ctx.t) * pow(Real(2L, precision_bits), -(precision_bits - 8));
        if (err > tol) throw PreconditionViolated("supplied sqrt_t does not square to t");
        ctx.sqrt_t = s;
    } else {
        ctx.sqrt_t = sqrt(ctx.t);
    }
    return ctx;
}

ScalarContext ScalarContext::generic(double re, double im, long precision_bits) {
    // Route through decimal strings so 0.9 means the decimal 0.9, not its binary double.
    std::ostringstream a, b;
    a.precision(17);
    b.precision(17);
    a << re;
    b << im;
    return generic(Complex(Real(a.str(), precision_bits), Real(b.str(), precision_bits)), precision_bits);
}

ScalarContext ScalarContext::root_of_unity(int r, long precision_bits) {
    if (r < 3 || r % 2 == 0) throw PreconditionViolated("root of unity order r must be odd and >= 3");
    ScalarContext ctx;
    ctx.mode = ScalarMode::RootOfUnity;
    ctx.r = r;
    ctx.precision_bits = precision_bits;
    Real base = pi(precision_bits) / static_cast<long>(2 * r);
    ctx.t = exp_i(base);
    ctx.sqrt_t = exp_i(base / 2);
    return ctx;
}

Real ScalarContext::abs_t() const { return abs(t); }

std::string ScalarContext::describe() const {
    switch (mode) {
        case ScalarMode::ExactMinusOne: return "minus-one";
        case ScalarMode::RootOfUnity: return "root:" + std::to_string(r);
        case ScalarMode::GenericComplex: return t.re.to_string(17) + "," + t.im.to_string(17);
    }
    return "?";
}

long default_precision_bits() {
    if (const char* env = std::getenv("SHADOWSUM_PRECISION_BITS")) {
        char* end = nullptr;
        long bits = std::strtol(env, &end, 10);
        if (end && *end == '\0' && bits >= 32 && bits <= 1 << 20) return bits;
    }
    return kDefaultPrecisionBits;
}

}  // namespace shadowsum
