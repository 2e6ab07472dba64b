#include "shadowsum/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace shadowsum {

namespace {

long max_prec(const Real& a, const Real& b) {
    return a.precision() > b.precision() ? a.precision() : b.precision();
}

}  // namespace

Real::Real(long prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

Real::Real(long value, long prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, value, MPFR_RNDN);
}

Real::Real(const Rational& value, long prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const std::string& decimal, long prec) {
    mpfr_init2(v_, prec);
    if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("not a decimal number: " + decimal);
}

Real Real::from_double(double value, long prec) {
    Real r(prec);
    mpfr_set_d(r.v_, value, MPFR_RNDN);
    return r;
}

Real::Real(const Real& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real& Real::operator+=(const Real& o) { return *this = *this + o; }
Real& Real::operator-=(const Real& o) { return *this = *this - o; }
Real& Real::operator*=(const Real& o) { return *this = *this * o; }
Real& Real::operator/=(const Real& o) { return *this = *this / o; }

Real& Real::operator*=(long n) {
    mpfr_mul_si(v_, v_, n, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(long n) {
    mpfr_div_si(v_, v_, n, MPFR_RNDN);
    return *this;
}

Real Real::operator-() const {
    Real r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

std::string Real::to_string(int digits) const {
    if (mpfr_zero_p(v_)) return "0";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
    if (mpfr_nan_p(v_)) return "nan";
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

std::string Real::to_string() const { return to_string(decimal_digits(precision())); }

#define SHADOWSUM_BINOP(OP, FN)                                 \
    Real operator OP(const Real& a, const Real& b) {           \
        Real r(max_prec(a, b));                                 \
        FN(r.raw(), a.raw(), b.raw(), MPFR_RNDN);               \
        return r;                                               \
    }
SHADOWSUM_BINOP(+, mpfr_add)
SHADOWSUM_BINOP(-, mpfr_sub)
SHADOWSUM_BINOP(*, mpfr_mul)
SHADOWSUM_BINOP(/, mpfr_div)
#undef SHADOWSUM_BINOP

Real operator*(const Real& a, long n) {
    Real r(a);
    r *= n;
    return r;
}

Real operator/(const Real& a, long n) {
    Real r(a);
    r /= n;
    return r;
}

bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.raw(), b.raw()) != 0; }
bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }

#define SHADOWSUM_UNARY(NAME, FN)          \
    Real NAME(const Real& x) {             \
        Real r(x.precision());             \
        FN(r.raw(), x.raw(), MPFR_RNDN);   \
        return r;                          \
    }
SHADOWSUM_UNARY(abs, mpfr_abs)
SHADOWSUM_UNARY(sqrt, mpfr_sqrt)
SHADOWSUM_UNARY(sin, mpfr_sin)
SHADOWSUM_UNARY(cos, mpfr_cos)
SHADOWSUM_UNARY(exp, mpfr_exp)
SHADOWSUM_UNARY(log, mpfr_log)
#undef SHADOWSUM_UNARY

Real pow(const Real& x, long n) {
    Real r(x.precision());
    mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
    return r;
}

Real pow(const Real& x, const Real& y) {
    Real r(max_prec(x, y));
    mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

Real atan2(const Real& y, const Real& x) {
    Real r(max_prec(x, y));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real pi(long prec) {
    Real r(prec);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

Real log2_const(long prec) {
    Real r(prec);
    mpfr_const_log2(r.raw(), MPFR_RNDN);
    return r;
}

Real zeta(unsigned long k, long prec) {
    Real r(prec);
    mpfr_zeta_ui(r.raw(), k, MPFR_RNDN);
    return r;
}

Real inf(long prec) {
    Real r(prec);
    mpfr_set_inf(r.raw(), 1);
    return r;
}

Real with_precision(const Real& x, long prec) {
    Real r(prec);
    mpfr_set(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

int decimal_digits(long prec) {
    return static_cast<int>(std::floor(static_cast<double>(prec) * 0.30102999566398120));
}

Complex& Complex::operator+=(const Complex& o) { return *this = *this + o; }
Complex& Complex::operator-=(const Complex& o) { return *this = *this - o; }
Complex& Complex::operator*=(const Complex& o) { return *this = *this * o; }
Complex& Complex::operator/=(const Complex& o) { return *this = *this / o; }

Complex operator+(const Complex& a, const Complex& b) { return Complex(a.re + b.re, a.im + b.im); }
Complex operator-(const Complex& a, const Complex& b) { return Complex(a.re - b.re, a.im - b.im); }

Complex operator*(const Complex& a, const Complex& b) {
    return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

Complex operator/(const Complex& a, const Complex& b) {
    Real d = norm(b);
    if (d.is_zero()) throw std::domain_error("complex division by zero");
    return Complex((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
}

Complex operator*(const Complex& a, const Real& b) { return Complex(a.re * b, a.im * b); }
Complex operator*(const Complex& a, long n) { return Complex(a.re * n, a.im * n); }

Complex conj(const Complex& z) { return Complex(z.re, -z.im); }
Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }

Real abs(const Complex& z) {
    Real r(z.precision());
    mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
    return r;
}

Real arg(const Complex& z) { return atan2(z.im, z.re); }

Complex sqrt(const Complex& z) {
    long prec = z.precision();
    if (z.is_zero()) return Complex(0L, prec);
    Real m = abs(z);
    Real re = sqrt((m + z.re) / 2);
    Real im = sqrt((m - z.re) / 2);
    if (z.im.sign() < 0) im = -im;
    return Complex(re, im);
}

Complex pow(const Complex& z, long n) {
    long prec = z.precision();
    if (n < 0) return Complex(1L, prec) / pow(z, -n);
    Complex result(1L, prec);
    Complex base = z;
    while (n > 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return result;
}

Complex exp_i(const Real& theta) { return Complex(cos(theta), sin(theta)); }

Complex i_pow(long n, long prec) {
    switch (((n % 4) + 4) % 4) {
        case 0: return Complex(Real(1L, prec), Real(0L, prec));
        case 1: return Complex(Real(0L, prec), Real(1L, prec));
        case 2: return Complex(Real(-1L, prec), Real(0L, prec));
        default: return Complex(Real(0L, prec), Real(-1L, prec));
    }
}

Complex with_precision(const Complex& z, long prec) {
    return Complex(with_precision(z.re, prec), with_precision(z.im, prec));
}

}  // namespace shadowsum
