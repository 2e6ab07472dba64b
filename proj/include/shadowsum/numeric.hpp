#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace shadowsum {

using Integer = mpz_class;
using Rational = mpq_class;

inline constexpr long kDefaultPrecisionBits = 128;

// Owning wrapper around an mpfr_t. Every value carries its own precision;
// binary operations round to the larger of the two operand precisions.
class Real {
public:
    explicit Real(long prec = kDefaultPrecisionBits);
    Real(long value, long prec);
    Real(const Rational& value, long prec);
    Real(const std::string& decimal, long prec);
    static Real from_double(double value, long prec);

    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);
    Real& operator*=(long n);
    Real& operator/=(long n);

    Real operator-() const;

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Round-to-nearest decimal with `digits` significant digits.
    std::string to_string(int digits) const;
    std::string to_string() const;

    friend void swap(Real& a, Real& b) noexcept { mpfr_swap(a.v_, b.v_); }

private:
    mpfr_t v_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator*(const Real& a, long n);
Real operator/(const Real& a, long n);
bool operator<(const Real& a, const Real& b);
bool operator<=(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);
bool operator>=(const Real& a, const Real& b);
bool operator==(const Real& a, const Real& b);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real pow(const Real& x, long n);
Real pow(const Real& x, const Real& y);
Real atan2(const Real& y, const Real& x);
Real max(const Real& a, const Real& b);
Real pi(long prec);
Real log2_const(long prec);
Real zeta(unsigned long k, long prec);
Real inf(long prec);
Real with_precision(const Real& x, long prec);

// Decimal digits that `prec` bits can faithfully represent.
int decimal_digits(long prec);

struct Complex {
    Real re;
    Real im;

    explicit Complex(long prec = kDefaultPrecisionBits) : re(prec), im(prec) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(long value, long prec) : re(value, prec), im(0L, prec) {}
    explicit Complex(const Real& r) : re(r), im(0L, r.precision()) {}

    long precision() const { return re.precision() > im.precision() ? re.precision() : im.precision(); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);
    Complex operator-() const { return Complex(-re, -im); }
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator*(const Complex& a, long n);

Complex conj(const Complex& z);
Real norm(const Complex& z);  // |z|^2
Real abs(const Complex& z);
Real arg(const Complex& z);
Complex sqrt(const Complex& z);
Complex pow(const Complex& z, long n);
Complex exp_i(const Real& theta);  // cos + i sin
Complex i_pow(long n, long prec);  // i^n exactly
Complex with_precision(const Complex& z, long prec);

}  // namespace shadowsum
