#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "shadowsum/errors.hpp"
#include "shadowsum/numeric.hpp"

namespace shadowsum {

namespace detail {

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw BoundExceeded("int64 Laurent coefficient overflow");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw BoundExceeded("int64 Laurent coefficient overflow");
    return r;
}

inline Integer checked_add(const Integer& a, const Integer& b) { return a + b; }
inline Integer checked_mul(const Integer& a, const Integer& b) { return a * b; }

inline bool divides(long long d, long long n) { return n % d == 0; }
inline bool divides(const Integer& d, const Integer& n) { return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0; }

inline bool is_zero(long long x) { return x == 0; }
inline bool is_zero(const Integer& x) { return sgn(x) == 0; }

inline std::string coeff_str(long long x) { return std::to_string(x); }
inline std::string coeff_str(const Integer& x) { return x.get_str(); }

}  // namespace detail

// Laurent polynomial in one variable with integer coefficients.
template <class T>
class Laurent {
public:
    Laurent() = default;
    Laurent(T c) {  // NOLINT(google-explicit-constructor)
        if (!detail::is_zero(c)) c_.push_back(std::move(c));
    }

    static Laurent monomial(T c, int e) {
        Laurent p(std::move(c));
        p.lo_ = p.c_.empty() ? 0 : e;
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int low() const { return lo_; }
    int high() const { return lo_ + static_cast<int>(c_.size()) - 1; }
    std::size_t terms() const { return c_.size(); }

    T coeff(int e) const {
        if (e < lo_ || e > high()) return T(0);
        return c_[e - lo_];
    }
    const T& leading() const { return c_.back(); }
    const T& trailing() const { return c_.front(); }

    Laurent shifted(int k) const {
        Laurent r = *this;
        if (!r.c_.empty()) r.lo_ += k;
        return r;
    }

    Laurent operator-() const {
        Laurent r = *this;
        for (auto& x : r.c_) x = detail::checked_mul(x, T(-1));
        return r;
    }

    Laurent& operator+=(const Laurent& o) { return add_scaled(o, T(1)); }
    Laurent& operator-=(const Laurent& o) { return add_scaled(o, T(-1)); }

    Laurent& add_scaled(const Laurent& o, const T& k) {
        if (o.c_.empty()) return *this;
        if (c_.empty()) {
            *this = o;
            if (k != T(1))
                for (auto& x : c_) x = detail::checked_mul(x, k);
            normalize();
            return *this;
        }
        int lo = std::min(lo_, o.lo_);
        int hi = std::max(high(), o.high());
        std::vector<T> out(static_cast<std::size_t>(hi - lo + 1), T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) out[lo_ - lo + i] = c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) {
            T& slot = out[o.lo_ - lo + i];
            slot = detail::checked_add(slot, detail::checked_mul(o.c_[i], k));
        }
        lo_ = lo;
        c_ = std::move(out);
        normalize();
        return *this;
    }

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        if (a.c_.empty() || b.c_.empty()) return r;
        r.lo_ = a.lo_ + b.lo_;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (detail::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] = detail::checked_add(r.c_[i + j], detail::checked_mul(a.c_[i], b.c_[j]));
        }
        r.normalize();
        return r;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    friend bool operator==(const Laurent& a, const Laurent& b) { return a.lo_ == b.lo_ && a.c_ == b.c_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    // Exact quotient if `d` divides this polynomial with integral quotient.
    std::optional<Laurent> exact_div(const Laurent& d) const {
        if (d.c_.empty()) throw DivisionByZero("Laurent division by zero");
        if (c_.empty()) return Laurent();
        if (c_.size() < d.c_.size()) return std::nullopt;
        std::vector<T> rem = c_;
        std::size_t qn = c_.size() - d.c_.size() + 1;
        std::vector<T> q(qn, T(0));
        const T& lead = d.c_.back();
        for (std::size_t k = qn; k-- > 0;) {
            T& top = rem[k + d.c_.size() - 1];
            if (detail::is_zero(top)) continue;
            if (!detail::divides(lead, top)) return std::nullopt;
            T f = top / lead;
            for (std::size_t j = 0; j < d.c_.size(); ++j)
                rem[k + j] = detail::checked_add(rem[k + j], detail::checked_mul(f, d.c_[j] * T(-1)));
            q[k] = std::move(f);
        }
        for (const auto& x : rem)
            if (!detail::is_zero(x)) return std::nullopt;
        Laurent r;
        r.lo_ = lo_ - d.lo_;
        r.c_ = std::move(q);
        r.normalize();
        return r;
    }

    template <class V, class Pow>
    V evaluate(const Pow& power_of_variable, V zero) const {
        V acc = std::move(zero);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (detail::is_zero(c_[i])) continue;
            acc += power_of_variable(lo_ + static_cast<int>(i), c_[i]);
        }
        return acc;
    }

    std::string to_string(const std::string& var = "s") const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (detail::is_zero(c_[i])) continue;
            if (!first) os << " + ";
            first = false;
            os << detail::coeff_str(c_[i]) << "*" << var << "^" << (lo_ + static_cast<int>(i));
        }
        return os.str();
    }

    template <class U>
    Laurent<U> convert() const {
        Laurent<U> r;
        for (std::size_t i = 0; i < c_.size(); ++i)
            r += Laurent<U>::monomial(U(c_[i]), lo_ + static_cast<int>(i));
        return r;
    }

private:
    void normalize() {
        std::size_t first = 0;
        while (first < c_.size() && detail::is_zero(c_[first])) ++first;
        if (first == c_.size()) {
            c_.clear();
            lo_ = 0;
            return;
        }
        std::size_t last = c_.size();
        while (detail::is_zero(c_[last - 1])) --last;
        if (first > 0 || last < c_.size()) c_ = std::vector<T>(c_.begin() + first, c_.begin() + last);
        lo_ += static_cast<int>(first);
    }

    int lo_ = 0;
    std::vector<T> c_;
};

using LaurentZ = Laurent<Integer>;
using LaurentI64 = Laurent<long long>;

// [n] as a Laurent polynomial in s, where t = s^2 and [n] = (t^{2n} - t^{-2n}) / (t^2 - t^{-2}).
LaurentZ quantum_integer_poly(int n);

// Quotient of two Laurent polynomials. Denominators that arise are products
// of quantum integers, so cancellation only tries those factors.
class RatFunc {
public:
    RatFunc() : num_(), den_(Integer(1)) {}
    RatFunc(LaurentZ num) : num_(std::move(num)), den_(Integer(1)) {}  // NOLINT(google-explicit-constructor)
    RatFunc(LaurentZ num, LaurentZ den);
    explicit RatFunc(long n) : RatFunc(LaurentZ(Integer(n))) {}

    const LaurentZ& num() const { return num_; }
    const LaurentZ& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator-() const { return RatFunc(-num_, den_, true); }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    // Cross-multiplied comparison; representation is not canonical.
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ * b.den_ == b.num_ * a.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    // The polynomial if the denominator divides the numerator.
    std::optional<LaurentZ> as_polynomial() const;
    std::string to_string() const;

private:
    RatFunc(LaurentZ num, LaurentZ den, bool) : num_(std::move(num)), den_(std::move(den)) {}
    void reduce();

    LaurentZ num_;
    LaurentZ den_;
};

}  // namespace shadowsum
