#pragma once

#include <string>

#include "doctest.h"
#include "shadowsum/numeric.hpp"

namespace shadowsum::test {

inline Real real(const char* v, long prec = kDefaultPrecisionBits) { return Real(v, prec); }

inline double distance(const Complex& a, const Complex& b) { return abs(a - b).to_double(); }
inline double distance(const Complex& a, const Real& b) { return abs(a - Complex(b)).to_double(); }

inline bool is_real_value(const Complex& z, const Real& expect, double tol) {
    return abs(z.re - expect).to_double() < tol && abs(z.im).to_double() < tol;
}

inline bool admissible_by_hand(int a, int b, int c) {
    return a >= 0 && b >= 0 && c >= 0 && (a + b + c) % 2 == 0 && a <= b + c && b <= a + c && c <= a + b;
}

}  // namespace shadowsum::test
