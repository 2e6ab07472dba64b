#pragma once

#include <optional>
#include <string>

#include "shadowsum/numeric.hpp"

namespace shadowsum {

enum class ScalarMode { ExactMinusOne, GenericComplex, RootOfUnity };

// Arithmetic regime. t and its square root s are only meaningful in the
// floating modes; at t = -1 the square root is fixed to i.
struct ScalarContext {
    ScalarMode mode = ScalarMode::ExactMinusOne;
    int r = 0;
    long precision_bits = kDefaultPrecisionBits;
    Complex t{kDefaultPrecisionBits};
    Complex sqrt_t{kDefaultPrecisionBits};

    static ScalarContext minus_one();
    // Principal square root unless one is supplied.
    static ScalarContext generic(const Complex& t, long precision_bits = kDefaultPrecisionBits,
                                 std::optional<Complex> sqrt_t = std::nullopt);
    static ScalarContext generic(double re, double im, long precision_bits = kDefaultPrecisionBits);
    static ScalarContext root_of_unity(int r, long precision_bits = kDefaultPrecisionBits);

    bool floating() const { return mode != ScalarMode::ExactMinusOne; }
    Real abs_t() const;
    std::string describe() const;
};

// Precision requested by SHADOWSUM_PRECISION_BITS, or the default.
long default_precision_bits();

}  // namespace shadowsum
