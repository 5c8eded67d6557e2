#pragma once

#include <string>

#include "pcert/rational.hpp"

namespace pcert {

enum class Round { Down, Up, Nearest };  // Down/Up are toward -inf/+inf

// Dyadic real man * 2^exp. Mantissas are kept small by rounding at the
// ball layer; arithmetic here is exact unless a rounding is requested.
struct Dyadic {
    Int man;
    long exp = 0;

    Dyadic() : man(0) {}
    explicit Dyadic(long v) : man(v) { normalize(); }
    Dyadic(Int m, long e) : man(std::move(m)), exp(e) { normalize(); }

    bool is_zero() const { return man == 0; }
    int sign() const { return sgn(man); }

    // Strips trailing zero bits; canonical zero has exp 0.
    void normalize();

    // Number of mantissa bits (0 for zero).
    unsigned long bits() const;

    // exact log2 bracket: 2^(mag-1) <= |d| < 2^mag for nonzero d
    long mag() const { return exp + static_cast<long>(bits()); }

    Dyadic neg() const { return Dyadic(-man, exp); }
    Dyadic abs() const { return Dyadic(::abs(man), exp); }
    Dyadic mul_2exp(long k) const { return is_zero() ? Dyadic() : Dyadic(man, exp + k); }

    BigRational to_rat() const;
    double to_double() const;
    std::string to_string() const;  // exact "man * 2^exp" form
};

Dyadic dy_add(const Dyadic& a, const Dyadic& b);
Dyadic dy_sub(const Dyadic& a, const Dyadic& b);
Dyadic dy_mul(const Dyadic& a, const Dyadic& b);

int dy_cmp(const Dyadic& a, const Dyadic& b);
inline bool dy_lt(const Dyadic& a, const Dyadic& b) { return dy_cmp(a, b) < 0; }
inline bool dy_le(const Dyadic& a, const Dyadic& b) { return dy_cmp(a, b) <= 0; }
inline bool dy_eq(const Dyadic& a, const Dyadic& b) { return dy_cmp(a, b) == 0; }

// Rounds d to at most `bits` mantissa bits in the given direction.
// If err != nullptr, *err is set to an upper bound on |result - d|
// (zero when the rounding was exact).
Dyadic dy_round(const Dyadic& d, unsigned long bits, Round mode, Dyadic* err = nullptr);

// Directed conversion from an exact rational; |result - q| <= *err.
Dyadic dy_from_rat(const BigRational& q, unsigned long bits, Round mode, Dyadic* err = nullptr);

// Directed square roots of a nonnegative dyadic, correct to `bits` bits.
Dyadic dy_sqrt(const Dyadic& d, unsigned long bits, Round mode);

// Decimal rendering of the exact value, up to `digits` significant digits.
std::string dy_decimal(const Dyadic& d, unsigned long digits);

} // namespace pcert
