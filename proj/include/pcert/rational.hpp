#pragma once

#include <gmpxx.h>

#include <string>

#include "pcert/errors.hpp"

namespace pcert {

using Int = mpz_class;

// Exact rational scalar. gmpxx keeps values in lowest terms with positive
// denominator as long as construction goes through make_rat / arithmetic,
// which is the invariant all exact identity checks rely on.
using BigRational = mpq_class;

inline BigRational make_rat(const Int& num, const Int& den) {
    if (den == 0) throw DomainError("make_rat: zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

inline BigRational make_rat(long num, long den) {
    return make_rat(Int(num), Int(den));
}

inline bool is_canonical(const BigRational& q) {
    Int g;
    mpz_gcd(g.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return q.get_den() > 0 && g == 1;
}

// Exact half-integer, stored as twice its value. Hosts the arguments of
// half-integer Pochhammers and binomials.
struct HalfInt {
    long twice;

    explicit HalfInt(long twice_value) : twice(twice_value) {}

    BigRational to_rat() const { return make_rat(twice, 2); }
    bool is_integer() const { return twice % 2 == 0; }
};

Int factorial(unsigned long n);

// Rising factorial x(x+1)...(x+m-1); empty product is 1.
BigRational pochhammer(const BigRational& x, unsigned long m);

inline BigRational pochhammer(const HalfInt& x, unsigned long m) {
    return pochhammer(x.to_rat(), m);
}

// Generalized binomial over any rational upper argument:
// C(x,k) = x(x-1)...(x-k+1)/k! for k >= 0, and 0 for k < 0.
BigRational binom_general(const BigRational& x, long k);

inline BigRational binom_general(const HalfInt& x, long k) {
    return binom_general(x.to_rat(), k);
}

inline BigRational binom_general(long x, long k) {
    return binom_general(BigRational(x), k);
}

// C(-3/2, t), the binomial that threads through every coefficient formula.
BigRational binom_m32(long t);

std::string rat_str(const BigRational& q);

} // namespace pcert
