#include "pcert/rational.hpp"

namespace pcert {

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigRational pochhammer(const BigRational& x, unsigned long m) {
    BigRational r(1);
    BigRational f = x;
    for (unsigned long i = 0; i < m; ++i) {
        r *= f;
        f += 1;
    }
    return r;
}

BigRational binom_general(const BigRational& x, long k) {
    if (k < 0) return BigRational(0);
    if (k == 0) return BigRational(1);
    BigRational r(1);
    BigRational f = x;
    for (long i = 0; i < k; ++i) {
        r *= f;
        f -= 1;
    }
    return r / BigRational(factorial(static_cast<unsigned long>(k)));
}

BigRational binom_m32(long t) {
    return binom_general(make_rat(-3, 2), t);
}

std::string rat_str(const BigRational& q) {
    return q.get_str();
}

} // namespace pcert
