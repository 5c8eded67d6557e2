#include "pcert/dyadic.hpp"

#include <cmath>
#include <sstream>

namespace pcert {

void Dyadic::normalize() {
    if (man == 0) {
        exp = 0;
        return;
    }
    unsigned long tz = mpz_scan1(man.get_mpz_t(), 0);
    if (tz > 0) {
        mpz_tdiv_q_2exp(man.get_mpz_t(), man.get_mpz_t(), tz);
        exp += static_cast<long>(tz);
    }
}

unsigned long Dyadic::bits() const {
    if (man == 0) return 0;
    return mpz_sizeinbase(man.get_mpz_t(), 2);
}

BigRational Dyadic::to_rat() const {
    BigRational q(man);
    if (exp >= 0) {
        mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(exp));
    } else {
        mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(-exp));
    }
    return q;
}

double Dyadic::to_double() const {
    if (man == 0) return 0.0;
    signed long e;
    double m = mpz_get_d_2exp(&e, man.get_mpz_t());
    double total = static_cast<double>(e + exp);
    if (total > 4000) return man > 0 ? 1e308 * 10 : -1e308 * 10;
    if (total < -4000) return man > 0 ? 0.0 : -0.0;
    return std::ldexp(m, static_cast<int>(e + exp));
}

std::string Dyadic::to_string() const {
    std::ostringstream os;
    os << man.get_str() << "*2^" << exp;
    return os.str();
}

Dyadic dy_add(const Dyadic& a, const Dyadic& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.exp == b.exp) return Dyadic(a.man + b.man, a.exp);
    const Dyadic& lo = (a.exp < b.exp) ? a : b;
    const Dyadic& hi = (a.exp < b.exp) ? b : a;
    Int shifted;
    mpz_mul_2exp(shifted.get_mpz_t(), hi.man.get_mpz_t(),
                 static_cast<unsigned long>(hi.exp - lo.exp));
    return Dyadic(shifted + lo.man, lo.exp);
}

Dyadic dy_sub(const Dyadic& a, const Dyadic& b) { return dy_add(a, b.neg()); }

Dyadic dy_mul(const Dyadic& a, const Dyadic& b) {
    if (a.is_zero() || b.is_zero()) return Dyadic();
    return Dyadic(a.man * b.man, a.exp + b.exp);
}

int dy_cmp(const Dyadic& a, const Dyadic& b) {
    int sa = a.sign(), sb = b.sign();
    if (sa != sb) return sa < sb ? -1 : 1;
    if (sa == 0) return 0;
    // magnitude pre-check avoids aligning wildly different exponents
    long ma = a.mag(), mb = b.mag();
    if (ma < mb - 1) return -sa;
    if (mb < ma - 1) return sa;
    return dy_sub(a, b).sign();
}

Dyadic dy_round(const Dyadic& d, unsigned long bits, Round mode, Dyadic* err) {
    if (err) *err = Dyadic();
    if (d.is_zero() || d.bits() <= bits) return d;
    unsigned long shift = d.bits() - bits;
    Int q;
    bool exact = mpz_divisible_2exp_p(d.man.get_mpz_t(), shift) != 0;
    switch (mode) {
        case Round::Down:
            mpz_fdiv_q_2exp(q.get_mpz_t(), d.man.get_mpz_t(), shift);
            break;
        case Round::Up:
            mpz_cdiv_q_2exp(q.get_mpz_t(), d.man.get_mpz_t(), shift);
            break;
        case Round::Nearest:
            // floor((man + 2^(shift-1)) / 2^shift) via two floor shifts
            mpz_fdiv_q_2exp(q.get_mpz_t(), d.man.get_mpz_t(), shift - 1);
            q += 1;
            mpz_fdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), 1);
            break;
    }
    if (err && !exact) {
        // one ulp bound in every mode (half ulp for Nearest, not needed tighter)
        *err = Dyadic(1, d.exp + static_cast<long>(shift));
    }
    return Dyadic(q, d.exp + static_cast<long>(shift));
}

Dyadic dy_from_rat(const BigRational& q, unsigned long bits, Round mode, Dyadic* err) {
    if (err) *err = Dyadic();
    if (q == 0) return Dyadic();
    const Int& num = q.get_num();
    const Int& den = q.get_den();
    if (den == 1) {
        return dy_round(Dyadic(num, 0), bits, mode, err);
    }
    // scale numerator so the integer quotient carries bits+2 significant bits
    long nb = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2));
    long db = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
    long shift = static_cast<long>(bits) + 2 - (nb - db);
    if (shift < 0) shift = 0;
    Int scaled;
    mpz_mul_2exp(scaled.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(shift));
    Int quot, rem;
    switch (mode) {
        case Round::Down:
            mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
            break;
        case Round::Up:
            mpz_cdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
            break;
        case Round::Nearest:
            mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
            if (2 * rem >= den) {
                quot += 1;
                rem -= den;
            }
            break;
    }
    Dyadic approx(quot, -shift);
    Dyadic rerr;
    if (rem != 0 && err) rerr = Dyadic(1, -shift);
    Dyadic rounded = dy_round(approx, bits, mode, err);
    if (err) *err = dy_add(*err, rerr);
    return rounded;
}

Dyadic dy_sqrt(const Dyadic& d, unsigned long bits, Round mode) {
    if (d.sign() < 0) throw DomainError("dy_sqrt: negative argument");
    if (d.is_zero()) return Dyadic();
    // arrange man*2^exp = M*2^(2k) with M wide enough for `bits` result bits
    Int m = d.man;
    long e = d.exp;
    long want = 2 * static_cast<long>(bits) + 4;
    long extra = want - static_cast<long>(d.bits());
    if (extra < 0) extra = 0;
    if ((e - extra) % 2 != 0) extra += 1;
    mpz_mul_2exp(m.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(extra));
    e -= extra;
    long half = e / 2;
    Int s, rem;
    mpz_sqrtrem(s.get_mpz_t(), rem.get_mpz_t(), m.get_mpz_t());
    // s^2 <= m < (s+1)^2
    if (mode == Round::Up && rem != 0) s += 1;
    Dyadic r(s, half);
    Dyadic err;
    Dyadic rr = dy_round(r, bits, mode == Round::Nearest ? Round::Down : mode, &err);
    if (mode == Round::Up && !err.is_zero()) {
        // dy_round already rounded toward +inf
    }
    return rr;
}

std::string dy_decimal(const Dyadic& d, unsigned long digits) {
    if (d.is_zero()) return "0";
    // value = man * 2^exp; produce round-to-nearest decimal with `digits`
    // significant digits in scientific notation
    Int man = ::abs(d.man);
    long e2 = d.exp;
    // decimal exponent estimate: log10|d| = mag*log10(2) approximately
    double approx_log10 = static_cast<double>(d.mag()) * 0.30102999566398119;
    long d10 = static_cast<long>(std::floor(approx_log10));
    // we want floor(|d| / 10^(d10 - digits + 1)) with digits+1 safety digits
    auto scaled_digits = [&](long dec_exp) -> Int {
        // computes round(|d| * 10^(-dec_exp)) exactly
        Int num = man, den(1);
        if (e2 >= 0) {
            mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(e2));
        } else {
            mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(-e2));
        }
        Int p10;
        mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(dec_exp < 0 ? -dec_exp : dec_exp));
        if (dec_exp < 0) num *= p10; else den *= p10;
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (2 * r >= den) q += 1;
        return q;
    };
    long cut = d10 - static_cast<long>(digits) + 1;
    Int digs = scaled_digits(cut);
    std::string s = digs.get_str();
    while (s.size() > digits) {  // estimate of d10 was low
        cut += 1;
        d10 += 1;
        digs = scaled_digits(cut);
        s = digs.get_str();
    }
    while (s.size() < digits) {  // estimate was high
        cut -= 1;
        d10 -= 1;
        digs = scaled_digits(cut);
        s = digs.get_str();
    }
    std::string out = (d.sign() < 0 ? "-" : "");
    out += s.substr(0, 1);
    if (s.size() > 1) out += "." + s.substr(1);
    out += "e" + std::to_string(d10);
    return out;
}

} // namespace pcert
