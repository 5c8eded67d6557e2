#include "pcert/ball.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <ostream>

#include "pcert/errors.hpp"

namespace pcert {

namespace {

constexpr unsigned long kRadBits = 32;

std::atomic<long> g_precision_cap{1L << 20};

void check_prec(long prec) {
    if (prec < 2) throw DomainError("precision must be >= 2 bits");
    if (prec > g_precision_cap.load()) {
        throw PrecisionOverflow("requested " + std::to_string(prec) +
                                " bits, cap is " + std::to_string(g_precision_cap.load()));
    }
}

// radius arithmetic: everything rounds up, mantissas stay small
Dyadic rad_up(const Dyadic& d) { return dy_round(d, kRadBits, Round::Up); }

Dyadic rup_add(const Dyadic& a, const Dyadic& b) { return rad_up(dy_add(a, b)); }

Dyadic rup_mul(const Dyadic& a, const Dyadic& b) { return rad_up(dy_mul(a, b)); }

Dyadic rup_div(const Dyadic& num, const Dyadic& den) {
    if (num.is_zero()) return Dyadic();
    return dy_from_rat(num.to_rat() / den.to_rat(), kRadBits, Round::Up);
}

Dyadic rdown(const Dyadic& d) { return dy_round(d, kRadBits, Round::Down); }

} // namespace

std::ostream& operator<<(std::ostream& os, Tri t) {
    switch (t) {
        case Tri::True: return os << "True";
        case Tri::False: return os << "False";
        default: return os << "Undecided";
    }
}

std::string RealBall::to_string(unsigned long digits) const {
    if (rad.is_zero()) return dy_decimal(mid, digits) + " +/- 0";
    return dy_decimal(mid, digits) + " +/- " + dy_decimal(rad, 3);
}

long precision_cap() { return g_precision_cap.load(); }

void set_precision_cap(long bits) {
    if (bits < 2) throw DomainError("precision cap must be >= 2");
    g_precision_cap.store(bits);
}

RealBall b_exact(const Dyadic& d) { return RealBall(d, Dyadic()); }

RealBall b_exact_int(const Int& n) { return RealBall(Dyadic(n, 0), Dyadic()); }

RealBall b_from_rat(const BigRational& q, long prec) {
    check_prec(prec);
    Dyadic err;
    Dyadic mid = dy_from_rat(q, static_cast<unsigned long>(prec), Round::Nearest, &err);
    return RealBall(mid, rad_up(err));
}

RealBall b_neg(const RealBall& a) { return RealBall(a.mid.neg(), a.rad); }

RealBall b_mul_2exp(const RealBall& a, long k) {
    return RealBall(a.mid.mul_2exp(k), a.rad.mul_2exp(k));
}

RealBall b_round(const RealBall& a, long prec) {
    check_prec(prec);
    Dyadic err;
    Dyadic mid = dy_round(a.mid, static_cast<unsigned long>(prec), Round::Nearest, &err);
    return RealBall(mid, rup_add(a.rad, err));
}

RealBall b_add(const RealBall& a, const RealBall& b, long prec) {
    check_prec(prec);
    Dyadic err;
    Dyadic mid = dy_round(dy_add(a.mid, b.mid), static_cast<unsigned long>(prec),
                          Round::Nearest, &err);
    return RealBall(mid, rup_add(rup_add(a.rad, b.rad), err));
}

RealBall b_sub(const RealBall& a, const RealBall& b, long prec) {
    return b_add(a, b_neg(b), prec);
}

RealBall b_mul(const RealBall& a, const RealBall& b, long prec) {
    check_prec(prec);
    Dyadic err;
    Dyadic mid = dy_round(dy_mul(a.mid, b.mid), static_cast<unsigned long>(prec),
                          Round::Nearest, &err);
    Dyadic ma = rad_up(a.mid.abs());
    Dyadic mb = rad_up(b.mid.abs());
    Dyadic r = rup_add(rup_mul(ma, b.rad), rup_mul(mb, a.rad));
    r = rup_add(r, rup_mul(a.rad, b.rad));
    r = rup_add(r, err);
    return RealBall(mid, r);
}

RealBall b_div(const RealBall& a, const RealBall& b, long prec) {
    check_prec(prec);
    if (dy_cmp(b.mid.abs(), b.rad) <= 0) {
        throw DomainStraddle("division by a ball containing zero");
    }
    if (a.mid.is_zero() && a.rad.is_zero()) return b_zero();
    // quotient of midpoints, truncated toward zero, with one-ulp bound
    Dyadic q, qerr;
    if (a.mid.is_zero()) {
        q = Dyadic();
    } else {
        long s = prec + 2 + static_cast<long>(b.mid.bits()) - static_cast<long>(a.mid.bits());
        if (s < 0) s = 0;
        Int scaled;
        mpz_mul_2exp(scaled.get_mpz_t(), a.mid.man.get_mpz_t(), static_cast<unsigned long>(s));
        Int quot, rem;
        mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(), b.mid.man.get_mpz_t());
        long qe = a.mid.exp - s - b.mid.exp;
        q = Dyadic(quot, qe);
        if (rem != 0) qerr = Dyadic(1, qe);
    }
    // |x/y - q| <= (ra + |ma/mb| rb)/(|mb| - rb) + qerr, |ma/mb| <= |q|+qerr
    Dyadic den_lo = rdown(dy_sub(b.mid.abs(), b.rad));
    Dyadic num = rup_add(a.rad, rup_mul(rup_add(rad_up(q.abs()), qerr), b.rad));
    Dyadic r = rup_add(rup_div(num, den_lo), qerr);
    Dyadic rerr;
    Dyadic mid = dy_round(q, static_cast<unsigned long>(prec), Round::Nearest, &rerr);
    return RealBall(mid, rup_add(r, rerr));
}

RealBall b_div_ui(const RealBall& a, unsigned long d, long prec) {
    if (d == 0) throw DomainStraddle("division by zero");
    check_prec(prec);
    Dyadic err;
    Dyadic mid = dy_from_rat(a.mid.to_rat() / d, static_cast<unsigned long>(prec),
                             Round::Nearest, &err);
    Dyadic r = rup_add(rup_div(a.rad, Dyadic(Int(d), 0)), err);
    return RealBall(mid, r);
}

RealBall b_mul_rat(const RealBall& a, const BigRational& q, long prec) {
    if (q == 0) return b_zero();
    return b_mul(a, b_from_rat(q, prec), prec);
}

RealBall b_sqrt(const RealBall& a, long prec) {
    check_prec(prec);
    Dyadic lo = a.inf();
    if (lo.sign() < 0) throw DomainStraddle("sqrt of a ball containing negatives");
    Dyadic hi = a.sup();
    Dyadic slo = dy_sqrt(lo, static_cast<unsigned long>(prec) + 2, Round::Down);
    Dyadic shi = dy_sqrt(hi, static_cast<unsigned long>(prec) + 2, Round::Up);
    Dyadic mid0 = dy_add(slo, shi).mul_2exp(-1);
    Dyadic err;
    Dyadic mid = dy_round(mid0, static_cast<unsigned long>(prec), Round::Nearest, &err);
    Dyadic half_width = rad_up(dy_sub(shi, slo).mul_2exp(-1));
    return RealBall(mid, rup_add(half_width, err));
}

RealBall b_sqrt_ui(unsigned long n, long prec) {
    return b_sqrt(b_exact_int(Int(n)), prec);
}

RealBall b_exp(const RealBall& a, long prec) {
    check_prec(prec);
    if (a.mid.is_zero() && a.rad.is_zero()) return b_one();
    Dyadic bound = rad_up(rup_add(a.mid.abs(), a.rad));  // >= sup|a|
    long m = bound.is_zero() ? 0 : bound.mag();
    if (m > 40) throw DomainError("exp argument magnitude too large");
    long q = m + 1;  // |a| / 2^q <= 1/2
    if (q < 0) q = 0;
    long workp = prec + q + 16;
    RealBall y = b_mul_2exp(a, -q);
    // Taylor terms: choose N with 2^(1-N)/N! <= 2^-(workp+4)
    long N = 2;
    {
        Int fac = 2;  // N!
        while (mpz_sizeinbase(fac.get_mpz_t(), 2) + static_cast<unsigned long>(N) <
               static_cast<unsigned long>(workp + 6)) {
            ++N;
            fac *= N;
        }
    }
    RealBall t = b_one();
    for (long i = N - 1; i >= 1; --i) {
        t = b_add(b_one(), b_div_ui(b_mul(y, t, workp), static_cast<unsigned long>(i), workp),
                  workp);
    }
    // series remainder (|y| <= 1/2): sum_{i>=N} |y|^i/i! <= 2^(1-N)/N!
    Dyadic rem = dy_from_rat(make_rat(Int(2), factorial(static_cast<unsigned long>(N))),
                             kRadBits, Round::Up)
                     .mul_2exp(-N);
    t.rad = rup_add(t.rad, rem);
    for (long j = 0; j < q; ++j) t = b_mul(t, t, workp);
    return b_round(t, prec);
}

namespace {

// atanh series at an exact small argument; |z| <= 1/2 required.
// Used for both log2 = 2*atanh(1/3) and reduced logarithms.
RealBall atanh_series(const RealBall& z, long workp) {
    // remainder after M odd terms: |z|^(2M+1)/(2M+1) * 1/(1-z^2) <= 2^-(2M+1) * 2
    long M = (workp + 6) / 2 + 2;
    RealBall zz = b_mul(z, z, workp);
    RealBall p = z;
    RealBall s = b_zero();
    for (long i = 0; i < M; ++i) {
        s = b_add(s, b_div_ui(p, static_cast<unsigned long>(2 * i + 1), workp), workp);
        p = b_mul(p, zz, workp);
    }
    Dyadic rem = Dyadic(1, -(2 * M));  // 2 * 2^-(2M+1)
    s.rad = rup_add(s.rad, rem);
    return s;
}

RealBall log2_ball(long prec) {
    static std::mutex mtx;
    static RealBall cached;
    static long cached_prec = 0;
    std::lock_guard<std::mutex> lock(mtx);
    if (prec > cached_prec) {
        long workp = prec + 16;
        cached = b_mul_2exp(atanh_series(b_from_rat(make_rat(1, 3), workp), workp), 1);
        cached_prec = prec;
    }
    return b_round(cached, prec);
}

// log of an exact positive dyadic
RealBall log_point(const Dyadic& d, long prec) {
    long workp = prec + 16;
    long e = d.mag() - 1;  // d * 2^-e in [1,2)
    RealBall m = b_exact(d.mul_2exp(-e));
    RealBall z = b_div(b_sub(m, b_one(), workp), b_add(m, b_one(), workp), workp);
    RealBall s = b_mul_2exp(atanh_series(z, workp), 1);
    if (e != 0) {
        RealBall el2 = b_mul(b_exact_int(Int(e)), log2_ball(workp), workp);
        s = b_add(s, el2, workp);
    }
    return b_round(s, prec);
}

} // namespace

RealBall b_log(const RealBall& a, long prec) {
    check_prec(prec);
    Dyadic lo = a.inf();
    if (lo.sign() <= 0) throw DomainStraddle("log of a ball touching (-inf, 0]");
    if (a.rad.is_zero()) return log_point(a.mid, prec);
    // log is increasing: enclose via endpoints
    RealBall bl = log_point(lo, prec + 8);
    RealBall bh = log_point(a.sup(), prec + 8);
    Dyadic l = bl.inf(), h = bh.sup();
    Dyadic mid0 = dy_add(l, h).mul_2exp(-1);
    Dyadic err;
    Dyadic mid = dy_round(mid0, static_cast<unsigned long>(prec), Round::Nearest, &err);
    Dyadic r = rup_add(rad_up(dy_sub(h, l).mul_2exp(-1)), err);
    return RealBall(mid, r);
}

RealBall b_cosh(const RealBall& a, long prec) {
    long workp = prec + 8;
    RealBall e = b_exp(a, workp);
    RealBall ei = b_div(b_one(), e, workp);
    return b_round(b_mul_2exp(b_add(e, ei, workp), -1), prec);
}

RealBall b_sinh(const RealBall& a, long prec) {
    long workp = prec + 8;
    RealBall e = b_exp(a, workp);
    RealBall ei = b_div(b_one(), e, workp);
    return b_round(b_mul_2exp(b_sub(e, ei, workp), -1), prec);
}

RealBall b_pow_int(const RealBall& a, long k, long prec) {
    check_prec(prec);
    if (k == 0) return b_one();
    bool invert = k < 0;
    unsigned long e = static_cast<unsigned long>(invert ? -k : k);
    long workp = prec + 8;
    {
        unsigned long t = e;
        while (t > 1) {
            workp += 2;
            t >>= 1;
        }
    }
    RealBall base = a;
    RealBall acc = b_one();
    while (e > 0) {
        if (e & 1) acc = b_mul(acc, base, workp);
        e >>= 1;
        if (e > 0) base = b_mul(base, base, workp);
    }
    if (invert) acc = b_div(b_one(), acc, workp);
    return b_round(acc, prec);
}

namespace {

// one arctan(1/m) term sequence for the Machin formula
RealBall atan_inv_ui(unsigned long m, long workp) {
    RealBall s = b_zero();
    Int mpow(m);  // m^(2i+1)
    Int msq = Int(m) * Int(m);
    long i = 0;
    while (true) {
        Int den = mpow * (2 * i + 1);
        BigRational term = make_rat(Int((i % 2 == 0) ? 1 : -1), den);
        s = b_add(s, b_from_rat(term, workp), workp);
        long term_mag = -static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)) + 1;
        if (term_mag < -(workp + 4)) {
            // alternating with decreasing terms: remainder within next term
            s.rad = rup_add(s.rad, Dyadic(1, term_mag));
            break;
        }
        mpow *= msq;
        ++i;
    }
    return s;
}

} // namespace

RealBall b_pi(long prec) {
    check_prec(prec);
    static std::mutex mtx;
    static RealBall cached;
    static long cached_prec = 0;
    std::lock_guard<std::mutex> lock(mtx);
    if (prec > cached_prec) {
        long workp = prec + 16;
        RealBall a5 = atan_inv_ui(5, workp);
        RealBall a239 = atan_inv_ui(239, workp);
        cached = b_sub(b_mul_2exp(a5, 4), b_mul_2exp(a239, 2), workp);
        cached_prec = prec;
    }
    return b_round(cached, prec);
}

Tri certify_lt(const RealBall& a, const RealBall& b) {
    if (dy_lt(a.sup(), b.inf())) return Tri::True;
    if (dy_lt(b.sup(), a.inf())) return Tri::False;
    return Tri::Undecided;
}

int certify_sign(const RealBall& a) {
    if (a.inf().sign() > 0) return 1;
    if (a.sup().sign() < 0) return -1;
    return 0;
}

bool contains(const RealBall& a, const BigRational& q) {
    return a.inf().to_rat() <= q && q <= a.sup().to_rat();
}

bool contains_ball(const RealBall& outer, const RealBall& inner) {
    return dy_le(outer.inf(), inner.inf()) && dy_le(inner.sup(), outer.sup());
}

bool contains_zero(const RealBall& a) {
    return a.inf().sign() <= 0 && a.sup().sign() >= 0;
}

Decision adaptive_decide(const BallExpr& lhs, const BallExpr& rhs,
                         long start_bits, long max_bits) {
    if (start_bits > max_bits) throw DomainError("adaptive_decide: start_bits > max_bits");
    long p = start_bits;
    while (true) {
        Tri t = certify_lt(lhs(p), rhs(p));
        if (t != Tri::Undecided) return Decision{t, p};
        if (p >= max_bits) return Decision{Tri::Undecided, p};
        p = std::min(2 * p, max_bits);
    }
}

} // namespace pcert
