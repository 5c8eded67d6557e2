#include "pcert/closed_forms.hpp"

#include "pcert/errors.hpp"

namespace pcert {

namespace {

long parity_sign(long v) { return (v % 2 == 0) ? 1 : -1; }

// (1/2 - m)_{m+1}
BigRational poch_half_minus(long m) {
    return pochhammer(make_rat(1 - 2 * m, 2), static_cast<unsigned long>(m) + 1);
}

// (-m)_u at integer m
BigRational poch_neg(long m, long u) {
    return pochhammer(BigRational(-m), static_cast<unsigned long>(u));
}

void require_nonzero(long factor, const char* name) {
    if (factor == 0) throw PoleError(std::string("vanishing factor ") + name);
}

} // namespace

BigRational awalk_shared_tail(const AWalk& w, const BigRational& binom_t) {
    long t = w.t;
    return make_rat(parity_sign(t + 1), 1) / binom_t + make_rat(1, 1 + 2 * t) +
           make_rat(2 * t, 1 + 2 * t) * w.tail;
}

BigRational awalk_a1(const AWalk& w, const BigRational& binom_t) {
    long t = w.t, u = w.u;
    return BigRational(t) * w.ratio / (BigRational(1 + 2 * t) * (t + u)) -
           awalk_shared_tail(w, binom_t);
}

BigRational awalk_a21(const AWalk& w) {
    long t = w.t, u = w.u;
    return make_rat(2 * t, 1) * (t - u) * w.ratio /
           (BigRational(1 + 2 * t) * (1 + 2 * u) * (t + u));
}

BigRational awalk_a31(const AWalk& w) {
    long t = w.t, u = w.u;
    return BigRational(t) * (1 + 2 * t - 2 * u) * w.ratio /
           (BigRational(2) * (1 + 2 * t) * u * (t + u));
}

BigRational awalk_a41(const AWalk& w) {
    long t = w.t, u = w.u;
    return BigRational(t) * w.ratio /
           (BigRational(2) * (1 + 2 * t) * (t + u) * (t + u + 1));
}

BigRational awalk_a42(const AWalk& w, const BigRational& binom_t) {
    long t = w.t, u = w.u;
    BigRational inner = make_rat(parity_sign(t), 1) / binom_t - make_rat(1, 1 + 2 * t) -
                        make_rat(2 * t, 1 + 2 * t) * w.tail;
    return inner / BigRational(1 + 2 * u);
}

namespace {

void check_domain(int i, long t, long u) {
    switch (i) {
        case 1:
        case 3:
            if (u < 1 || u > t) throw DomainError("inner sum slice needs 1 <= u <= t");
            return;
        case 2:
            if (u < 0 || u > t - 1) throw DomainError("inner sum slice needs 0 <= u <= t-1");
            return;
        case 4:
            if (u < 0 || u > t) throw DomainError("inner sum slice needs 0 <= u <= t");
            return;
        default:
            throw DomainError("inner sum slice: i must be in 1..4");
    }
}

} // namespace

BigRational f3_summand(const CertPoint& p) {
    if (p.s + p.u == 0) throw PoleError("vanishing factor s+u");
    if (p.s + 2 * p.u < 0 || p.s + p.u < 0) {
        throw DomainError("f3_summand outside factorial domain");
    }
    return poch_half_minus(p.s + p.u) * binom_m32(p.t - p.s - p.u) *
           poch_neg(p.s + p.u, p.u) /
           (BigRational(factorial(static_cast<unsigned long>(p.s + 2 * p.u))) *
            (p.s + p.u));
}

BigRational cert3_gamma(const CertPoint& p) {
    const Int s(p.s), t(p.t), u(p.u);
    const Int s2 = s * s, s3 = s2 * s, s4 = s3 * s;
    const Int t2 = t * t;
    const Int u2 = u * u, u3 = u2 * u, u4 = u3 * u, u5 = u4 * u;
    Int acc = -6 * s - 6 * s2 + 16 * s3 + 8 * s4;
    acc += 6 * t - 6 * s * t - 46 * s2 * t - 20 * s3 * t;
    acc += 12 * t2 + 30 * s * t2 + 12 * s2 * t2;
    acc += -12 * u - 22 * s * u + 66 * s2 * u + 64 * s3 * u + 8 * s4 * u;
    acc += -7 * t * u - 138 * s * t * u - 126 * s2 * t * u - 16 * s3 * t * u;
    acc += 52 * t2 * u + 57 * s * t2 * u + 8 * s2 * t2 * u;
    acc += -27 * u2 + 88 * s * u2 + 172 * s2 * u2 + 44 * s3 * u2;
    acc += -108 * t * u2 - 235 * s * t * u2 - 68 * s2 * t * u2;
    acc += 57 * t2 * u2 + 24 * s * t2 * u2;
    acc += 32 * u3 + 192 * s * u3 + 92 * s2 * u3;
    acc += -140 * t * u3 - 98 * s * t * u3;
    acc += 18 * t2 * u3;
    acc += 75 * u4 + 86 * s * u4 - 48 * t * u4;
    acc += 30 * u5;
    return BigRational(acc);
}

BigRational cert3_g_with(const CertPoint& p, const GammaFn& gamma) {
    require_nonzero(p.s + p.u, "s+u");
    require_nonzero(1 + p.s + 2 * p.u, "1+s+2u");
    require_nonzero(2 + p.s + 2 * p.u, "2+s+2u");
    require_nonzero(3 + p.s + 2 * p.u, "3+s+2u");
    require_nonzero(-1 + 2 * p.s - 2 * p.t + 2 * p.u, "-1+2s-2t+2u");
    if (p.s + 2 * p.u < 0) throw DomainError("cert3_g outside factorial domain");
    BigRational num = -gamma(p) * p.s * binom_m32(p.t - p.s - p.u) *
                      poch_neg(p.s + p.u, p.u) * poch_half_minus(p.s + p.u);
    BigRational den = BigRational(factorial(static_cast<unsigned long>(p.s + 2 * p.u))) *
                      (p.s + p.u) * (1 + p.s + 2 * p.u) * (2 + p.s + 2 * p.u) *
                      (3 + p.s + 2 * p.u) * (-1 + 2 * p.s - 2 * p.t + 2 * p.u);
    return num / den;
}

BigRational cert3_g(const CertPoint& p) { return cert3_g_with(p, cert3_gamma); }

bool verify_certificate3_with(const CertPoint& p, const GammaFn& gamma) {
    const long t = p.t, u = p.u, s = p.s;
    BigRational lhs = cert3_g_with(CertPoint{t, u, s + 1}, gamma) - cert3_g_with(p, gamma);
    BigRational rhs = BigRational(u * (t - u)) * f3_summand(p) +
                      BigRational(2 * (2 + t) * (1 + u)) * f3_summand(CertPoint{t, u + 1, s}) +
                      BigRational((2 + u) * (2 + t + u)) * f3_summand(CertPoint{t, u + 2, s});
    return lhs == rhs;
}

bool verify_certificate3(const CertPoint& p) {
    return verify_certificate3_with(p, cert3_gamma);
}

bool verify_recurrence3(long t, long u) {
    if (u < 1 || u > t - 2) throw DomainError("verify_recurrence3 needs 1 <= u <= t-2");
    BigRational acc = BigRational(u * (t - u)) * inner_sum_direct(3, t, u);
    acc += BigRational(2 * (2 + t) * (1 + u)) * inner_sum_direct(3, t, u + 1);
    acc += BigRational((2 + u) * (2 + t + u)) * inner_sum_direct(3, t, u + 2);
    return acc == 0;
}

BigRational inner_sum_direct(int i, long t, long u) {
    check_domain(i, t, u);
    BigRational acc(0);
    switch (i) {
        case 1:
            for (long s = 0; s <= t - u; ++s) {
                acc += make_rat(parity_sign(s + u), s + u) * poch_half_minus(s + u) *
                       poch_neg(s + u, u) /
                       BigRational(factorial(static_cast<unsigned long>(s + 2 * u)));
            }
            return acc;
        case 2:
            for (long s = 0; s <= t - u - 1; ++s) {
                acc += poch_half_minus(s + u) * binom_m32(t - s - u - 1) *
                       poch_neg(s + u, u) /
                       BigRational(factorial(static_cast<unsigned long>(s + 2 * u + 1)));
            }
            return acc;
        case 3:
            for (long s = 0; s <= t - u; ++s) {
                acc += poch_half_minus(s + u) * binom_m32(t - s - u) * poch_neg(s + u, u) /
                       (BigRational(factorial(static_cast<unsigned long>(s + 2 * u))) *
                        (s + u));
            }
            return acc;
        default:
            for (long s = 0; s <= t - u; ++s) {
                acc += make_rat(parity_sign(s + u), 1) * poch_half_minus(s + u) *
                       poch_neg(s + u, u) /
                       BigRational(factorial(static_cast<unsigned long>(s + 2 * u + 1)));
            }
            return acc;
    }
}

BigRational inner_closed_form(int i, long t, long u) {
    check_domain(i, t, u);
    BigRational binom = binom_m32(t);
    AWalk sc(t);
    sc.advance_to(u);
    switch (i) {
        case 1:
            return make_rat(parity_sign(t) * parity_sign(u), 2 * u) * binom *
                   awalk_a1(sc, binom);
        case 2:
            return make_rat(parity_sign(u + 1), 1) * binom *
                   (awalk_a21(sc) + awalk_shared_tail(sc, binom));
        case 3:
            return make_rat(parity_sign(u), 1) * binom *
                   (awalk_a31(sc) + awalk_shared_tail(sc, binom));
        default:
            return make_rat(parity_sign(u + t), 1) * binom * (awalk_a41(sc) + awalk_a42(sc, binom));
    }
}

std::pair<BigRational, BigRational> initial_values3(long t) {
    if (t < 1) throw DomainError("initial_values3 needs t >= 1");
    BigRational binom = binom_m32(t);
    BigRational first =
        make_rat(parity_sign(t), 1) - make_rat(t + 2, 2 * (1 + t)) * binom;
    BigRational second = make_rat(-parity_sign(t), 1) +
                         make_rat(8 + 7 * t + t * t, 4 * (1 + t) * (2 + t)) * binom;
    return {first, second};
}

RingElem fast_S_ring(int i, long t) {
    switch (i) {
        case 1:
            if (t < 0) throw DomainError("S1 defined for t >= 0");
            break;
        case 2:
            if (t < 1) throw DomainError("S2 defined for t >= 1");
            break;
        case 3:
            if (t < 2) throw DomainError("S3 defined for t >= 2");
            break;
        case 4:
            if (t < 1) throw DomainError("fast S4 route needs t >= 1");
            break;
        default:
            throw DomainError("fast_S_ring: i must be in 1..4");
    }
    BigRational binom = binom_m32(t);
    RingElem r;
    AWalk sc(t);
    Int fact_even = 1;  // (2u)!
    Int fact_odd = 1;   // (2u-1)! for u >= 1
    Int p36 = 1;        // 36^u
    long u_lo = (i == 1 || i == 3) ? 1 : 0;
    long u_hi = (i == 2) ? t - 1 : t;
    for (long u = 0; u <= u_hi; ++u) {
        if (u > 0) {
            sc.advance();
            fact_even *= (2 * u - 1) * (2 * u);
            if (u == 1) {
                fact_odd = 1;
            } else {
                fact_odd *= (2 * u - 2) * (2 * u - 1);
            }
            p36 *= 36;
        }
        if (u < u_lo) continue;
        BigRational coeff;
        switch (i) {
            case 1:
                coeff = awalk_a1(sc, binom) / BigRational(fact_even);
                break;
            case 2:
                coeff = (awalk_a21(sc) + awalk_shared_tail(sc, binom)) / BigRational(fact_even);
                break;
            case 3:
                coeff = (awalk_a31(sc) + awalk_shared_tail(sc, binom)) / BigRational(fact_odd);
                break;
            default:
                coeff = (awalk_a41(sc) + awalk_a42(sc, binom)) / BigRational(fact_even);
                break;
        }
        r.add_term(2 * u, 0, coeff / BigRational(p36));
    }
    BigRational outer;
    switch (i) {
        case 1:
            outer = make_rat(parity_sign(t), 1) * binom;
            break;
        case 2:
            outer = -binom;
            break;
        case 3:
            outer = binom;
            break;
        default:
            outer = make_rat(parity_sign(t), 1) * binom;
            break;
    }
    return r.scaled(outer);
}

} // namespace pcert
