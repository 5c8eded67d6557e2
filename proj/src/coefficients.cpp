#include "pcert/coefficients.hpp"

#include "pcert/errors.hpp"

namespace pcert {

namespace {

Int pow_int(long base, long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(e));
    return r;
}

// (1/2 - s)_{s+1}
BigRational poch_half_minus(long s) {
    return pochhammer(make_rat(1 - 2 * s, 2), static_cast<unsigned long>(s) + 1);
}

long parity_sign(long t) { return (t % 2 == 0) ? 1 : -1; }

} // namespace

RingElem aux_coefficient(AuxKind kind, long t) {
    if (t < 0) throw DomainError("aux_coefficient: t must be >= 0");
    RingElem r;
    switch (kind) {
        case AuxKind::e1: {
            if (t == 0) return RingElem(BigRational(1));
            BigRational base = make_rat(parity_sign(t), 1) * poch_half_minus(t) /
                               BigRational(pow_int(24, t)) / t;
            // inner: sum_{u=1}^t (-1)^u (-t)_u / ((t+u)!(2u-1)!) * (pi^2/36)^u
            BigRational poch_mt(-t);          // (-t)_u starting at u=1
            Int fact_tu = factorial(t + 1);   // (t+u)!
            Int fact_odd = 1;                 // (2u-1)!
            Int p36 = 36;                     // 36^u
            for (long u = 1; u <= t; ++u) {
                BigRational c = make_rat(parity_sign(u), 1) * poch_mt /
                                BigRational(fact_tu) / BigRational(fact_odd);
                r.add_term(2 * u, 0, base * c / BigRational(p36));
                poch_mt *= (-t + u);
                fact_tu *= (t + u + 1);
                fact_odd *= (2 * u) * (2 * u + 1);
                p36 *= 36;
            }
            return r;
        }
        case AuxKind::o1: {
            // -(pi/(12 sqrt6)) = -(1/72) pi sqrt6
            BigRational base = make_rat(-parity_sign(t), 72) * poch_half_minus(t) /
                               BigRational(pow_int(24, t));
            BigRational poch_mt(1);          // (-t)_u starting at u=0
            Int fact_tu1 = factorial(t + 1); // (t+u+1)!
            Int fact_even = 1;               // (2u)!
            Int p36 = 1;
            for (long u = 0; u <= t; ++u) {
                BigRational c = make_rat(parity_sign(u), 1) * poch_mt /
                                BigRational(fact_tu1) / BigRational(fact_even);
                r.add_term(2 * u + 1, 1, base * c / BigRational(p36));
                poch_mt *= (-t + u);
                fact_tu1 *= (t + u + 2);
                fact_even *= (2 * u + 1) * (2 * u + 2);
                p36 *= 36;
            }
            return r;
        }
        case AuxKind::e2:
            r.add_term(0, 0, make_rat(Int(1), pow_int(24, t)));
            return r;
        case AuxKind::o2:
            // -6/(pi sqrt24) = -(1/2) pi^-1 sqrt6
            r.add_term(-1, 1,
                       make_rat(-parity_sign(t), 2) * binom_m32(t) / BigRational(pow_int(24, t)));
            return r;
    }
    throw DomainError("aux_coefficient: bad kind");
}

RingElem inner_sum_S(int i, long t) {
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
            if (t < 0) throw DomainError("S4 defined for t >= 0");
            break;
        default:
            throw DomainError("inner_sum_S: i must be in 1..4");
    }
    RingElem r;
    if (i == 1) {
        // sum_{s=1}^t (-1)^s (1/2-s)_{s+1}/s * sum_{u=1}^s ...
        for (long s = 1; s <= t; ++s) {
            BigRational outer =
                make_rat(parity_sign(s), 1) * poch_half_minus(s) / BigRational(s);
            BigRational poch_ms(-s);
            Int fact_su = factorial(s + 1);
            Int fact_odd = 1;
            Int p36 = 36;
            for (long u = 1; u <= s; ++u) {
                BigRational c = make_rat(parity_sign(u), 1) * poch_ms /
                                BigRational(fact_su) / BigRational(fact_odd);
                r.add_term(2 * u, 0, outer * c / BigRational(p36));
                poch_ms *= (-s + u);
                fact_su *= (s + u + 1);
                fact_odd *= (2 * u) * (2 * u + 1);
                p36 *= 36;
            }
        }
    } else if (i == 2) {
        // sum_{s=0}^{t-1} (1/2-s)_{s+1} C(-3/2, t-s-1) * sum_{u=0}^s ...
        for (long s = 0; s <= t - 1; ++s) {
            BigRational outer = poch_half_minus(s) * binom_m32(t - s - 1);
            BigRational poch_ms(1);
            Int fact_su1 = factorial(s + 1);
            Int fact_even = 1;
            Int p36 = 1;
            for (long u = 0; u <= s; ++u) {
                BigRational c = make_rat(parity_sign(u), 1) * poch_ms /
                                BigRational(fact_su1) / BigRational(fact_even);
                r.add_term(2 * u, 0, outer * c / BigRational(p36));
                poch_ms *= (-s + u);
                fact_su1 *= (s + u + 2);
                fact_even *= (2 * u + 1) * (2 * u + 2);
                p36 *= 36;
            }
        }
    } else if (i == 3) {
        // sum_{s=1}^t (1/2-s)_{s+1} C(-3/2, t-s)/s * sum_{u=1}^s ...
        for (long s = 1; s <= t; ++s) {
            BigRational outer = poch_half_minus(s) * binom_m32(t - s) / BigRational(s);
            BigRational poch_ms(-s);
            Int fact_su = factorial(s + 1);
            Int fact_odd = 1;
            Int p36 = 36;
            for (long u = 1; u <= s; ++u) {
                BigRational c = make_rat(parity_sign(u), 1) * poch_ms /
                                BigRational(fact_su) / BigRational(fact_odd);
                r.add_term(2 * u, 0, outer * c / BigRational(p36));
                poch_ms *= (-s + u);
                fact_su *= (s + u + 1);
                fact_odd *= (2 * u) * (2 * u + 1);
                p36 *= 36;
            }
        }
    } else {
        // sum_{s=0}^t (-1)^s (1/2-s)_{s+1} * sum_{u=0}^s ...
        for (long s = 0; s <= t; ++s) {
            BigRational outer = make_rat(parity_sign(s), 1) * poch_half_minus(s);
            BigRational poch_ms(1);
            Int fact_su1 = factorial(s + 1);
            Int fact_even = 1;
            Int p36 = 1;
            for (long u = 0; u <= s; ++u) {
                BigRational c = make_rat(parity_sign(u), 1) * poch_ms /
                                BigRational(fact_su1) / BigRational(fact_even);
                r.add_term(2 * u, 0, outer * c / BigRational(p36));
                poch_ms *= (-s + u);
                fact_su1 *= (s + u + 2);
                fact_even *= (2 * u + 1) * (2 * u + 2);
                p36 *= 36;
            }
        }
    }
    return r;
}

RingElem g_component(GCompKind kind, long t) {
    if (t < 0) throw DomainError("g_component: t must be >= 0");
    switch (kind) {
        case GCompKind::ge1: {
            RingElem s1 = inner_sum_S(1, t);
            s1 += RingElem(BigRational(1));
            return s1.scaled(make_rat(Int(1), pow_int(24, t)));
        }
        case GCompKind::ge2: {
            if (t == 0) return RingElem();  // the even product series starts at t=1
            RingElem s2 = inner_sum_S(2, t);
            return s2.scaled(make_rat(Int(-parity_sign(t)), pow_int(24, t)));
        }
        case GCompKind::go1: {
            if (t == 0) {
                return RingElem::term(-1, 1, make_rat(-1, 2));
            }
            if (t == 1) {
                // -(432+pi^2)/(2304 sqrt6 pi)
                RingElem r = RingElem::term(-1, 1, make_rat(-1, 32));
                r.add_term(1, 1, make_rat(-1, 13824));
                return r;
            }
            RingElem s3 = inner_sum_S(3, t);
            s3 += RingElem(binom_m32(t));
            return s3.scaled(make_rat(Int(-parity_sign(t)), 2 * pow_int(24, t)))
                .shifted(-1, 1);
        }
        case GCompKind::go2: {
            RingElem s4 = inner_sum_S(4, t);
            return s4.scaled(make_rat(Int(-1), 72 * pow_int(24, t))).shifted(1, 1);
        }
    }
    throw DomainError("g_component: bad kind");
}

RingElem g_coefficient(long t) {
    if (t < 0) throw DomainError("g_coefficient: t must be >= 0");
    if (t % 2 == 0) {
        return g_component(GCompKind::ge1, t / 2) + g_component(GCompKind::ge2, t / 2);
    }
    return g_component(GCompKind::go1, t / 2) + g_component(GCompKind::go2, t / 2);
}

RingElem omega(long t) {
    if (t < 0) throw DomainError("omega: t must be >= 0");
    // sum_{k=0}^{floor((t+1)/2)} C(t+1,k) (t+1-k)/(t+1-2k)! (pi/6)^(t-2k),
    // scaled by 1/(-4 sqrt6)^t
    RingElem sum;
    for (long k = 0; 2 * k <= t + 1; ++k) {
        Int binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(t + 1),
                     static_cast<unsigned long>(k));
        BigRational c = BigRational(binom) * BigRational(t + 1 - k) /
                        BigRational(factorial(static_cast<unsigned long>(t + 1 - 2 * k)));
        long pexp = t - 2 * k;
        // fold the 6^(t-2k) from (pi/6)^(t-2k) into the rational
        if (pexp >= 0) {
            c /= BigRational(pow_int(6, pexp));
        } else {
            c *= BigRational(pow_int(6, -pexp));
        }
        sum.add_term(pexp, 0, c);
    }
    BigRational scale = make_rat(Int(parity_sign(t)), pow_int(4, t) * pow_int(6, t / 2));
    RingElem r = sum.scaled(scale);
    if (t % 2 != 0) {
        // 1/sqrt6 = sqrt6/6
        r = r.shifted(0, 1).scaled(make_rat(1, 6));
    }
    return r;
}

std::pair<BigRational, BigRational> pp1_identity_sides(long k, long j) {
    if (k < 0 || j < 0) throw DomainError("pp1: k, j must be >= 0");
    BigRational lhs(0);
    for (long i = 0; i <= k; ++i) {
        Int binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k),
                     static_cast<unsigned long>(i));
        lhs += make_rat(parity_sign(i), 1) * BigRational(binom) *
               binom_general(HalfInt(i), j);
    }
    BigRational rhs;
    if (j == 0 && k == 0) {
        rhs = 1;
    } else if (j == 0) {
        // the printed right side carries a k/j factor; at j=0, k>=1 the
        // left side is the plain alternating binomial sum, which vanishes
        rhs = 0;
    } else {
        BigRational pow2 = (k - 2 * j >= 0)
                               ? BigRational(pow_int(2, k - 2 * j))
                               : make_rat(Int(1), pow_int(2, 2 * j - k));
        rhs = make_rat(parity_sign(j), 1) * pow2 * make_rat(k, j) *
              binom_general(BigRational(2 * j - k - 1), j - k);
    }
    return {lhs, rhs};
}

} // namespace pcert
