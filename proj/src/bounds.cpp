#include "pcert/bounds.hpp"

#include <algorithm>

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

RealBall alpha_ball(long prec) { return b_div_ui(b_pi(prec), 6, prec); }

Int rat_ceil(const BigRational& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

} // namespace

RealBall mu(long n, long prec) {
    if (n < 1) throw DomainError("mu needs n >= 1");
    long workp = prec + 8;
    RealBall root = b_sqrt(b_exact_int(Int(24) * n - 1), workp);
    return b_round(b_mul(alpha_ball(workp), root, workp), prec);
}

std::pair<RealBall, RealBall> nu_and_ghat(long k, long prec) {
    if (k < 2) throw DomainError("nu/ghat need k >= 2 (log log k)");
    long workp = prec + 16;
    RealBall log6 = b_log(b_exact_int(6), workp);
    RealBall log2 = b_log(b_exact_int(2), workp);
    RealBall logk = b_log(b_exact_int(Int(k)), workp);
    RealBall loglogk = b_log(logk, workp);
    RealBall nu = b_mul_2exp(log6, 1);
    nu = b_add(nu, b_mul_rat(log2, BigRational(2 * k), workp), workp);
    nu = b_add(nu, b_mul_rat(logk, BigRational(2 * k), workp), workp);
    nu = b_add(nu, b_mul_rat(loglogk, BigRational(2 * k), workp), workp);
    RealBall last = b_mul_rat(b_div(loglogk, logk, workp), BigRational(5 * k), workp);
    nu = b_add(nu, last, workp);
    RealBall pisq = b_mul(b_pi(workp), b_pi(workp), workp);
    RealBall ghat = b_div(b_mul_rat(b_mul(nu, nu, workp), BigRational(36), workp),
                          pisq, workp);
    ghat = b_add(ghat, b_one(), workp);
    ghat = b_div_ui(ghat, 24, workp);
    return {b_round(nu, prec), b_round(ghat, prec)};
}

RealBall bound_constant(BoundConstant which, long k, long prec) {
    if (k < 1) throw DomainError("bound constants need k >= 1");
    long workp = prec + 16;
    RealBall al = alpha_ball(workp);
    RealBall ch = b_cosh(al, workp);
    RealBall sh = b_sinh(al, workp);
    RealBall ash = b_mul(al, sh, workp);
    RealBall sq = b_sqrt(b_exact_int(Int(k) + 1), workp);           // sqrt(k+1)
    RealBall isq = b_div(b_one(), sq, workp);                       // (k+1)^-1/2
    RealBall i32 = b_div(isq, b_exact_int(Int(k) + 1), workp);      // (k+1)^-3/2
    BigRational even_scale = make_rat(Int(1), pow_int(24, k));      // (1/sqrt24)^2k
    RealBall core;
    bool odd_scale = false;
    switch (which) {
        case BoundConstant::L1:
            core = b_sub(ch, b_mul_rat(b_mul(ash, isq, workp), make_rat(6, 5), workp), workp);
            core = b_sub(core, b_mul_rat(i32, make_rat(3, 10), workp), workp);
            break;
        case BoundConstant::U1:
            core = b_mul_rat(ch, make_rat(24, 23), workp);
            core = b_sub(core, b_mul_rat(b_mul(ash, isq, workp), make_rat(1, 2), workp), workp);
            core = b_add(core, b_mul_rat(i32, make_rat(5, 4), workp), workp);
            break;
        case BoundConstant::L2:
            core = b_neg(b_mul_rat(ch, make_rat(24, 23), workp));
            core = b_sub(core, b_mul_rat(isq, make_rat(12, 5), workp), workp);
            break;
        case BoundConstant::U2: {
            RealBall sha = b_div(sh, al, workp);
            RealBall t = b_mul(b_mul_rat(sha, BigRational(4), workp),
                               b_sqrt_ui(2, workp), workp);
            core = b_add(b_neg(ch), b_mul(t, sq, workp), workp);
            core = b_add(core, b_mul_rat(isq, make_rat(66, 25), workp), workp);
            break;
        }
        case BoundConstant::L3:
            core = b_mul_rat(ash, make_rat(19, 10), workp);
            core = b_sub(core, b_mul_rat(b_mul(ch, sq, workp), make_rat(109, 10), workp),
                         workp);
            core = b_sub(core, b_mul_rat(isq, make_rat(23, 10), workp), workp);
            odd_scale = true;
            break;
        case BoundConstant::U3:
            core = b_mul_2exp(ash, 1);
            core = b_add(core, b_mul_rat(isq, make_rat(33, 10), workp), workp);
            odd_scale = true;
            break;
        case BoundConstant::L4:
            core = b_mul_rat(b_mul(ch, isq, workp), make_rat(1, 4), workp);
            core = b_sub(core, b_mul_rat(ash, make_rat(11, 20), workp), workp);
            core = b_sub(core, b_mul_rat(i32, make_rat(41, 50), workp), workp);
            odd_scale = true;
            break;
        case BoundConstant::U4:
            core = b_mul_rat(b_mul(ch, isq, workp), make_rat(63, 100), workp);
            core = b_sub(core, b_mul_rat(ash, make_rat(13, 25), workp), workp);
            core = b_add(core, b_mul_rat(i32, make_rat(21, 50), workp), workp);
            odd_scale = true;
            break;
    }
    core = b_mul_rat(core, even_scale, workp);
    if (odd_scale) core = b_div(core, b_sqrt_ui(24, workp), workp);
    return b_round(core, prec);
}

RealBall bound_constant_l4_corrected(long k, long prec) {
    if (k < 1) throw DomainError("bound constants need k >= 1");
    long workp = prec + 16;
    RealBall al = alpha_ball(workp);
    RealBall ch = b_cosh(al, workp);
    RealBall sh = b_sinh(al, workp);
    RealBall sq = b_sqrt(b_exact_int(Int(k) + 1), workp);
    RealBall isq = b_div(b_one(), sq, workp);
    RealBall i32 = b_div(isq, b_exact_int(Int(k) + 1), workp);
    RealBall core = b_mul_rat(b_mul(ch, isq, workp), make_rat(1, 4), workp);
    core = b_sub(core, b_mul_rat(sh, make_rat(24, 23), workp), workp);
    core = b_sub(core, b_mul_rat(i32, make_rat(41, 50), workp), workp);
    core = b_mul_rat(core, make_rat(Int(1), pow_int(24, k)), workp);
    core = b_div(core, b_sqrt_ui(24, workp), workp);
    return b_round(core, prec);
}

std::pair<RealBall, RealBall> lhat2_uhat2(long k, long n, long prec) {
    if (k < 1 || n < 1) throw DomainError("lhat2/uhat2 need k, n >= 1");
    long workp = prec + 16;
    // (alpha sqrt24)^-k
    RealBall base = b_mul(alpha_ball(workp), b_sqrt_ui(24, workp), workp);
    base = b_pow_int(base, -k, workp);
    RealBall quarter_inv_sqrt =
        b_div(b_one(), b_mul_2exp(b_sqrt(b_exact_int(Int(n)), workp), 2), workp);
    RealBall lo = b_mul(base, b_sub(b_one(), quarter_inv_sqrt, workp), workp);
    RealBall hi = b_mul_rat(base, BigRational(1) + make_rat(k, 3 * n), workp);
    return {b_round(lo, prec), b_round(hi, prec)};
}

std::pair<RealBall, RealBall> final_LU(long w, long prec) {
    if (w < 1) throw DomainError("final_LU needs w >= 1");
    long workp = prec + 16;
    long gamma0 = (w % 2 == 0) ? 23 : 15;
    long gamma1 = (w % 2 == 0) ? 24 : 17;
    long half_up = (w + 1) / 2;  // ceil(w/2)
    RealBall root = b_sqrt(b_exact_int(Int(half_up) + 1), workp);
    // sqrt24^w = 24^(w/2) (even) or 24^((w-1)/2) sqrt24 (odd)
    RealBall scale = b_mul_rat(root, make_rat(Int(1), pow_int(24, w / 2)), workp);
    if (w % 2 != 0) scale = b_div(scale, b_sqrt_ui(24, workp), workp);
    RealBall L = b_neg(b_mul_rat(scale, BigRational(gamma0), workp));
    RealBall U = b_mul_rat(scale, BigRational(gamma1), workp);
    return {b_round(L, prec), b_round(U, prec)};
}

RealBall prefactor(long n, long prec) {
    if (n < 1) throw DomainError("prefactor needs n >= 1");
    long workp = prec + 16;
    RealBall arg = b_mul(b_pi(workp), b_sqrt(b_from_rat(make_rat(2 * n, 3), workp), workp),
                         workp);
    RealBall num = b_exp(arg, workp);
    RealBall den = b_mul_rat(b_sqrt_ui(3, workp), BigRational(4 * n), workp);
    return b_round(b_div(num, den, workp), prec);
}

long ghat_ceiling(long w, long start_prec, long max_prec) {
    if (w < 1) throw DomainError("ghat_ceiling needs w >= 1");
    if (w == 1) return 1;  // no defined threshold at order 1; sweep floor
    long p = start_prec;
    while (true) {
        RealBall gh = nu_and_ghat(w, p).second;
        Int lo = rat_ceil(gh.inf().to_rat());
        Int hi = rat_ceil(gh.sup().to_rat());
        if (lo == hi) return hi.get_si();
        if (p >= max_prec) return hi.get_si();  // conservative
        p = std::min(2 * p, max_prec);
    }
}

long suggested_prec(long n, long w) {
    long bits = static_cast<long>(mpz_sizeinbase(Int(n).get_mpz_t(), 2));
    return 64 + 4 * w + bits;
}

BoundsContext::BoundsContext(long count, long p) : prec(p) {
    g_ball.reserve(static_cast<size_t>(count));
    for (long t = 0; t < count; ++t) {
        g_ball.push_back(ring_to_ball(g_coefficient(t), p));
    }
}

BoundPair main_bounds_ctx(long n, long w, const BoundsContext& ctx,
                          const RealBall& pref, long prec) {
    if (n < 1 || w < 1) throw DomainError("main_bounds needs n, w >= 1");
    if (static_cast<long>(ctx.g_ball.size()) < w) {
        throw RangeError("bounds context too small for order w");
    }
    long workp = prec + 16;
    RealBall inv_sqrt_n = b_div(b_one(), b_sqrt(b_exact_int(Int(n)), workp), workp);
    // Horner over t = w-1 .. 0 of sum g(t) x^t
    RealBall series = b_zero();
    for (long t = w - 1; t >= 0; --t) {
        series = b_add(ctx.g_ball[static_cast<size_t>(t)],
                       b_mul(series, inv_sqrt_n, workp), workp);
    }
    auto [L, U] = final_LU(w, workp);
    RealBall xw = b_pow_int(inv_sqrt_n, w, workp);
    BoundPair bp;
    bp.n = n;
    bp.order_w = w;
    bp.precision_bits = prec;
    bp.lower = b_round(b_mul(pref, b_add(series, b_mul(L, xw, workp), workp), workp), prec);
    bp.upper = b_round(b_mul(pref, b_add(series, b_mul(U, xw, workp), workp), workp), prec);
    if (w == 1) {
        bp.threshold_ok = n > 1;
    } else {
        RealBall gh = nu_and_ghat(w, workp).second;
        bp.threshold_ok = certify_lt(gh, b_exact_int(Int(n))) == Tri::True;
    }
    return bp;
}

BoundPair main_bounds(long n, long w, long prec) {
    BoundsContext ctx(w, prec + 16);
    RealBall pref = prefactor(n, prec + 16);
    return main_bounds_ctx(n, w, ctx, pref, prec);
}

BoundPair corollary4_bounds(long n, long prec) {
    if (n < 1) throw DomainError("corollary4_bounds needs n >= 1");
    long workp = prec + 16;
    BoundsContext ctx(4, workp);
    RealBall pref = prefactor(n, workp);
    RealBall inv_sqrt_n = b_div(b_one(), b_sqrt(b_exact_int(Int(n)), workp), workp);
    RealBall series = b_zero();
    for (long t = 3; t >= 0; --t) {
        series = b_add(ctx.g_ball[static_cast<size_t>(t)],
                       b_mul(series, inv_sqrt_n, workp), workp);
    }
    BigRational nsq(Int(n) * Int(n));
    BoundPair bp;
    bp.n = n;
    bp.order_w = 4;
    bp.precision_bits = prec;
    bp.threshold_ok = n >= 116;
    bp.lower = b_round(
        b_mul(pref, b_sub(series, b_from_rat(1 / (14 * nsq), workp), workp), workp), prec);
    bp.upper = b_round(
        b_mul(pref, b_add(series, b_from_rat(1 / (13 * nsq), workp), workp), workp), prec);
    return bp;
}

BoundPair bprz_bounds(long n, long k, long prec) {
    if (k < 2) throw DomainError("bprz_bounds needs k >= 2");
    if (n < 1) throw DomainError("bprz_bounds needs n >= 1");
    long workp = prec + 16;
    RealBall m = mu(n, workp);
    RealBall base = b_div(b_mul(b_sqrt_ui(12, workp), b_exp(m, workp), workp),
                          b_exact_int(Int(24) * n - 1), workp);
    RealBall one_minus = b_sub(b_one(), b_div(b_one(), m, workp), workp);
    RealBall tail = b_pow_int(m, -k, workp);
    BoundPair bp;
    bp.n = n;
    bp.order_w = k;
    bp.precision_bits = prec;
    bp.lower = b_round(b_mul(base, b_sub(one_minus, tail, workp), workp), prec);
    bp.upper = b_round(b_mul(base, b_add(one_minus, tail, workp), workp), prec);
    if (n == 6 && k == 2) {
        bp.threshold_ok = false;  // excluded pair
    } else {
        RealBall gh = nu_and_ghat(k, workp).second;
        bp.threshold_ok = certify_lt(gh, b_exact_int(Int(n))) == Tri::True;
    }
    return bp;
}

BoundPair cjw_bounds(long n, long prec) {
    if (n < 1) throw DomainError("cjw_bounds needs n >= 1");
    long workp = prec + 16;
    RealBall m = mu(n, workp);
    RealBall base = b_div(b_mul(b_sqrt_ui(12, workp), b_exp(m, workp), workp),
                          b_exact_int(Int(24) * n - 1), workp);
    RealBall one_minus = b_sub(b_one(), b_div(b_one(), m, workp), workp);
    RealBall tail = b_pow_int(m, -10, workp);
    BoundPair bp;
    bp.n = n;
    bp.order_w = 10;
    bp.precision_bits = prec;
    bp.threshold_ok = n >= 1207;
    bp.lower = b_round(b_mul(base, b_sub(one_minus, tail, workp), workp), prec);
    bp.upper = b_round(b_mul(base, b_add(one_minus, tail, workp), workp), prec);
    return bp;
}

Verdict classify(const BoundPair& bp, const Int& p_exact) {
    RealBall p = b_exact_int(p_exact);
    Tri lo = certify_lt(bp.lower, p);
    Tri hi = certify_lt(p, bp.upper);
    if (lo == Tri::True && hi == Tri::True) return Verdict::Inside;
    if (lo == Tri::False || hi == Tri::False) return Verdict::Violation;
    return Verdict::Undecided;
}

} // namespace pcert
