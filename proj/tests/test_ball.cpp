#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "pcert/ball.hpp"
#include "pcert/errors.hpp"

#ifdef HAVE_MPFR
#include <mpfr.h>
#endif

using namespace pcert;

namespace {

BigRational rand_rat(std::mt19937_64& rng, long num_range, long den_range) {
    std::uniform_int_distribution<long> dn(-num_range, num_range);
    std::uniform_int_distribution<long> dd(1, den_range);
    return make_rat(dn(rng), dd(rng));
}

#ifdef HAVE_MPFR
// interval around the true value of fn at rational q, from a 256-bit
// independent evaluation with directed rounding
struct MpfrEnclosure {
    BigRational lo, hi;
};

BigRational mpfr_to_rat(mpfr_t x) {
    mpz_t man;
    mpz_init(man);
    mpfr_exp_t e = mpfr_get_z_2exp(man, x);
    BigRational r{Int(mpz_class(man))};
    mpz_clear(man);
    if (e >= 0) {
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
    } else {
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e));
    }
    return r;
}

template <typename F>
MpfrEnclosure mpfr_eval(const BigRational& q, F fn) {
    MpfrEnclosure out;
    mpfr_t x, lo, hi;
    mpfr_init2(x, 320);
    mpfr_init2(lo, 256);
    mpfr_init2(hi, 256);
    mpfr_set_q(x, q.get_mpq_t(), MPFR_RNDN);
    fn(lo, x, MPFR_RNDD);
    fn(hi, x, MPFR_RNDU);
    out.lo = mpfr_to_rat(lo);
    out.hi = mpfr_to_rat(hi);
    mpfr_clears(x, lo, hi, static_cast<mpfr_ptr>(nullptr));
    return out;
}

// the ball must contain the whole oracle interval (which brackets the truth)
bool ball_covers(const RealBall& b, const MpfrEnclosure& e) {
    return b.inf().to_rat() <= e.lo && e.hi <= b.sup().to_rat();
}
#endif

} // namespace

TEST_CASE("exact identity cases") {
    RealBall z = b_zero();
    RealBall c = b_cosh(z, 64);
    CHECK(c.mid.to_rat() == 1);
    CHECK(c.rad.is_zero());
    RealBall s = b_sinh(z, 64);
    CHECK(s.mid.is_zero());
    CHECK(s.rad.is_zero());

    RealBall four = b_exact_int(4);
    RealBall r = b_sqrt(four, 64);
    CHECK(contains(r, BigRational(2)));
    CHECK(r.rad.is_zero());
}

TEST_CASE("pi enclosure") {
    RealBall pi64 = b_pi(64);
    // containment check vs a 256-bit evaluation, plus the 14-digit bracket
    CHECK(contains_ball(pi64, b_pi(256)));
    CHECK(certify_lt(b_from_rat(make_rat(Int("314159265358979"), Int("100000000000000")), 64),
                     pi64) == Tri::True);
    CHECK(certify_lt(pi64, b_from_rat(make_rat(Int("314159265358980"), Int("100000000000000")),
                                      64)) == Tri::True);
    // spec'd radius bound: rad <= 2^(2-prec) * mid
    Dyadic bound = pi64.mid.mul_2exp(2 - 64);
    CHECK(dy_le(pi64.rad, bound));
    // nested enclosures across precision
    RealBall pi8 = b_pi(8);
    CHECK(contains(pi8, pi64.mid.to_rat()));
    CHECK(contains_ball(pi8, pi64));
    // pi > 3 at any precision
    CHECK(certify_lt(pi8, b_exact_int(3)) == Tri::False);
    // pi < 22/7 decidable at 16 bits
    CHECK(certify_lt(b_pi(16), b_from_rat(make_rat(22, 7), 64)) == Tri::True);
}

TEST_CASE("certify_lt on disjoint and overlapping intervals") {
    RealBall a(Dyadic(Int(3), -1), Dyadic(Int(1), -1));  // [1,2]
    RealBall b(Dyadic(Int(7), -1), Dyadic(Int(1), -1));  // [3,4]
    CHECK(certify_lt(a, b) == Tri::True);
    CHECK(certify_lt(b, a) == Tri::False);
    RealBall c(Dyadic(2), Dyadic(1));  // [1,3]
    RealBall d(Dyadic(3), Dyadic(1));  // [2,4]
    CHECK(certify_lt(c, d) == Tri::Undecided);
}

TEST_CASE("division and domain errors") {
    RealBall one = b_one();
    RealBall three = b_exact_int(3);
    RealBall third = b_div(one, three, 64);
    CHECK(contains(third, make_rat(1, 3)));
    RealBall spans_zero(Dyadic(0), Dyadic(1));
    CHECK_THROWS_AS(b_div(one, spans_zero, 64), DomainStraddle);
    RealBall neg = b_exact_int(-2);
    CHECK_THROWS_AS(b_sqrt(neg, 64), DomainStraddle);
    CHECK_THROWS_AS(b_log(spans_zero, 64), DomainStraddle);
    CHECK_THROWS_AS(b_from_rat(make_rat(1, 3), 1), DomainError);
}

TEST_CASE("precision cap") {
    long old = precision_cap();
    set_precision_cap(128);
    CHECK_THROWS_AS(b_pi(256), PrecisionOverflow);
    set_precision_cap(old);
}

#ifdef HAVE_MPFR
TEST_CASE("transcendental ops against an independent 256-bit oracle") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
        BigRational q = rand_rat(rng, 40, 20);
        RealBall x = b_from_rat(q, 96);
        CHECK(ball_covers(b_exp(x, 96), mpfr_eval(q, [](mpfr_t r, mpfr_t a, mpfr_rnd_t m) {
                              mpfr_exp(r, a, m);
                          })));
        CHECK(ball_covers(b_cosh(x, 96), mpfr_eval(q, [](mpfr_t r, mpfr_t a, mpfr_rnd_t m) {
                              mpfr_cosh(r, a, m);
                          })));
        CHECK(ball_covers(b_sinh(x, 96), mpfr_eval(q, [](mpfr_t r, mpfr_t a, mpfr_rnd_t m) {
                              mpfr_sinh(r, a, m);
                          })));
        if (q > 0) {
            CHECK(ball_covers(b_log(x, 96), mpfr_eval(q, [](mpfr_t r, mpfr_t a, mpfr_rnd_t m) {
                                  mpfr_log(r, a, m);
                              })));
            CHECK(ball_covers(b_sqrt(x, 96), mpfr_eval(q, [](mpfr_t r, mpfr_t a, mpfr_rnd_t m) {
                                  mpfr_sqrt(r, a, m);
                              })));
        }
    }
}

TEST_CASE("exp of pi cross-checked at higher precision") {
    RealBall e64 = b_exp(b_pi(64), 64);
    RealBall e256 = b_exp(b_pi(256), 256);
    CHECK(contains_ball(e64, e256));
    CHECK(contains(e64, make_rat(Int("231406926327792690"), Int("10000000000000000"))));
}
#endif

TEST_CASE("soundness of field ops on random rationals") {
    std::mt19937_64 rng(4242);
    for (int i = 0; i < 1000; ++i) {
        BigRational a = rand_rat(rng, 1000, 50);
        BigRational b = rand_rat(rng, 1000, 50);
        RealBall xa = b_from_rat(a, 48);
        RealBall xb = b_from_rat(b, 48);
        CHECK(contains(b_add(xa, xb, 48), a + b));
        CHECK(contains(b_sub(xa, xb, 48), a - b));
        CHECK(contains(b_mul(xa, xb, 48), a * b));
        if (b != 0 && !contains_zero(xb)) {
            CHECK(contains(b_div(xa, xb, 48), a / b));
        }
        CHECK(contains(b_pow_int(xa, 3, 48), a * a * a));
    }
}

TEST_CASE("containment monotonicity for nested inputs") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        BigRational q = rand_rat(rng, 30, 9);
        RealBall tight = b_from_rat(q, 128);
        RealBall loose = tight;
        loose.rad = dy_add(loose.rad, Dyadic(Int(1), -20));
        RealBall et = b_exp(tight, 80);
        RealBall el = b_exp(loose, 80);
        CHECK(contains_ball(el, et));
        RealBall mt = b_mul(tight, tight, 80);
        RealBall ml = b_mul(loose, loose, 80);
        CHECK(contains_ball(ml, mt));
    }
}

TEST_CASE("antisymmetry and stability under precision doubling") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 500; ++i) {
        BigRational a = rand_rat(rng, 60, 12);
        BigRational b = rand_rat(rng, 60, 12);
        for (long prec : {16L, 32L, 64L, 128L}) {
            RealBall xa = b_exp(b_from_rat(a, prec), prec);
            RealBall xb = b_exp(b_from_rat(b, prec), prec);
            Tri t = certify_lt(xa, xb);
            if (t == Tri::True) CHECK(certify_lt(xb, xa) == Tri::False);
            if (t != Tri::Undecided) {
                // doubling precision never flips a decided comparison
                RealBall ya = b_exp(b_from_rat(a, 2 * prec), 2 * prec);
                RealBall yb = b_exp(b_from_rat(b, 2 * prec), 2 * prec);
                Tri t2 = certify_lt(ya, yb);
                if (t2 != Tri::Undecided) CHECK(t2 == t);
            }
        }
    }
}

TEST_CASE("adaptive_decide") {
    // pi vs 3.2 decided quickly
    Decision d = adaptive_decide([](long p) { return b_pi(p); },
                                 [](long p) { return b_from_rat(make_rat(16, 5), p); },
                                 8, 4096);
    CHECK(d.tri == Tri::True);
    CHECK(d.bits_used <= 16);
    // identical expressions can never be separated
    Decision same = adaptive_decide([](long p) { return b_pi(p); },
                                    [](long p) { return b_pi(p); }, 8, 64);
    CHECK(same.tri == Tri::Undecided);
    CHECK(same.bits_used == 64);
    CHECK_THROWS_AS(adaptive_decide([](long p) { return b_pi(p); },
                                    [](long p) { return b_pi(p); }, 64, 8),
                    DomainError);
}

TEST_CASE("big exponent arguments stay sound") {
    // exp at the scale the partition prefactor needs (~e^181)
    RealBall x = b_from_rat(make_rat(181285, 1000), 128);
    RealBall e = b_exp(x, 128);
    CHECK(e.inf().sign() > 0);
    // log inverts within enclosure
    RealBall back = b_log(e, 128);
    CHECK(contains_ball(RealBall(back.mid, dy_add(back.rad, Dyadic(Int(1), -100))), x));
}
