#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pcert/bounds.hpp"
#include "pcert/errors.hpp"

using namespace pcert;

namespace {

bool in_range(const RealBall& b, const BigRational& lo, const BigRational& hi, long prec = 64) {
    return certify_lt(b_from_rat(lo, prec), b) == Tri::True &&
           certify_lt(b, b_from_rat(hi, prec)) == Tri::True;
}

} // namespace

TEST_CASE("mu basics and monotonicity") {
    RealBall m1 = mu(1, 128);
    // pi sqrt(23)/6 is about 2.511355
    CHECK(in_range(m1, make_rat(2511, 1000), make_rat(2512, 1000)));
    CHECK_THROWS_AS(mu(0, 64), DomainError);
    RealBall prev = mu(1, 64);
    for (long n = 2; n <= 1000; ++n) {
        RealBall cur = mu(n, 64);
        CHECK(dy_lt(prev.sup(), cur.inf()));
        prev = cur;
    }
}

TEST_CASE("nu and ghat") {
    CHECK_THROWS_AS(nu_and_ghat(1, 64), DomainError);
    auto [nu2, gh2] = nu_and_ghat(2, 128);
    CHECK(in_range(gh2, make_rat(88, 100), make_rat(92, 100)));
    auto [nu8, gh8] = nu_and_ghat(8, 128);
    CHECK(in_range(gh8, BigRational(700), BigRational(1000)));
    (void)nu2;
    (void)nu8;
}

TEST_CASE("ghat ceiling") {
    CHECK(ghat_ceiling(1, 64, 512) == 1);
    CHECK(ghat_ceiling(2, 64, 512) == 1);
    CHECK(ghat_ceiling(4, 64, 512) == 116);  // the corollary threshold
    for (long w = 2; w <= 8; ++w) {
        long c = ghat_ceiling(w, 64, 512);
        RealBall gh = nu_and_ghat(w, 256).second;
        // c-1 < ghat <= c certified
        CHECK(certify_lt(b_exact_int(Int(c - 1)), gh) == Tri::True);
        CHECK(certify_lt(gh, b_exact_int(Int(c) + 1)) == Tri::True);
    }
}

TEST_CASE("tail constants: signs and combinations") {
    CHECK(certify_sign(bound_constant(BoundConstant::L1, 1, 96)) == 1);
    for (long k = 1; k <= 100; ++k) {
        RealBall l34 = b_add(bound_constant(BoundConstant::L3, k, 96),
                             bound_constant(BoundConstant::L4, k, 96), 96);
        CHECK(certify_sign(l34) == -1);
        RealBall u12 = b_add(bound_constant(BoundConstant::U1, k, 96),
                             bound_constant(BoundConstant::U2, k, 96), 96);
        CHECK(certify_sign(u12) == 1);
        RealBall l12 = b_add(bound_constant(BoundConstant::L1, k, 96),
                             bound_constant(BoundConstant::L2, k, 96), 96);
        CHECK(certify_sign(l12) == -1);
        RealBall u34 = b_add(bound_constant(BoundConstant::U3, k, 96),
                             bound_constant(BoundConstant::U4, k, 96), 96);
        CHECK(certify_sign(u34) == 1);
    }
    CHECK_THROWS_AS(bound_constant(BoundConstant::L1, 0, 64), DomainError);
}

TEST_CASE("lhat2 and uhat2") {
    auto [l1, u1] = lhat2_uhat2(2, 100, 96);
    CHECK(certify_sign(l1) == 1);
    CHECK(certify_sign(u1) == 1);
    // Uhat2 decreasing in n at fixed k
    auto u10 = lhat2_uhat2(1, 10, 96).second;
    auto u100 = lhat2_uhat2(1, 100, 96).second;
    auto u1000 = lhat2_uhat2(1, 1000, 96).second;
    CHECK(certify_lt(u100, u10) == Tri::True);
    CHECK(certify_lt(u1000, u100) == Tri::True);
    // Lhat2 < Uhat2 across a small grid
    for (long k = 1; k <= 12; ++k) {
        for (long n : {1L, 2L, 10L, 116L, 1000L}) {
            auto [lo, hi] = lhat2_uhat2(k, n, 96);
            CHECK(certify_lt(lo, hi) == Tri::True);
        }
    }
}

TEST_CASE("final truncation constants") {
    auto [L4, U4] = final_LU(4, 128);
    // L(4) = -23 sqrt3/576, U(4) = 24 sqrt3/576: check via squares and signs
    CHECK(certify_sign(L4) == -1);
    CHECK(certify_sign(U4) == 1);
    RealBall l_sq = b_mul(L4, L4, 128);
    CHECK(contains(b_mul_rat(l_sq, make_rat(Int(576) * 576, Int(23) * 23), 128),
                   BigRational(3)));
    RealBall u_sq = b_mul(U4, U4, 128);
    CHECK(contains(b_mul_rat(u_sq, make_rat(Int(576) * 576, Int(24) * 24), 128),
                   BigRational(3)));
    // odd case: gamma pair (15,17), so U(3)/L(3) = -17/15 exactly
    auto [L3, U3] = final_LU(3, 128);
    CHECK(contains(b_div(U3, L3, 128), make_rat(-17, 15)));
    // the corollary reduction facts
    CHECK(certify_lt(b_from_rat(make_rat(-1, 14), 96), L4) == Tri::True);
    CHECK(certify_lt(U4, b_from_rat(make_rat(1, 13), 96)) == Tri::True);
    // U(4) < 1/13 decidable by 64 bits with the adaptive driver
    Decision d = adaptive_decide(
        [](long p) { return final_LU(4, p).second; },
        [](long p) { return b_from_rat(make_rat(1, 13), p); }, 8, 64);
    CHECK(d.tri == Tri::True);
    CHECK(d.bits_used <= 64);
}

TEST_CASE("main theorem sandwich at sample points") {
    PartitionTable table = p_pentagonal_table(2100);
    // n=116, w=4
    BoundPair bp = main_bounds(116, 4, 128);
    CHECK(bp.threshold_ok);
    CHECK(classify(bp, table.at(116)) == Verdict::Inside);
    // w=1 at n=100
    BoundPair b1 = main_bounds(100, 1, 96);
    CHECK(b1.threshold_ok);
    CHECK(classify(b1, Int("190569292")) == Verdict::Inside);
    // n=6, w=2: above ghat(2), bracket holds empirically
    BoundPair b6 = main_bounds(6, 2, 96);
    CHECK(b6.threshold_ok);
    CHECK(classify(b6, table.at(6)) == Verdict::Inside);
    // n=2, w=8: below ghat(8), evaluation still works, no guarantee;
    // the observed verdict there is a certified violation, which is why
    // the theorem carries the threshold
    BoundPair b2 = main_bounds(2, 8, 96);
    CHECK_FALSE(b2.threshold_ok);
    CHECK(classify(b2, table.at(2)) == Verdict::Violation);
    // context route gives identical verdicts
    BoundsContext ctx(4, 144);
    RealBall pref = prefactor(116, 144);
    BoundPair via_ctx = main_bounds_ctx(116, 4, ctx, pref, 128);
    CHECK(classify(via_ctx, table.at(116)) == Verdict::Inside);
    CHECK(via_ctx.threshold_ok);
}

TEST_CASE("corollary bounds") {
    PartitionTable table = p_pentagonal_table(5000);
    BoundPair c116 = corollary4_bounds(116, 128);
    CHECK(c116.threshold_ok);
    CHECK(classify(c116, table.at(116)) == Verdict::Inside);
    BoundPair c5000 = corollary4_bounds(5000, 160);
    CHECK(classify(c5000, table.at(5000)) == Verdict::Inside);
    CHECK_FALSE(corollary4_bounds(100, 96).threshold_ok);
    // relative bracket width shrinks with n
    auto rel_width = [&](long n) -> double {
        BoundPair bp = corollary4_bounds(n, 128);
        RealBall w = b_sub(bp.upper, bp.lower, 128);
        RealBall r = b_div(w, bp.lower, 128);
        return r.mid.to_double();
    };
    CHECK(rel_width(800) < rel_width(200) / 10.0);
}

TEST_CASE("bprz bounds") {
    PartitionTable table = p_pentagonal_table(2000);
    CHECK_THROWS_AS(bprz_bounds(50, 1, 96), DomainError);
    BoundPair b = bprz_bounds(50, 3, 128);
    CHECK(b.threshold_ok);
    CHECK(classify(b, table.at(50)) == Verdict::Inside);
    BoundPair b10 = bprz_bounds(2000, 10, 160);
    CHECK(b10.threshold_ok);
    CHECK(classify(b10, table.at(2000)) == Verdict::Inside);
    // the excluded pair: no guarantee, and the upper bound indeed fails
    BoundPair b62 = bprz_bounds(6, 2, 128);
    CHECK_FALSE(b62.threshold_ok);
    CHECK(classify(b62, table.at(6)) == Verdict::Violation);
}

TEST_CASE("cjw bounds") {
    PartitionTable table = p_pentagonal_table(5000);
    BoundPair a = cjw_bounds(1207, 160);
    CHECK(a.threshold_ok);
    CHECK(classify(a, table.at(1207)) == Verdict::Inside);
    BoundPair b = cjw_bounds(5000, 160);
    CHECK(classify(b, table.at(5000)) == Verdict::Inside);
    // below the n >= 1207 threshold: reported without guarantee, and the
    // tight mu^-10 window indeed misses p(100)
    BoundPair c = cjw_bounds(100, 128);
    CHECK_FALSE(c.threshold_ok);
    CHECK(classify(c, table.at(100)) == Verdict::Violation);
}

TEST_CASE("order nesting of bracket widths") {
    // higher truncation order gives a tighter bracket for large n
    for (long n : {200L, 1000L}) {
        long prec = suggested_prec(n, 8) + 64;
        BoundsContext ctx(8, prec);
        RealBall pref = prefactor(n, prec);
        RealBall prev_width;
        bool first = true;
        for (long w : {2L, 4L, 6L}) {
            BoundPair bp = main_bounds_ctx(n, w, ctx, pref, prec);
            RealBall width = b_sub(bp.upper, bp.lower, prec);
            if (!first) CHECK(certify_lt(width, prev_width) == Tri::True);
            prev_width = width;
            first = false;
        }
    }
}

TEST_CASE("threshold monotone in n") {
    for (long w : {2L, 3L, 5L}) {
        bool seen_ok = false;
        for (long n : {1L, 10L, 50L, 200L, 500L, 1000L}) {
            BoundPair bp = main_bounds(n, w, 96);
            if (seen_ok) CHECK(bp.threshold_ok);
            if (bp.threshold_ok) seen_ok = true;
        }
        CHECK(seen_ok);
    }
}
