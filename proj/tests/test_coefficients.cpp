#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pcert/coefficients.hpp"
#include "pcert/errors.hpp"

using namespace pcert;

TEST_CASE("aux coefficients at small t") {
    CHECK(aux_coefficient(AuxKind::e1, 0) == RingElem(BigRational(1)));
    CHECK(aux_coefficient(AuxKind::e2, 2) == RingElem(make_rat(1, 576)));
    // o2(0) = -6/(pi sqrt24) = -(1/2) pi^-1 sqrt6
    CHECK(aux_coefficient(AuxKind::o2, 0) == RingElem::term(-1, 1, make_rat(-1, 2)));
    // o1(0) = -(1/144) pi sqrt6
    CHECK(aux_coefficient(AuxKind::o1, 0) == RingElem::term(1, 1, make_rat(-1, 144)));
    CHECK_THROWS_AS(aux_coefficient(AuxKind::e1, -1), DomainError);
}

TEST_CASE("inner sums at the spec'd points") {
    CHECK(inner_sum_S(1, 0).is_zero());  // empty sum convention
    CHECK(inner_sum_S(1, 1) == RingElem::term(2, 0, make_rat(1, 288)));
    CHECK(inner_sum_S(2, 1) == RingElem(make_rat(1, 2)));
    CHECK(inner_sum_S(4, 0) == RingElem(make_rat(1, 2)));
    CHECK_THROWS_AS(inner_sum_S(2, 0), DomainError);
    CHECK_THROWS_AS(inner_sum_S(3, 1), DomainError);
    CHECK_THROWS_AS(inner_sum_S(5, 3), DomainError);
}

TEST_CASE("g components") {
    // ge1(1) = (288+pi^2)/6912
    RingElem ge1_1 = g_component(GCompKind::ge1, 1);
    CHECK(ge1_1.coeff(0, 0) == make_rat(1, 24));
    CHECK(ge1_1.coeff(2, 0) == make_rat(1, 6912));
    CHECK(g_component(GCompKind::go1, 0) == RingElem::term(-1, 1, make_rat(-1, 2)));
    CHECK(g_component(GCompKind::ge2, 1) == RingElem(make_rat(1, 48)));
    CHECK(g_component(GCompKind::ge2, 0).is_zero());
}

TEST_CASE("printed closed forms of g(0..3)") {
    CHECK(g_coefficient(0) == RingElem(BigRational(1)));

    RingElem g1;
    g1.add_term(-1, 1, make_rat(-1, 2));
    g1.add_term(1, 1, make_rat(-1, 144));
    CHECK(g_coefficient(1) == g1);

    RingElem g2;
    g2.add_term(0, 0, make_rat(1, 16));
    g2.add_term(2, 0, make_rat(1, 6912));
    CHECK(g_coefficient(2) == g2);

    RingElem g3;
    g3.add_term(-1, 1, make_rat(-1, 32));
    g3.add_term(1, 1, make_rat(-1, 2304));
    g3.add_term(3, 1, make_rat(-1, 2985984));
    CHECK(g_coefficient(3) == g3);
}

TEST_CASE("g equals omega exactly") {
    CHECK(omega(0) == RingElem(BigRational(1)));
    for (long t = 0; t <= 40; ++t) {
        CHECK(g_coefficient(t) == omega(t));
    }
}

TEST_CASE("parity structure of g(t)") {
    for (long t = 0; t <= 30; ++t) {
        RingElem g = g_coefficient(t);
        if (t % 2 == 0) {
            CHECK(g.is_pi_even());
        } else {
            CHECK(g.is_pi_odd_sqrt6());
        }
    }
}

TEST_CASE("pp1 identity") {
    auto p00 = pp1_identity_sides(0, 0);
    CHECK(p00.first == 1);
    CHECK(p00.second == 1);
    auto p11 = pp1_identity_sides(1, 1);
    CHECK(p11.first == make_rat(-1, 2));
    CHECK(p11.second == make_rat(-1, 2));
    auto p21 = pp1_identity_sides(2, 1);
    CHECK(p21.first == 0);
    CHECK(p21.second == 0);
    for (long k = 0; k <= 25; ++k) {
        for (long j = 0; j <= 25; ++j) {
            auto [lhs, rhs] = pp1_identity_sides(k, j);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("certified sign pattern of g(t)") {
    long prec = 128;
    for (long t = 1; t <= 20; ++t) {
        RealBall b = ring_to_ball(g_coefficient(t), prec);
        CHECK(certify_sign(b) == ((t % 2 == 0) ? 1 : -1));
    }
    // g(1) is about -0.443
    RealBall g1 = ring_to_ball(g_coefficient(1), 128);
    CHECK(certify_lt(g1, b_from_rat(make_rat(-44, 100), 64)) == Tri::True);
    CHECK(certify_lt(b_from_rat(make_rat(-45, 100), 64), g1) == Tri::True);
}
