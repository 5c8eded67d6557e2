#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "pcert/ring.hpp"

using namespace pcert;

namespace {

RingElem rand_elem(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 4);
    std::uniform_int_distribution<long> de(-3, 3);
    std::uniform_int_distribution<int> db(0, 1);
    std::uniform_int_distribution<long> dn(-20, 20);
    std::uniform_int_distribution<long> dd(1, 7);
    RingElem r;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        r.add_term(de(rng), db(rng), make_rat(dn(rng), dd(rng)));
    }
    return r;
}

} // namespace

TEST_CASE("canonical form") {
    RingElem a = RingElem::term(0, 1, BigRational(1));  // sqrt6
    RingElem b = a * a;                                 // 6
    CHECK(b == RingElem(BigRational(6)));
    CHECK(b.coeff(0, 0) == 6);
    CHECK(b.coeff(0, 1) == 0);

    RingElem z = RingElem::term(2, 0, make_rat(1, 3));
    z.add_term(2, 0, make_rat(-1, 3));
    CHECK(z.is_zero());

    // adding a term with sqrt6 exponent 2 folds immediately
    RingElem f;
    f.add_term(0, 2, make_rat(1, 2));
    CHECK(f == RingElem(BigRational(3)));
    // negative sqrt6 exponent folds with 1/6 factors
    RingElem g;
    g.add_term(0, -1, BigRational(6));
    CHECK(g == RingElem::term(0, 1, BigRational(1)));
}

TEST_CASE("shifted by pi and sqrt6 powers") {
    RingElem x = RingElem::term(1, 1, make_rat(1, 2));
    RingElem y = x.shifted(-2, 1);
    CHECK(y == RingElem::term(-1, 0, BigRational(3)));
    CHECK(x.shifted(0, 0) == x);
}

TEST_CASE("ring axioms on randomized triples") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 300; ++i) {
        RingElem a = rand_elem(rng);
        RingElem b = rand_elem(rng);
        RingElem c = rand_elem(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a - b) + b == a);
    }
}

TEST_CASE("parity predicates") {
    RingElem even = RingElem::term(2, 0, make_rat(1, 288));
    even.add_term(0, 0, BigRational(1));
    CHECK(even.is_pi_even());
    CHECK_FALSE(even.is_pi_odd_sqrt6());

    RingElem odd = RingElem::term(-1, 1, make_rat(-1, 2));
    odd.add_term(1, 1, make_rat(-1, 144));
    CHECK(odd.is_pi_odd_sqrt6());
    CHECK_FALSE(odd.is_pi_even());
}

TEST_CASE("ring_to_ball") {
    CHECK(ring_to_ball(RingElem(BigRational(1)), 64).mid.to_rat() == 1);
    CHECK(ring_to_ball(RingElem(), 64).is_exact());

    // pi^2/288 enclosure: tighter evaluation nests inside looser one
    RingElem x = RingElem::term(2, 0, make_rat(1, 288));
    RealBall lo = ring_to_ball(x, 64);
    RealBall hi = ring_to_ball(x, 256);
    CHECK(contains_ball(lo, hi));
    // value is about 0.03427
    CHECK(certify_lt(lo, b_from_rat(make_rat(35, 1000), 64)) == Tri::True);
    CHECK(certify_lt(b_from_rat(make_rat(34, 1000), 64), lo) == Tri::True);

    // sqrt6-carrying term: -(1/2) pi^-1 sqrt6 is about -0.38985
    RingElem o = RingElem::term(-1, 1, make_rat(-1, 2));
    RealBall ob = ring_to_ball(o, 128);
    CHECK(certify_sign(ob) == -1);
    CHECK(certify_lt(ob, b_from_rat(make_rat(-38, 100), 64)) == Tri::True);
    CHECK(certify_lt(b_from_rat(make_rat(-39, 100), 64), ob) == Tri::True);
}
