#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "pcert/closed_forms.hpp"
#include "pcert/coefficients.hpp"
#include "pcert/errors.hpp"

using namespace pcert;

TEST_CASE("f3 summand values and poles") {
    // only term of S3(1,1)
    CHECK(f3_summand(CertPoint{1, 1, 0}) == make_rat(1, 8));
    CHECK(inner_sum_direct(3, 1, 1) == make_rat(1, 8));
    // hand-expanded value at (2,1,1)
    CHECK(f3_summand(CertPoint{2, 1, 1}) == make_rat(-1, 16));
    CHECK_THROWS_AS(f3_summand(CertPoint{3, 0, 0}), PoleError);
}

TEST_CASE("certificate denominator parity") {
    // 2s - 2t + 2u - 1 is odd, so that factor never vanishes at integers
    for (long t = 0; t <= 12; ++t) {
        for (long u = 0; u <= 12; ++u) {
            for (long s = 0; s <= 12; ++s) {
                CHECK((2 * s - 2 * t + 2 * u - 1) % 2 != 0);
            }
        }
    }
    CHECK_THROWS_AS(cert3_g(CertPoint{3, 0, 0}), PoleError);
    // numerator carries a factor s, so the certificate vanishes at s=0
    CHECK(cert3_g(CertPoint{5, 2, 0}) == 0);
}

TEST_CASE("summand recurrence at fixed points") {
    CHECK(verify_certificate3(CertPoint{3, 1, 1}));
    CHECK(verify_certificate3(CertPoint{5, 1, 2}));
    CHECK(verify_certificate3(CertPoint{7, 3, 2}));
    CHECK(verify_certificate3(CertPoint{12, 4, 5}));
}

TEST_CASE("summand recurrence at 500 seeded points") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> dt(2, 60);
    int done = 0;
    while (done < 500) {
        long t = dt(rng);
        std::uniform_int_distribution<long> du(1, t);
        long u = du(rng);
        std::uniform_int_distribution<long> ds(1, std::max(1L, t - u));
        long s = ds(rng);
        if (s > t - u) continue;
        CAPTURE(t);
        CAPTURE(u);
        CAPTURE(s);
        CHECK(verify_certificate3(CertPoint{t, u, s}));
        ++done;
    }
}

TEST_CASE("single-coefficient mutation breaks the certificate") {
    GammaFn mutated = [](const CertPoint& p) -> BigRational {
        // +1 on the coefficient of s*t*u (-138 -> -137)
        return cert3_gamma(p) + BigRational(p.s) * p.t * p.u;
    };
    int failures = 0, total = 0;
    for (long t = 6; t <= 10; ++t) {
        for (long u = 1; u <= 3; ++u) {
            for (long s = 1; s <= 3; ++s) {
                if (s > t - u) continue;
                ++total;
                if (!verify_certificate3_with(CertPoint{t, u, s}, mutated)) ++failures;
            }
        }
    }
    CHECK(failures == total);
}

TEST_CASE("telescoping the summand recurrence gives the sum recurrence") {
    for (long t = 2; t <= 15; ++t) {
        for (long u = 1; u <= t - 2; ++u) {
            BigRational acc(0);
            for (long s = 0; s <= t - u; ++s) {
                acc += BigRational(u * (t - u)) * f3_summand(CertPoint{t, u, s});
                acc += BigRational(2 * (2 + t) * (1 + u)) * f3_summand(CertPoint{t, u + 1, s});
                acc += BigRational((2 + u) * (2 + t + u)) * f3_summand(CertPoint{t, u + 2, s});
            }
            CHECK(acc == 0);  // g telescopes to zero at both ends
            CHECK(verify_recurrence3(t, u));
        }
    }
}

TEST_CASE("recurrence on directly summed values") {
    CHECK(verify_recurrence3(5, 1));
    CHECK(verify_recurrence3(10, 3));
    CHECK_THROWS_AS(verify_recurrence3(5, 4), DomainError);
    // mutation: shifting one sum value must break the relation
    BigRational acc = BigRational(1 * (5 - 1)) * (inner_sum_direct(3, 5, 1) + 1);
    acc += BigRational(2 * 7 * 2) * inner_sum_direct(3, 5, 2);
    acc += BigRational(3 * 8) * inner_sum_direct(3, 5, 3);
    CHECK(acc != 0);
}

TEST_CASE("closed forms agree with direct slices") {
    for (long t = 1; t <= 25; ++t) {
        for (long u = 1; u <= t; ++u) {
            CHECK(inner_closed_form(1, t, u) == inner_sum_direct(1, t, u));
            CHECK(inner_closed_form(3, t, u) == inner_sum_direct(3, t, u));
        }
        for (long u = 0; u <= t - 1; ++u) {
            CHECK(inner_closed_form(2, t, u) == inner_sum_direct(2, t, u));
        }
        for (long u = 0; u <= t; ++u) {
            CHECK(inner_closed_form(4, t, u) == inner_sum_direct(4, t, u));
        }
    }
    // spec'd sample points
    CHECK(inner_closed_form(3, 4, 2) == inner_sum_direct(3, 4, 2));
    CHECK(inner_closed_form(1, 3, 1) == inner_sum_direct(1, 3, 1));
    CHECK(inner_closed_form(4, 2, 0) == inner_sum_direct(4, 2, 0));
}

TEST_CASE("printed initial values") {
    for (long t = 1; t <= 12; ++t) {
        auto [v1, v2] = initial_values3(t);
        CHECK(v1 == inner_sum_direct(3, t, 1));
        if (t >= 2) CHECK(v2 == inner_sum_direct(3, t, 2));
    }
    auto [a1, a2] = initial_values3(7);
    CHECK(a1 == inner_sum_direct(3, 7, 1));
    CHECK(a2 == inner_sum_direct(3, 7, 2));
    CHECK_THROWS_AS(initial_values3(0), DomainError);
}

TEST_CASE("fast ring assembly equals the definitional double sum") {
    for (long t = 0; t <= 25; ++t) {
        CHECK(fast_S_ring(1, t) == inner_sum_S(1, t));
        if (t >= 1) CHECK(fast_S_ring(2, t) == inner_sum_S(2, t));
        if (t >= 2) CHECK(fast_S_ring(3, t) == inner_sum_S(3, t));
        if (t >= 1) CHECK(fast_S_ring(4, t) == inner_sum_S(4, t));
    }
}

TEST_CASE("off-simplex certificate grid slice") {
    // product-grid points clear of every denominator factor
    for (long t = 33; t <= 35; ++t) {
        for (long u = 1; u <= 15; u += 7) {
            for (long s = 1; s <= 15; s += 7) {
                CHECK(verify_certificate3(CertPoint{t, u, s}));
            }
        }
    }
}
