#pragma once

#include <functional>
#include <utility>

#include "pcert/ring.hpp"

namespace pcert {

// Integer lattice point of the summation simplex 0 <= s <= t-u, 0 <= u <= t
// (grid checks may sit elsewhere as long as they avoid the poles).
struct CertPoint {
    long t, u, s;
};

using GammaFn = std::function<BigRational(const CertPoint&)>;

// summand f(t,u,s) of the third inner sum
BigRational f3_summand(const CertPoint& p);

// the printed certificate polynomial
BigRational cert3_gamma(const CertPoint& p);

// certificate rational function; PoleError names any vanishing denominator factor
BigRational cert3_g(const CertPoint& p);
BigRational cert3_g_with(const CertPoint& p, const GammaFn& gamma);

// exact check of
//   g(t,u,s+1) - g(t,u,s) = a0 f(t,u,s) + a1 f(t,u+1,s) + a2 f(t,u+2,s)
// with a0 = u(t-u), a1 = 2(2+t)(1+u), a2 = (2+u)(2+t+u)
bool verify_certificate3(const CertPoint& p);
bool verify_certificate3_with(const CertPoint& p, const GammaFn& gamma);

// order-2 recurrence a0 S3(t,u) + a1 S3(t,u+1) + a2 S3(t,u+2) = 0 on
// directly summed values; requires 1 <= u <= t-2
bool verify_recurrence3(long t, long u);

// direct inner sums S_i(t,u) (the per-u slices of Defs of S_1..S_4)
BigRational inner_sum_direct(int i, long t, long u);

// closed forms of the same slices
BigRational inner_closed_form(int i, long t, long u);

// printed initial values (S3(t,1), S3(t,2)); the second is meaningful for t >= 2
std::pair<BigRational, BigRational> initial_values3(long t);

// S_i(t) reassembled from the closed-form slices; single O(t) scan.
// Equals inner_sum_S(i, t) identically on the shared domain.
RingElem fast_S_ring(int i, long t);

// Incremental per-u state shared by the closed-form slices:
//   ratio(u) = (-t)_u (-1)^u / (t)_u
//   tail(u)  = sum_{i=1}^u ratio(i)/(t+i)
// advance() moves u -> u+1 in O(1) rational operations.
struct AWalk {
    long t;
    long u = 0;
    BigRational ratio{1};
    BigRational tail{0};

    explicit AWalk(long t_) : t(t_) {}

    void advance() {
        ++u;
        ratio *= BigRational(t - u + 1);
        ratio /= BigRational(t + u - 1);
        tail += ratio / BigRational(t + u);
    }

    void advance_to(long target) {
        while (u < target) advance();
    }
};

// The per-u rational factors of the closed forms (names follow the slice
// they assemble): a1 includes the subtracted shared tail.
BigRational awalk_shared_tail(const AWalk& w, const BigRational& binom_t);
BigRational awalk_a1(const AWalk& w, const BigRational& binom_t);
BigRational awalk_a21(const AWalk& w);
BigRational awalk_a31(const AWalk& w);
BigRational awalk_a41(const AWalk& w);
BigRational awalk_a42(const AWalk& w, const BigRational& binom_t);

} // namespace pcert
