#pragma once

#include <functional>
#include <iosfwd>
#include <string>

#include "pcert/dyadic.hpp"

namespace pcert {

// Three-valued certified comparison outcome. True/False are asserted only
// when they hold for every pair of points in the operand enclosures.
enum class Tri { False = 0, True = 1, Undecided = 2 };

std::ostream& operator<<(std::ostream& os, Tri t);

// Midpoint-radius enclosure of a real number. Every operation returns a
// ball containing the exact image of every point of its input balls; this
// containment contract is the soundness basis of all certified checks.
struct RealBall {
    Dyadic mid;
    Dyadic rad;  // >= 0

    RealBall() = default;
    RealBall(Dyadic m, Dyadic r) : mid(std::move(m)), rad(std::move(r)) {}

    bool is_exact() const { return rad.is_zero(); }
    Dyadic inf() const { return dy_sub(mid, rad); }
    Dyadic sup() const { return dy_add(mid, rad); }

    std::string to_string(unsigned long digits = 20) const;
};

long precision_cap();
void set_precision_cap(long bits);

RealBall b_exact(const Dyadic& d);
RealBall b_exact_int(const Int& n);
inline RealBall b_zero() { return RealBall(); }
inline RealBall b_one() { return b_exact_int(1); }
RealBall b_from_rat(const BigRational& q, long prec);

RealBall b_neg(const RealBall& a);
RealBall b_mul_2exp(const RealBall& a, long k);
RealBall b_round(const RealBall& a, long prec);

RealBall b_add(const RealBall& a, const RealBall& b, long prec);
RealBall b_sub(const RealBall& a, const RealBall& b, long prec);
RealBall b_mul(const RealBall& a, const RealBall& b, long prec);
RealBall b_div(const RealBall& a, const RealBall& b, long prec);
RealBall b_div_ui(const RealBall& a, unsigned long d, long prec);
RealBall b_mul_rat(const RealBall& a, const BigRational& q, long prec);
RealBall b_sqrt(const RealBall& a, long prec);
RealBall b_sqrt_ui(unsigned long n, long prec);
RealBall b_exp(const RealBall& a, long prec);
RealBall b_log(const RealBall& a, long prec);
RealBall b_cosh(const RealBall& a, long prec);
RealBall b_sinh(const RealBall& a, long prec);
RealBall b_pow_int(const RealBall& a, long k, long prec);

// Enclosure of pi; radius <= 2^(2-prec) * midpoint.
RealBall b_pi(long prec);

// True iff sup(a) < inf(b); False iff inf(a) > sup(b); Undecided otherwise.
Tri certify_lt(const RealBall& a, const RealBall& b);
inline Tri certify_gt(const RealBall& a, const RealBall& b) { return certify_lt(b, a); }

// -1 / +1 when the ball is certainly negative / positive, 0 when undecided.
int certify_sign(const RealBall& a);

bool contains(const RealBall& a, const BigRational& q);
bool contains_ball(const RealBall& outer, const RealBall& inner);
bool contains_zero(const RealBall& a);

// Evaluates both sides at doubling precision until certify_lt decides or
// max_bits is reached; Undecided at the cap is a result, not an error.
struct Decision {
    Tri tri = Tri::Undecided;
    long bits_used = 0;
};

using BallExpr = std::function<RealBall(long)>;

Decision adaptive_decide(const BallExpr& lhs, const BallExpr& rhs,
                         long start_bits, long max_bits);

} // namespace pcert
