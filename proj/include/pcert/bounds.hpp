#pragma once

#include <utility>
#include <vector>

#include "pcert/ball.hpp"
#include "pcert/partition.hpp"
#include "pcert/ring.hpp"

namespace pcert {

// Certified lower/upper enclosures bracketing p(n) at truncation order w.
// threshold_ok records whether the bracket is guaranteed (n above the
// order-w validity threshold); evaluation below threshold is allowed and
// reported as observed-only.
struct BoundPair {
    long n = 0;
    long order_w = 0;
    RealBall lower;
    RealBall upper;
    bool threshold_ok = false;
    long precision_bits = 0;
};

enum class Verdict { Inside, Violation, Undecided };

enum class BoundConstant { L1, L2, L3, L4, U1, U2, U3, U4 };

// mu(n) = (pi/6) sqrt(24n - 1)
RealBall mu(long n, long prec);

// nu(k) = 2 log 6 + (2 log 2)k + 2k log k + 2k log log k + 5k log log k/log k
// ghat(k) = (1/24)((36/pi^2) nu(k)^2 + 1); defined for k >= 2
std::pair<RealBall, RealBall> nu_and_ghat(long k, long prec);

// The eight truncation-tail constants; the (1/sqrt24)^(2k) or ^(2k+1)
// factor is included.
RealBall bound_constant(BoundConstant which, long k, long prec);

// Repaired lower tail constant for the fourth coefficient family: the
// printed middle term -(11/20) alpha sinh(alpha) is not a valid lower
// bound (the series dips below it; the verifier certifies counterexamples),
// so this variant carries -(24/23) sinh(alpha) instead, derived by the
// same tail estimates.
RealBall bound_constant_l4_corrected(long k, long prec);

// Lhat2(k), Uhat2(k); both depend on n despite the k-only name.
std::pair<RealBall, RealBall> lhat2_uhat2(long k, long n, long prec);

// order-w truncation constants: gamma pair (23,24) for even w, (15,17)
// for odd w, times sqrt(ceil(w/2)+1)/sqrt24^w (L negative, U positive)
std::pair<RealBall, RealBall> final_LU(long w, long prec);

// e^(pi sqrt(2n/3)) / (4n sqrt3)
RealBall prefactor(long n, long prec);

// smallest certified integer ceiling of ghat(w); w=1 has no defined
// threshold and maps to 1. Undecided at max_prec rounds up (conservative).
long ghat_ceiling(long w, long start_prec, long max_prec);

// starting precision policy for the sandwich at (n, w)
long suggested_prec(long n, long w);

// shared enclosures of g(0..count-1) for sweeps
struct BoundsContext {
    long prec = 0;
    std::vector<RealBall> g_ball;

    BoundsContext(long count, long prec);
};

BoundPair main_bounds(long n, long w, long prec);
BoundPair main_bounds_ctx(long n, long w, const BoundsContext& ctx,
                          const RealBall& pref, long prec);

// order-4 specialization with the rational error terms -1/(14n^2), +1/(13n^2)
BoundPair corollary4_bounds(long n, long prec);

// two-sided bound sqrt12 e^mu/(24n-1) (1 - 1/mu -+ 1/mu^k); k >= 2;
// threshold needs n > ghat(k) and (n,k) != (6,2)
BoundPair bprz_bounds(long n, long k, long prec);

// the k=10 two-sided bound, guaranteed for n >= 1207
BoundPair cjw_bounds(long n, long prec);

Verdict classify(const BoundPair& bp, const Int& p_exact);

} // namespace pcert
