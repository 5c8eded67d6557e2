#pragma once

#include <utility>

#include "pcert/ring.hpp"

namespace pcert {

enum class AuxKind { e1, o1, e2, o2 };
enum class GCompKind { ge1, ge2, go1, go2 };

// Exact series coefficients of the two factors of the main-term quotient,
// as elements of Q[pi^{+-1}, sqrt6].
RingElem aux_coefficient(AuxKind kind, long t);

// The four inner double sums S_1..S_4. Domains: S1 t>=0 (empty sum at 0),
// S2 t>=1, S3 t>=2, S4 t>=0; DomainError outside.
RingElem inner_sum_S(int i, long t);

RingElem g_component(GCompKind kind, long t);

// g(2t) = ge1(t)+ge2(t), g(2t+1) = go1(t)+go2(t)
RingElem g_coefficient(long t);

// Single-sum expansion coefficient; equals g(t) identically.
RingElem omega(long t);

// Both sides of the alternating binomial inversion identity.
std::pair<BigRational, BigRational> pp1_identity_sides(long k, long j);

} // namespace pcert
