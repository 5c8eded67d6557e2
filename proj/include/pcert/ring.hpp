#pragma once

#include <map>
#include <string>
#include <utility>

#include "pcert/ball.hpp"
#include "pcert/rational.hpp"

namespace pcert {

// Exact element of the constant ring { sum c_{a,b} pi^a (sqrt6)^b },
// a in Z, b in {0,1}, c_{a,b} rational. Canonical form: (sqrt6)^2 is always
// folded into the rational coefficient and zero coefficients are erased,
// so equality of maps is equality of ring elements.
class RingElem {
public:
    using Key = std::pair<long, int>;  // (pi exponent, sqrt6 exponent)

    RingElem() = default;
    explicit RingElem(const BigRational& c) { add_term(0, 0, c); }

    static RingElem term(long pi_exp, int sqrt6_exp, const BigRational& c) {
        RingElem r;
        r.add_term(pi_exp, sqrt6_exp, c);
        return r;
    }

    void add_term(long pi_exp, int sqrt6_exp, const BigRational& c);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, BigRational>& terms() const { return terms_; }

    BigRational coeff(long pi_exp, int sqrt6_exp) const;

    RingElem operator+(const RingElem& o) const;
    RingElem operator-(const RingElem& o) const;
    RingElem operator*(const RingElem& o) const;
    RingElem& operator+=(const RingElem& o);
    RingElem& operator-=(const RingElem& o);

    RingElem scaled(const BigRational& c) const;
    // multiply by pi^a (sqrt6)^b
    RingElem shifted(long pi_exp, int sqrt6_exp) const;

    bool operator==(const RingElem& o) const { return terms_ == o.terms_; }
    bool operator!=(const RingElem& o) const { return terms_ != o.terms_; }

    // True when every term has b == 0 and even pi exponent.
    bool is_pi_even() const;
    // True when every term has b == 1 and odd pi exponent.
    bool is_pi_odd_sqrt6() const;

    std::string to_string() const;

private:
    std::map<Key, BigRational> terms_;
};

// Sound enclosure of sum c_{a,b} pi^a (sqrt6)^b.
RealBall ring_to_ball(const RingElem& x, long prec);

} // namespace pcert
