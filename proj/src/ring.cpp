#include "pcert/ring.hpp"

#include <sstream>

namespace pcert {

void RingElem::add_term(long pi_exp, int sqrt6_exp, const BigRational& c) {
    if (c == 0) return;
    BigRational v = c;
    if (sqrt6_exp >= 2 || sqrt6_exp < 0) {
        // normalize (sqrt6)^b: even part folds into the rational
        long b = sqrt6_exp;
        long q = (b >= 0) ? b / 2 : -((-b + 1) / 2);
        long r = b - 2 * q;  // r in {0,1}
        BigRational six(6);
        if (q >= 0) {
            for (long i = 0; i < q; ++i) v *= six;
        } else {
            for (long i = 0; i < -q; ++i) v /= six;
        }
        sqrt6_exp = static_cast<int>(r);
    }
    Key k{pi_exp, sqrt6_exp};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, v);
    } else {
        it->second += v;
        if (it->second == 0) terms_.erase(it);
    }
}

BigRational RingElem::coeff(long pi_exp, int sqrt6_exp) const {
    auto it = terms_.find(Key{pi_exp, sqrt6_exp});
    return it == terms_.end() ? BigRational(0) : it->second;
}

RingElem RingElem::operator+(const RingElem& o) const {
    RingElem r = *this;
    r += o;
    return r;
}

RingElem RingElem::operator-(const RingElem& o) const {
    RingElem r = *this;
    r -= o;
    return r;
}

RingElem& RingElem::operator+=(const RingElem& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

RingElem& RingElem::operator-=(const RingElem& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, BigRational(-c));
    return *this;
}

RingElem RingElem::operator*(const RingElem& o) const {
    RingElem r;
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) {
            int b = ka.second + kb.second;
            BigRational c = ca * cb;
            if (b == 2) {
                c *= 6;
                b = 0;
            }
            r.add_term(ka.first + kb.first, b, c);
        }
    }
    return r;
}

RingElem RingElem::scaled(const BigRational& c) const {
    RingElem r;
    if (c == 0) return r;
    for (const auto& [k, v] : terms_) r.add_term(k.first, k.second, v * c);
    return r;
}

RingElem RingElem::shifted(long pi_exp, int sqrt6_exp) const {
    RingElem r;
    for (const auto& [k, v] : terms_) {
        int b = k.second + sqrt6_exp;
        BigRational c = v;
        while (b >= 2) {
            c *= 6;
            b -= 2;
        }
        while (b < 0) {
            c /= 6;
            b += 2;
        }
        r.add_term(k.first + pi_exp, b, c);
    }
    return r;
}

bool RingElem::is_pi_even() const {
    for (const auto& [k, v] : terms_) {
        if (k.second != 0 || k.first % 2 != 0) return false;
    }
    return true;
}

bool RingElem::is_pi_odd_sqrt6() const {
    for (const auto& [k, v] : terms_) {
        if (k.second != 1 || ((k.first % 2) + 2) % 2 != 1) return false;
    }
    return true;
}

std::string RingElem::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << v.get_str() << ")";
        if (k.first != 0) os << "*pi^" << k.first;
        if (k.second != 0) os << "*sqrt6";
    }
    return os.str();
}

RealBall ring_to_ball(const RingElem& x, long prec) {
    if (x.is_zero()) return b_zero();
    long workp = prec + 16;
    RealBall pi = b_pi(workp);
    RealBall s6 = b_sqrt_ui(6, workp);
    RealBall acc = b_zero();
    for (const auto& [k, c] : x.terms()) {
        RealBall t = b_from_rat(c, workp);
        if (k.first != 0) t = b_mul(t, b_pow_int(pi, k.first, workp), workp);
        if (k.second != 0) t = b_mul(t, s6, workp);
        acc = b_add(acc, t, workp);
    }
    return b_round(acc, prec);
}

} // namespace pcert
