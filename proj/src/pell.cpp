#include "pellrep/pell.hpp"

#include <stdexcept>
#include <utility>

namespace pellrep {

Int int_sqrt(const Int& n) {
    if (n < 0) throw std::invalid_argument("int_sqrt: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(const Int& n) {
    if (n < 0) return false;
    Int r, rem;
    mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    return rem == 0;
}

unsigned long nu_p(const Int& k, unsigned long p) {
    if (k == 0) throw std::invalid_argument("nu_p: k must be nonzero");
    if (p < 2) throw std::invalid_argument("nu_p: p must be a prime >= 2");
    Int stripped;
    Int prime(p);
    mp_bitcnt_t e = mpz_remove(stripped.get_mpz_t(), k.get_mpz_t(), prime.get_mpz_t());
    return static_cast<unsigned long>(e);
}

Int ipow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Int ipow(unsigned long base, unsigned long exp) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

PellOrbit fundamental_solution(const Int& d) {
    if (d < 2) throw std::invalid_argument("fundamental_solution: d must be >= 2");
    if (is_square(d)) throw std::invalid_argument("fundamental_solution: d must not be a square");

    // PQa iteration for sqrt(d): P_0 = 0, Q_0 = 1,
    //   a_i = floor((a0 + P_i)/Q_i),
    //   P_{i+1} = a_i Q_i - P_i,  Q_{i+1} = (d - P_{i+1}^2)/Q_i.
    // The state returns to Q = 1 exactly at the period length l; the
    // convergent h_{l-1}/k_{l-1} then solves x^2 - d y^2 = (-1)^l.
    const Int a0 = int_sqrt(d);
    Int p = 0, q = 1;
    Int a = a0;

    Int h_prev = 1, h = a0;  // h_{-1}, h_0
    Int k_prev = 0, k = 1;   // k_{-1}, k_0

    bool odd_period = false;
    for (unsigned long i = 0;; ++i) {
        if (i > 100000000UL)
            throw identity_violation("fundamental_solution: period not found");
        Int p_next = a * q - p;
        Int q_next = (d - p_next * p_next) / q;
        if (q_next == 1) {
            odd_period = (i + 1) % 2 == 1;
            break;
        }
        Int a_next = (a0 + p_next) / q_next;
        Int h_next = a_next * h + h_prev;
        Int k_next = a_next * k + k_prev;
        p = std::move(p_next);
        q = std::move(q_next);
        a = std::move(a_next);
        h_prev = std::move(h);
        h = std::move(h_next);
        k_prev = std::move(k);
        k = std::move(k_next);
    }

    PellOrbit orbit;
    orbit.d = d;
    if (odd_period) {
        // h^2 - d k^2 = -1; square the unit to reach +1.
        orbit.x1 = h * h + d * k * k;
        orbit.y1 = 2 * h * k;
    } else {
        orbit.x1 = h;
        orbit.y1 = k;
    }
    if (orbit.x1 * orbit.x1 - d * orbit.y1 * orbit.y1 != 1)
        throw identity_violation("fundamental_solution: convergent does not solve the equation");
    return orbit;
}

PellOrbit orbit_from_x(const Int& x) {
    if (x < 2) throw std::invalid_argument("orbit_from_x: x must be >= 2");
    return PellOrbit{x * x - 1, x, 1};
}

PellWalker::PellWalker(const PellOrbit& orbit)
    : twice_x1_(2 * orbit.x1),
      x_prev_(1),
      x_cur_(orbit.x1),
      y_prev_(0),
      y_cur_(orbit.y1) {}

void PellWalker::advance() {
    Int x_next = twice_x1_ * x_cur_ - x_prev_;
    Int y_next = twice_x1_ * y_cur_ - y_prev_;
    x_prev_ = std::move(x_cur_);
    x_cur_ = std::move(x_next);
    y_prev_ = std::move(y_cur_);
    y_cur_ = std::move(y_next);
    ++k_;
}

PellPair nth_solution(const PellOrbit& orbit, unsigned long n) {
    if (n < 1) throw std::invalid_argument("nth_solution: n must be >= 1");
    PellWalker walker(orbit);
    while (walker.index() < n) walker.advance();
    return PellPair{orbit.d, n, walker.x(), walker.y()};
}

Rational chebyshev_P(unsigned long n, const Rational& x) {
    if (n == 0) return Rational(1);
    Rational prev(1), cur(x);
    const Rational two_x = 2 * x;
    for (unsigned long k = 1; k < n; ++k) {
        Rational next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Rational chebyshev_P_prime(unsigned long n, const Rational& x) {
    if (n == 0) return Rational(0);
    Rational p_prev(1), p_cur(x);
    Rational d_prev(0), d_cur(1);
    const Rational two_x = 2 * x;
    for (unsigned long k = 1; k < n; ++k) {
        Rational p_next = two_x * p_cur - p_prev;
        Rational d_next = 2 * p_cur + two_x * d_cur - d_prev;
        p_prev = std::move(p_cur);
        p_cur = std::move(p_next);
        d_prev = std::move(d_cur);
        d_cur = std::move(d_next);
    }
    return d_cur;
}

ChebyshevResidues chebyshev_mod(unsigned long n, const Int& x0, const Int& modulus) {
    if (modulus < 2) throw std::invalid_argument("chebyshev_mod: modulus must be >= 2");
    auto reduce = [&](Int v) {
        Int r;
        mpz_mod(r.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
        return r;
    };
    Int x = reduce(x0);
    if (n == 0) return ChebyshevResidues{Int(1), Int(0)};
    Int p_prev = 1, p_cur = x;
    Int d_prev = 0, d_cur = 1;
    const Int two_x = reduce(2 * x);
    for (unsigned long k = 1; k < n; ++k) {
        Int p_next = reduce(two_x * p_cur - p_prev);
        Int d_next = reduce(2 * p_cur + two_x * d_cur - d_prev);
        p_prev = std::move(p_cur);
        p_cur = std::move(p_next);
        d_prev = std::move(d_cur);
        d_cur = std::move(d_next);
    }
    return ChebyshevResidues{p_cur, d_cur};
}

}  // namespace pellrep
