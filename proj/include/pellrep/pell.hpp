#pragma once

#include <vector>

#include "pellrep/integers.hpp"

namespace pellrep {

/// Generator data for one Pell equation X^2 - d*Y^2 = 1: the modulus d
/// and a positive solution (x1, y1) whose powers produce the sequence
/// walked by PellWalker / nth_solution. fundamental_solution() returns
/// the minimal such pair; orbit_from_x() seeds an orbit at (x, 1) with
/// d = x^2 - 1, which need not be fundamental for the squarefree core.
struct PellOrbit {
    Int d;
    Int x1;
    Int y1;
};

/// The n-th positive solution of X^2 - d*Y^2 = 1.
struct PellPair {
    Int d;
    unsigned long n = 0;
    Int x;
    Int y;
};

/// Minimal positive solution of X^2 - d*Y^2 = 1 via the integer-only
/// PQa continued-fraction expansion of sqrt(d). The period closes when
/// the PQa state returns to Q = 1; an odd period yields the -1 solution,
/// which is squared. Rejects d < 2 and perfect squares.
PellOrbit fundamental_solution(const Int& d);

/// Orbit seeded at (x, 1) with d = x^2 - 1. Requires x >= 2.
PellOrbit orbit_from_x(const Int& x);

/// (X_n, Y_n) by the recurrences X_{k+1} = 2*x1*X_k - X_{k-1},
/// Y_{k+1} = 2*x1*Y_k - Y_{k-1}, with X_0 = 1, Y_0 = 0. Requires n >= 1.
PellPair nth_solution(const PellOrbit& orbit, unsigned long n);

/// Steps through (X_k, Y_k) for k = 1, 2, ... without recomputing from
/// scratch. X_k is strictly increasing in k.
class PellWalker {
  public:
    explicit PellWalker(const PellOrbit& orbit);

    unsigned long index() const { return k_; }
    const Int& x() const { return x_cur_; }
    const Int& y() const { return y_cur_; }

    void advance();

  private:
    Int twice_x1_;
    Int x_prev_, x_cur_;
    Int y_prev_, y_cur_;
    unsigned long k_ = 1;
};

/// Chebyshev-type polynomial value P_n(x) with P_0 = 1, P_1(x) = x,
/// P_{k+1} = 2x*P_k - P_{k-1}, evaluated exactly over the rationals.
/// P_n(X_1) = X_n for any Pell orbit.
Rational chebyshev_P(unsigned long n, const Rational& x);

/// d/dx P_n(x), exact, by differentiating the recurrence:
/// P'_{k+1} = 2*P_k + 2x*P'_k - P'_{k-1}.
Rational chebyshev_P_prime(unsigned long n, const Rational& x);

/// (P_n(x0), P'_n(x0)) reduced modulo m > 1; x0 is taken mod m.
/// Used by congruence verifiers that work modulo b^{2m}.
struct ChebyshevResidues {
    Int value;
    Int derivative;
};
ChebyshevResidues chebyshev_mod(unsigned long n, const Int& x0, const Int& modulus);

}  // namespace pellrep
