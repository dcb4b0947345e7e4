#pragma once

#include "pellrep/integers.hpp"

namespace pellrep {

/// Exact element u + v*sqrt(delta) of a quadratic extension of Q.
/// delta is a fixed non-square rational (it may be negative); all
/// arithmetic is exact, no floating point anywhere.
struct QuadraticPair {
    Rational u;
    Rational v;
    Rational delta;

    QuadraticPair conj() const { return {u, -v, delta}; }

    /// Field norm u^2 - v^2 * delta.
    Rational norm() const;

    QuadraticPair operator*(const QuadraticPair& rhs) const;
    QuadraticPair operator-(const QuadraticPair& rhs) const;

    /// Inverse of a unit (norm must be +-1).
    QuadraticPair unit_inverse() const;

    /// Exact n-th power by square-and-multiply.
    QuadraticPair pow(unsigned long n) const;

    bool is_zero() const { return u == 0 && v == 0; }
};

/// x + sqrt(x^2 - 1) as a pair over delta = x^2 - 1. Its norm is 1, so
/// the inverse is the conjugate x - sqrt(x^2 - 1).
QuadraticPair unit_from_half_trace(const Rational& x);

/// Integer quadratic A*X^2 + B*X + C (A may be 0 for the degenerate
/// rational case) plus a root selector for callers that care which root
/// is meant; +1 picks the root with the + sign before the radical.
struct QuadPoly {
    Int a;
    Int b;
    Int c;
    int root_sign = +1;
};

/// (b-1)^2 X^2 + 2*digit*X + 1: the polynomial the height chain for the
/// repdigit ratio numbers is evaluated on.
QuadPoly repdigit_ratio_poly(unsigned long base, unsigned long digit);

/// (b-1) X^2 + 2*digit*X + (b-1): minimal polynomial of
/// -digit/(b-1) + sqrt((digit/(b-1))^2 - 1), a unit-circle conjugate
/// pair when digit < b-1.
QuadPoly unit_circle_poly(unsigned long base, unsigned long digit);

/// X^2 - 2*x1*X + 1: minimal polynomial of the Pell unit x1 + sqrt(x1^2-1).
QuadPoly pell_unit_poly(const Int& x1);

}  // namespace pellrep
