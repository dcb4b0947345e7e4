#pragma once

#include <vector>

#include "pellrep/integers.hpp"
#include "pellrep/quadratic.hpp"

namespace pellrep {

/// Inputs to the p-adic valuation bound. Each H_i must be at least
/// max(h(delta_i), log p); B bounds the |b_i|.
struct YuParams {
    unsigned t = 1;        // number of terms
    unsigned degree = 1;   // field degree D
    unsigned long p = 2;   // rational prime
    unsigned e_pi = 1;     // ramification index
    unsigned f_pi = 1;     // residue degree
    std::vector<double> heights;
    double B = 2.0;
};

/// Upper bound for v_pi(delta_1^{b_1} ... delta_t^{b_t} - 1):
///   19 (20 sqrt(t+1) D)^{2(t+1)} e_pi^{t-1} p^{f_pi} / (f_pi log p)^2
///     * log(e^5 t D) * H_1...H_t * log B.
/// Evaluated in double precision and rounded up one ulp (bounds are
/// never rounded down).
double yu_bound(const YuParams& params);

/// Inputs to the complex lower bound. Each H_i must be >= 0.16.
struct MatveevParams {
    unsigned t = 1;
    unsigned degree = 1;
    double B = 2.0;
    std::vector<double> heights;
};

/// Lower bound for log|delta_1^{b_1} ... delta_t^{b_t} - 1| over a real
/// field:
///   -1.4 * 30^{t+3} * t^{4.5} * D^2 (1 + log D)(1 + log B) H_1...H_t.
/// Returned as the (negative) bound, rounded down one ulp.
double matveev_lower(const MatveevParams& params);

/// Natural log of the integer-point height bound for X^2 = Y^3 + a0:
/// 10^4 * log(10^10 * |a0|). Rejects a0 = 0. Handles arbitrarily large
/// a0 without overflow.
double baker_log_bound(const Int& a0);

/// Absolute logarithmic Weil height of the root(s) of A X^2 + B X + C:
/// (1/2)(log A + sum log max(1, |root|)) for the irreducible quadratic
/// case; rational degenerate cases (A = 0, zero discriminant, square
/// discriminant) return the rational height log max(|num|, den), the
/// square-discriminant case conservatively taking the larger root's
/// height. Roots are computed to well over 12 significant digits.
double height_quadratic(const Int& A, const Int& B, const Int& C);

/// 2*10^17 * b^6 * log n. Requires b >= 2, n >= 3.
double m_bound(unsigned long base, double n);

/// 2T log T for T > 3; any n with n/log n < T satisfies n < 2T log T.
double invert_n_log_n(double T);

/// Exact base^exponent kept in factored form; expanding the value can
/// run to hundreds of thousands of digits.
struct PowerForm {
    Int base;
    Int exponent;
    Int value() const;
};

/// Derived per-base bounds: n, ell and m ceilings, and the modulus
/// bound in natural-log scale. log_d_bound_fp is an exact integer in
/// fixed point (nats * 10^9), with log b rounded up so the bound is
/// never understated. theorem_exponent is (10b)^{100000}, factored.
struct BoundReport {
    unsigned long base = 2;
    Int n_max;              // 10^18 * b^4
    Int ell_max;            // 2*10^18 * b^4
    Int m_max;              // 10^20 * b^7
    double n_max_derived;   // 2*10^18 * (log b)^4, the sharper derivation
    Int log_d_bound_fp;     // 2*10^20 * b^7 * ceil(10^9 log b)
    PowerForm theorem_exponent;
};

BoundReport bound_report(unsigned long base);

/// (10b)^{100000} as an exact integer.
Int theorem_exponent_value(unsigned long base);

/// Coefficient of log n in the specialized valuation bound with t = 2,
/// D = 4, e_pi = 4, p^{f_pi} <= b^4, (f_pi log p)^2 >= (log 2)^2 and
/// H = 4 log b: 19 (20 sqrt(3) * 4)^6 * 4 b^4 / (log 2)^2 * log(8 e^5)
/// * 16 (log b)^2. The folded headline constant 1.3*10^17 b^4 (log b)^2
/// must dominate it.
double yu_specialized_coefficient(unsigned long base);

}  // namespace pellrep
