#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pellrep/integers.hpp"
#include "pellrep/pell.hpp"
#include "pellrep/repdigit.hpp"

namespace pellrep {

/// Machine-readable falsification evidence emitted by a verifier.
/// `check` is the stable check id, `data` the offending values.
struct Evidence {
    std::string check;
    std::string message;
    std::vector<std::pair<std::string, std::string>> data;
};

/// Thrown when verifier inputs violate a precondition (bad usage, not a
/// falsified claim).
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown by single-instance verifiers whose return type has no room
/// for evidence; suite drivers catch it and record the evidence.
struct falsification_error : std::runtime_error {
    explicit falsification_error(Evidence e)
        : std::runtime_error(e.check + ": " + e.message), evidence(std::move(e)) {}
    Evidence evidence;
};

/// One named check inside a suite: how many cases ran and whether all
/// passed. Extra key/value details end up in the serialized record.
struct CheckLine {
    std::string check;
    unsigned long cases = 0;
    bool passed = true;
    std::vector<std::pair<std::string, std::string>> data;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckLine> checks;
    std::vector<Evidence> falsifications;

    bool ok() const { return falsifications.empty(); }
};

// ---------------------------------------------------------------------------
// Even-index solutions
// ---------------------------------------------------------------------------

/// Trichotomy for a solution X_n = a*(b^m-1)/(b-1) with n even:
///   digit_below_max   a < b-1
///   max_digit_single  a = b-1, m = 1  (forces d < b)
///   max_digit_power   a = b-1, m > 1  (forces b even, 2*X_{n/2}^2 = b^m,
///                     and 2^floor((m-1)/2) | X_1)
enum class EvenBranch { digit_below_max, max_digit_single, max_digit_power };

struct EvenCaseClassification {
    EvenBranch branch;
    unsigned long n1 = 0;  // n/2
    Int x_n1;
    unsigned long m = 0;
    unsigned long two_exponent = 0;  // floor((m-1)/2), max_digit_power only
};

/// Classifies a verified even-index repdigit solution and checks every
/// structural consequence of its branch exactly. Rejects inputs that do
/// not satisfy the repdigit equation; throws falsification_error if no
/// branch fits or a branch consequence fails.
EvenCaseClassification classify_even_solution(const Int& d, unsigned long n_even,
                                              unsigned long a, unsigned long m,
                                              unsigned long base);

/// Prime factors of n found by trial division up to `limit`, plus the
/// residual cofactor (1 if fully factored). `undecided` marks a residual
/// cofactor above 10^12: the display is then incomplete (the exact
/// radical comparison below never is).
struct FactorSplit {
    std::vector<Int> primes;
    Int cofactor = 1;
    bool undecided = false;
};
FactorSplit trial_factor(const Int& n, unsigned long limit = 1000000);

/// True iff every prime factor of x divides y, by repeated gcd stripping
/// (exact, no factorization).
bool divides_radical(Int x, const Int& y);

/// True iff x and y have the same set of prime factors.
bool same_radical(const Int& x, const Int& y);

struct EvenUniquenessReport {
    unsigned long base = 0;
    unsigned long d_scanned = 0;
    unsigned long power_hits = 0;  // max_digit_power solutions found
    std::vector<Evidence> falsifications;
    bool ok() const { return falsifications.empty(); }
};

/// For even base b, scans nonsquare d <= d_max and even n <= n_max:
/// confirms at most one max_digit_power solution per d, and that
/// X_1, X_3, X_5 have pairwise distinct prime-factor sets for every
/// scanned d. Counterexamples are reported verbatim.
EvenUniquenessReport even_uniqueness_check(unsigned long base, unsigned long d_max,
                                           unsigned long n_max);

// ---------------------------------------------------------------------------
// Mordell-curve reduction
// ---------------------------------------------------------------------------

/// Parameters of the cubic reduction 2x^2 - 1 = a*(b^r y^3 - 1)/(b-1).
/// `a0` is 4a(b-1)^2 b^r ((b-1)-a), the constant the |A0| < 4b^6 bound
/// chain is stated for; `curve_a0` = 2a(b-1)b^r * a0 is the constant the
/// substitution X = 4a(b-1)^2 b^r x, Y = 2a(b-1)b^r y actually produces
/// in X^2 = Y^3 + A0. Both vanish exactly when a = b-1.
struct EllipticInstance {
    unsigned long digit = 0;
    unsigned long base = 0;
    unsigned r = 0;
    Int a0;
    Int curve_a0;
    bool zero = false;
};

/// Exact instance constants. Requires 1 <= a <= b-1 and r in {0,1,2}.
EllipticInstance elliptic_params(unsigned long a, unsigned long base, unsigned r);

struct CurvePoint {
    Int x;
    Int y;
    bool operator==(const CurvePoint&) const = default;
};

/// Maps a solution (x, y) of 2x^2 - 1 = a*(b^r y^3 - 1)/(b-1) to the
/// point (4a(b-1)^2 b^r x, 2a(b-1)b^r y) and verifies exactly that it
/// lies on X^2 = Y^3 + curve_a0. Rejects (x, y) that do not satisfy the
/// cubic equation and the degenerate a = b-1 case.
CurvePoint elliptic_map(const Int& x, const Int& y, unsigned long a,
                        unsigned long base, unsigned r);

/// All integer points (X, Y) on X^2 = Y^3 + a0 with |Y| <= y_max, by
/// testing Y^3 + a0 for squareness. Complete within the window; sorted
/// by (Y, X). Rejects a0 = 0.
std::vector<CurvePoint> enumerate_integer_points(const Int& a0, const Int& y_max);

// ---------------------------------------------------------------------------
// gcd reduction of two odd-index repdigit solutions
// ---------------------------------------------------------------------------

struct GcdReduction {
    unsigned long a3c = 0;  // reduced digit, <= (b-1)^2
    unsigned long m3 = 0;   // gcd(m1, m2)
};

/// gcd(a1*(b^{m1}-1)/(b-1), a2*(b^{m2}-1)/(b-1)) decomposed as
/// a3c * (b^{m3}-1)/(b-1) with m3 = gcd(m1, m2); checks that the
/// repunit of length m3 divides the gcd and that a3c <= (b-1)^2.
GcdReduction gcd_reduction(unsigned long a1, unsigned long m1, unsigned long a2,
                           unsigned long m2, unsigned long base);

// ---------------------------------------------------------------------------
// Congruences modulo b^m / b^{2m}
// ---------------------------------------------------------------------------

struct TaylorReport {
    Int x1;
    Int x_n;
    Int modulus;       // b^{2m}
    bool max_digit = false;  // a = b-1 specialization also checked
    std::vector<Evidence> falsifications;
    bool ok() const { return falsifications.empty(); }
};

/// For X_1 = a*(b^m-1)/(b-1) and odd n, verifies
///   X_n == P_n(-a*w) + P'_n(-a*w)*a*w*b^m   (mod b^{2m}),
/// where w is the inverse of b-1 mod b^{2m}; when a = b-1 additionally
/// X_n == -1 + n^2 b^m (mod b^{2m}); when c_expected is given,
/// (b-1)*X_n == -c (mod b^m). Exact modular arithmetic throughout.
TaylorReport taylor_congruence_check(unsigned long base, unsigned long a,
                                     unsigned long m, unsigned long n_odd,
                                     std::optional<unsigned long> c_expected = {});

// ---------------------------------------------------------------------------
// Root-of-unity exclusion
// ---------------------------------------------------------------------------

enum class Lemma3Branch {
    not_unit_root,        // 2a != b-1: beta is not a root of unity
    gamma_contradiction,  // 2a = b-1: beta has order 3; gamma = 1 forces c = -(b-1)
};

struct Lemma3Result {
    bool holds = false;
    Lemma3Branch branch = Lemma3Branch::not_unit_root;
};

/// Decides, exactly and with rational arithmetic only, that the system
/// beta^{-n} = beta^n = gamma^{+-1} has no solution for
/// beta = -a/(b-1) + sqrt((a/(b-1))^2 - 1), gamma likewise with digit c.
/// Requires 1 <= a < b-1, 1 <= c <= (b-1)^2, n odd.
Lemma3Result lemma3_check(unsigned long a, unsigned long c, unsigned long base,
                          unsigned long n_odd);

// ---------------------------------------------------------------------------
// Divisibility of the repdigit defect by b^m
// ---------------------------------------------------------------------------

enum class ValuationBranch {
    product,     // b^m | num(P_n(-a/(b-1)) + c/(b-1)), the generic case
    derivative,  // that quantity is 0; b^m | num(P'_n(-a/(b-1)))
};

struct ValuationReport {
    ValuationBranch branch = ValuationBranch::product;
    unsigned long ell = 0;  // recovered from X_n = c*(b^{m*ell}-1)/(b-1)
    Rational quantity;      // the rational whose numerator was tested
    std::vector<Evidence> falsifications;
    bool ok() const { return falsifications.empty(); }
};

/// For a verified instance X_1 = a*(b^m-1)/(b-1) (a <= (b-1)^2),
/// X_n = c*(b^{m*ell}-1)/(b-1) (c <= b-1, n odd > 1), verifies that b^m
/// divides the numerator, in reduced form, of
/// P_n(-a/(b-1)) + c/(b-1); if that rational is exactly zero, verifies
/// b^m | num(P'_n(-a/(b-1))) instead. beta^n is computed as an exact
/// quadratic pair and cross-checked against the Chebyshev recurrences
/// (u_n = P_n(x), n*v_n = P'_n(x)). Rejects non-instances.
ValuationReport valuation_divisibility_check(unsigned long base, unsigned long a,
                                             unsigned long c, unsigned long n_odd,
                                             unsigned long m);

// ---------------------------------------------------------------------------
// Primitive parts and the mixed-parity tail
// ---------------------------------------------------------------------------

/// Y_k with every prime factor shared with some earlier Y_s (s < k)
/// stripped out by repeated gcds. A result > 1 certifies a prime factor
/// of Y_k dividing no earlier term, without factoring. Requires k >= 2.
Int primitive_part(const Int& d, unsigned long k);

struct MixedParityReport {
    unsigned long m_prime_max = 0;  // largest m' with 2^{m'-1} <= 2a^2
    Int b_cubed;
    bool chain_holds = false;       // m' <= m_prime_max <= b^3
    double log_d_bound = 0.0;       // b^4, natural-log scale
    std::vector<Evidence> falsifications;
    bool ok() const { return falsifications.empty(); }
};

/// Verifies the even base mixed-parity chain: 2^{m'-1} <= 2a^2 <= b^3,
/// hence m' <= b^3 and log d < b^3 log b < b^4 (log-scale). Inputs may
/// be synthetic; an m' exceeding the 2a^2 ceiling is reported as
/// falsification evidence of the premise.
MixedParityReport mixed_parity_bound_check(unsigned long base_even,
                                           unsigned long m_prime, unsigned long a);

struct BracketReport {
    Int x1;
    bool lower_holds = false;  // b^{m-1} < 2*X_1 - 1 < alpha
    bool upper_holds = false;  // alpha < 2*X_1 <= 2*b^{m+2}
};

/// Exact integer bracketing of alpha = X_1 + sqrt(X_1^2 - 1) for
/// X_1 = a*(b^m-1)/(b-1): checks b^{m-1} < 2*X_1 and X_1 <= b^{m+2},
/// which pin alpha into (b^{m-1}, 2 b^{m+2}) via 2*X_1 - 1 < alpha < 2*X_1.
/// Intended for m >= 100.
BracketReport bracket_check(unsigned long base, unsigned long a, unsigned long m);

// ---------------------------------------------------------------------------
// Suites (each emits one CheckLine per named check, in a fixed order)
// ---------------------------------------------------------------------------

SuiteReport run_even_case_suite(unsigned long base, unsigned long d_max,
                                unsigned long n_max);
SuiteReport run_gcd_suite(unsigned long base_max, unsigned long m_max,
                          unsigned long d_max, unsigned long n_max);
SuiteReport run_taylor_suite(unsigned long base, unsigned long m_max,
                             unsigned long n_max);
SuiteReport run_lemma3_suite(unsigned long base_max, unsigned long n_max);
SuiteReport run_primitive_suite(unsigned long d_max, unsigned long k_min,
                                unsigned long k_max);
SuiteReport run_elliptic_suite(unsigned long base_max, const Int& x_max,
                               const Int& y_max, unsigned long bound_base_max);
SuiteReport run_bracket_suite(unsigned long base_max, unsigned long m);

}  // namespace pellrep
