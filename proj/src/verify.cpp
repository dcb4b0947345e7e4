#include "pellrep/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pellrep/quadratic.hpp"

namespace pellrep {

namespace {

Evidence make_evidence(std::string check, std::string message,
                       std::vector<std::pair<std::string, std::string>> data = {}) {
    return Evidence{std::move(check), std::move(message), std::move(data)};
}

bool divisible(const Int& a, const Int& b) {
    return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

Int mod_reduce(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Even-index solutions
// ---------------------------------------------------------------------------

EvenCaseClassification classify_even_solution(const Int& d, unsigned long n_even,
                                              unsigned long a, unsigned long m,
                                              unsigned long base) {
    if (base < 2) throw precondition_error("classify_even_solution: base must be >= 2");
    if (a < 1 || a > base - 1)
        throw precondition_error("classify_even_solution: digit out of range");
    if (m < 1) throw precondition_error("classify_even_solution: m must be >= 1");
    if (n_even < 2 || n_even % 2 != 0)
        throw precondition_error("classify_even_solution: n must be even and >= 2");

    const PellOrbit orbit = fundamental_solution(d);
    const Int x_n = nth_solution(orbit, n_even).x;
    if (x_n != Int(a) * repunit(base, m))
        throw precondition_error("classify_even_solution: (n, a, m) is not a solution");

    const unsigned long n1 = n_even / 2;
    const Int x_n1 = nth_solution(orbit, n1).x;

    EvenCaseClassification out;
    out.n1 = n1;
    out.x_n1 = x_n1;
    out.m = m;

    auto values = [&](std::vector<std::pair<std::string, std::string>> extra = {}) {
        std::vector<std::pair<std::string, std::string>> kv = {
            {"d", to_decimal(d)},      {"n", std::to_string(n_even)},
            {"a", std::to_string(a)},  {"m", std::to_string(m)},
            {"base", std::to_string(base)}, {"x_n1", to_decimal(x_n1)},
        };
        kv.insert(kv.end(), extra.begin(), extra.end());
        return kv;
    };

    if (a < base - 1) {
        out.branch = EvenBranch::digit_below_max;
        return out;
    }

    if (m == 1) {
        out.branch = EvenBranch::max_digit_single;
        if (!(d < Int(base)))
            throw falsification_error(make_evidence(
                "even-single-digit-bound", "d < b fails for a max-digit single-digit solution",
                values()));
        return out;
    }

    out.branch = EvenBranch::max_digit_power;
    out.two_exponent = (m - 1) / 2;

    if (2 * x_n1 * x_n1 != ipow(base, m))
        throw falsification_error(make_evidence(
            "even-power-structure", "2*X_{n/2}^2 != b^m in the max-digit branch", values()));
    if (base % 2 != 0)
        throw falsification_error(make_evidence(
            "even-power-structure", "odd base admits a max-digit power solution", values()));
    if (x_n1 % 2 != 0)
        throw falsification_error(
            make_evidence("even-power-structure", "X_{n/2} is odd", values()));
    if (n1 % 2 == 0)
        throw falsification_error(
            make_evidence("even-power-structure", "n/2 is even", values()));
    if (!same_radical(x_n1, Int(base)))
        throw falsification_error(make_evidence(
            "even-power-structure", "X_{n/2} and b have different prime sets", values()));
    if (nu_p(x_n1, 2) != nu_p(orbit.x1, 2))
        throw falsification_error(make_evidence(
            "two-adic-invariance", "nu_2(X_{n/2}) != nu_2(X_1) with n/2 odd", values()));
    if (!divisible(orbit.x1, ipow(2UL, out.two_exponent)))
        throw falsification_error(make_evidence(
            "even-power-divisibility", "2^floor((m-1)/2) does not divide X_1",
            values({{"x1", to_decimal(orbit.x1)}})));
    return out;
}

FactorSplit trial_factor(const Int& n, unsigned long limit) {
    if (n < 1) throw precondition_error("trial_factor: n must be >= 1");
    FactorSplit out;
    Int rest = n;
    auto strip = [&](unsigned long p) {
        if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            out.primes.emplace_back(p);
            do {
                mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            } while (mpz_divisible_ui_p(rest.get_mpz_t(), p));
        }
    };
    strip(2);
    strip(3);
    for (unsigned long p = 5; p <= limit; p += 6) {
        if (Int(p) * p > rest) break;
        strip(p);
        strip(p + 2);
    }
    if (rest > 1) {
        if (Int(limit) * limit >= rest || mpz_probab_prime_p(rest.get_mpz_t(), 30) != 0) {
            out.primes.push_back(rest);
        } else {
            out.cofactor = rest;
            out.undecided = rest > Int("1000000000000");
        }
    }
    return out;
}

bool divides_radical(Int x, const Int& y) {
    if (x < 0) x = -x;
    if (x == 0) return false;
    while (x != 1) {
        Int g;
        mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
        if (g == 1) return false;
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
    return true;
}

bool same_radical(const Int& x, const Int& y) {
    return divides_radical(x, y) && divides_radical(y, x);
}

EvenUniquenessReport even_uniqueness_check(unsigned long base, unsigned long d_max,
                                           unsigned long n_max) {
    if (base < 2 || base % 2 != 0)
        throw precondition_error("even_uniqueness_check: base must be even and >= 2");
    EvenUniquenessReport report;
    report.base = base;

    for (unsigned long dv = 2; dv <= d_max; ++dv) {
        const Int d(dv);
        if (is_square(d)) continue;
        ++report.d_scanned;
        const PellOrbit orbit = fundamental_solution(d);

        unsigned long power_solutions = 0;
        PellWalker walker(orbit);
        for (unsigned long n = 1; n <= n_max; walker.advance(), ++n) {
            if (n % 2 != 0) continue;
            const auto form = as_repdigit(walker.x(), base);
            if (!form || form->digit != base - 1 || form->length <= 1) continue;
            ++power_solutions;
            ++report.power_hits;
            try {
                classify_even_solution(d, n, form->digit, form->length, base);
            } catch (const falsification_error& fe) {
                report.falsifications.push_back(fe.evidence);
            }
        }
        if (power_solutions > 1)
            report.falsifications.push_back(make_evidence(
                "power-branch-uniqueness", "two max-digit power solutions for one modulus",
                {{"d", to_decimal(d)}, {"count", std::to_string(power_solutions)}}));

        const Int x1 = nth_solution(orbit, 1).x;
        const Int x3 = nth_solution(orbit, 3).x;
        const Int x5 = nth_solution(orbit, 5).x;
        const std::pair<const Int*, const Int*> pairs[] = {{&x1, &x3}, {&x1, &x5}, {&x3, &x5}};
        const char* names[] = {"X1-X3", "X1-X5", "X3-X5"};
        for (int i = 0; i < 3; ++i) {
            if (same_radical(*pairs[i].first, *pairs[i].second)) {
                auto sets = [&](const Int& v) {
                    std::string s;
                    const FactorSplit f = trial_factor(v);
                    for (const Int& prime : f.primes) s += to_decimal(prime) + " ";
                    if (f.cofactor > 1)
                        s += "*" + to_decimal(f.cofactor) + (f.undecided ? " (undecided)" : "");
                    return s;
                };
                report.falsifications.push_back(make_evidence(
                    "prime-set-distinctness", "equal prime-factor sets",
                    {{"d", to_decimal(d)},
                     {"pair", names[i]},
                     {"left", sets(*pairs[i].first)},
                     {"right", sets(*pairs[i].second)}}));
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Mordell-curve reduction
// ---------------------------------------------------------------------------

EllipticInstance elliptic_params(unsigned long a, unsigned long base, unsigned r) {
    if (base < 2) throw precondition_error("elliptic_params: base must be >= 2");
    if (a < 1 || a > base - 1)
        throw precondition_error("elliptic_params: digit out of range");
    if (r > 2) throw precondition_error("elliptic_params: r must be in {0,1,2}");
    EllipticInstance inst;
    inst.digit = a;
    inst.base = base;
    inst.r = r;
    const Int bm1 = Int(base) - 1;
    const Int br = ipow(base, r);
    inst.a0 = 4 * Int(a) * bm1 * bm1 * br * (bm1 - Int(a));
    inst.curve_a0 = 2 * Int(a) * bm1 * br * inst.a0;
    inst.zero = (a == base - 1);
    return inst;
}

CurvePoint elliptic_map(const Int& x, const Int& y, unsigned long a,
                        unsigned long base, unsigned r) {
    const EllipticInstance inst = elliptic_params(a, base, r);
    if (inst.zero)
        throw precondition_error("elliptic_map: a = b-1 degenerates the curve constant");
    const Int bm1 = Int(base) - 1;
    const Int br = ipow(base, r);
    // 2x^2 - 1 = a (b^r y^3 - 1)/(b-1), cleared of the denominator.
    if (bm1 * (2 * x * x - 1) != Int(a) * (br * y * y * y - 1))
        throw precondition_error("elliptic_map: (x, y) does not satisfy the cubic equation");
    CurvePoint point;
    point.x = 4 * Int(a) * bm1 * bm1 * br * x;
    point.y = 2 * Int(a) * bm1 * br * y;
    if (point.x * point.x != point.y * point.y * point.y + inst.curve_a0)
        throw identity_violation("elliptic_map: mapped point misses the curve");
    return point;
}

std::vector<CurvePoint> enumerate_integer_points(const Int& a0, const Int& y_max) {
    if (a0 == 0) throw precondition_error("enumerate_integer_points: a0 must be nonzero");
    if (y_max < 0) throw precondition_error("enumerate_integer_points: y_max must be >= 0");
    std::vector<CurvePoint> out;
    for (Int y = -y_max; y <= y_max; ++y) {
        const Int rhs = y * y * y + a0;
        if (rhs < 0) continue;
        if (rhs == 0) {
            out.push_back({Int(0), y});
            continue;
        }
        Int root, rem;
        mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), rhs.get_mpz_t());
        if (rem == 0) {
            out.push_back({-root, y});
            out.push_back({root, y});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// gcd reduction
// ---------------------------------------------------------------------------

GcdReduction gcd_reduction(unsigned long a1, unsigned long m1, unsigned long a2,
                           unsigned long m2, unsigned long base) {
    if (base < 2) throw precondition_error("gcd_reduction: base must be >= 2");
    if (a1 < 1 || a1 > base - 1 || a2 < 1 || a2 > base - 1)
        throw precondition_error("gcd_reduction: digits out of range");
    if (m1 < 1 || m2 < 1) throw precondition_error("gcd_reduction: lengths must be >= 1");

    const Int n1 = Int(a1) * repunit(base, m1);
    const Int n2 = Int(a2) * repunit(base, m2);
    Int g;
    mpz_gcd(g.get_mpz_t(), n1.get_mpz_t(), n2.get_mpz_t());

    const unsigned long m3 = std::gcd(m1, m2);
    const Int r3 = repunit(base, m3);
    auto values = [&] {
        return std::vector<std::pair<std::string, std::string>>{
            {"base", std::to_string(base)}, {"a1", std::to_string(a1)},
            {"m1", std::to_string(m1)},     {"a2", std::to_string(a2)},
            {"m2", std::to_string(m2)},     {"gcd", to_decimal(g)}};
    };
    if (!divisible(g, r3))
        throw falsification_error(make_evidence(
            "gcd-reduction-shape", "repunit of length gcd(m1,m2) does not divide the gcd",
            values()));
    const Int cofactor = g / r3;
    if (cofactor > Int(base - 1) * (base - 1))
        throw falsification_error(make_evidence(
            "gcd-reduction-cofactor", "reduced digit exceeds (b-1)^2", values()));
    return GcdReduction{cofactor.get_ui(), m3};
}

// ---------------------------------------------------------------------------
// Congruences
// ---------------------------------------------------------------------------

TaylorReport taylor_congruence_check(unsigned long base, unsigned long a,
                                     unsigned long m, unsigned long n_odd,
                                     std::optional<unsigned long> c_expected) {
    if (base < 2) throw precondition_error("taylor_congruence_check: base must be >= 2");
    if (a < 1 || a > (base - 1) * (base - 1))
        throw precondition_error("taylor_congruence_check: digit out of range");
    if (m < 1) throw precondition_error("taylor_congruence_check: m must be >= 1");
    if (n_odd % 2 != 1)
        throw precondition_error("taylor_congruence_check: n must be odd");

    const Int x1 = Int(a) * repunit(base, m);
    if (x1 < 2) throw precondition_error("taylor_congruence_check: X_1 must be >= 2");

    const PellOrbit orbit = orbit_from_x(x1);
    const Int x_n = nth_solution(orbit, n_odd).x;

    const Int b_m = ipow(base, m);
    const Int modulus = b_m * b_m;  // b^{2m}
    Int w;                          // inverse of b-1 mod b^{2m}
    const Int bm1 = Int(base) - 1;
    if (mpz_invert(w.get_mpz_t(), bm1.get_mpz_t(), modulus.get_mpz_t()) == 0)
        throw identity_violation("taylor_congruence_check: b-1 not invertible mod b^{2m}");

    TaylorReport report;
    report.x1 = x1;
    report.x_n = x_n;
    report.modulus = modulus;

    auto values = [&] {
        return std::vector<std::pair<std::string, std::string>>{
            {"base", std::to_string(base)}, {"a", std::to_string(a)},
            {"m", std::to_string(m)},       {"n", std::to_string(n_odd)},
            {"x1", to_decimal(x1)}};
    };

    const Int x0 = mod_reduce(-Int(a) * w, modulus);
    const ChebyshevResidues res = chebyshev_mod(n_odd, x0, modulus);
    const Int rhs = mod_reduce(res.value + res.derivative * Int(a) * w * b_m, modulus);
    const Int lhs = mod_reduce(x_n, modulus);
    if (lhs != rhs)
        report.falsifications.push_back(make_evidence(
            "taylor-congruence",
            "X_n != P_n(-a/(b-1)) + P'_n(-a/(b-1)) * (a/(b-1)) b^m mod b^{2m}", values()));

    if (a == base - 1) {
        report.max_digit = true;
        const Int rhs2 = mod_reduce(Int(n_odd) * Int(n_odd) * b_m - 1, modulus);
        if (lhs != rhs2)
            report.falsifications.push_back(make_evidence(
                "max-digit-congruence", "X_n != -1 + n^2 b^m mod b^{2m}", values()));
    }

    if (c_expected) {
        if (*c_expected < 1 || *c_expected > base - 1)
            throw precondition_error("taylor_congruence_check: expected digit out of range");
        if (mod_reduce(bm1 * x_n + Int(*c_expected), b_m) != 0)
            report.falsifications.push_back(make_evidence(
                "repdigit-shape-congruence", "(b-1) X_n != -c mod b^m", values()));
    }
    return report;
}

// ---------------------------------------------------------------------------
// Root-of-unity exclusion
// ---------------------------------------------------------------------------

Lemma3Result lemma3_check(unsigned long a, unsigned long c, unsigned long base,
                          unsigned long n_odd) {
    if (base < 3) throw precondition_error("lemma3_check: base must be >= 3");
    if (a < 1 || a >= base - 1)
        throw precondition_error("lemma3_check: requires 1 <= a < b-1");
    if (c < 1 || c > (base - 1) * (base - 1))
        throw precondition_error("lemma3_check: requires 1 <= c <= (b-1)^2");
    if (n_odd % 2 != 1) throw precondition_error("lemma3_check: n must be odd");

    // beta = x + sqrt(x^2-1) with x = -a/(b-1) in (-1, 0) lies on the unit
    // circle; beta^{2n} = 1 with n odd forces beta to be a root of unity of
    // order 1, 2, 3 or 6, i.e. x in {+-1, +-1/2}. The range excludes +-1,
    // so the only live case is 2a = b-1 (x = -1/2, beta of order 3).
    const Rational x = make_rational(-Int(a), Int(base) - 1);
    if (2 * a != base - 1) {
        // x is not +-1 or +-1/2: beta is not a root of unity, so
        // beta^n = beta^{-n} already fails.
        return Lemma3Result{true, Lemma3Branch::not_unit_root};
    }

    // Exact confirmation that beta^3 = 1 for x = -1/2.
    const QuadraticPair beta = unit_from_half_trace(x);
    const QuadraticPair cube = beta.pow(3);
    if (!(cube.u == 1 && cube.v == 0))
        throw identity_violation("lemma3_check: beta^3 != 1 at x = -1/2");

    // If 3 | n then beta^n = 1 and gamma^{+-1} = 1 forces
    // -c/(b-1) = 1, i.e. c = -(b-1) < 0, impossible for c >= 1.
    // If 3 does not divide n, beta^{2n} != 1 and the system already fails.
    const Rational gamma_half_trace = make_rational(-Int(c), Int(base) - 1);
    if (gamma_half_trace == 1)
        return Lemma3Result{false, Lemma3Branch::gamma_contradiction};  // unreachable: c >= 1
    return Lemma3Result{true, Lemma3Branch::gamma_contradiction};
}

// ---------------------------------------------------------------------------
// Divisibility of the repdigit defect
// ---------------------------------------------------------------------------

ValuationReport valuation_divisibility_check(unsigned long base, unsigned long a,
                                             unsigned long c, unsigned long n_odd,
                                             unsigned long m) {
    if (base < 2) throw precondition_error("valuation_divisibility_check: base must be >= 2");
    if (a < 1 || a > (base - 1) * (base - 1))
        throw precondition_error("valuation_divisibility_check: a out of range");
    if (c < 1 || c > base - 1)
        throw precondition_error("valuation_divisibility_check: c out of range");
    if (n_odd < 3 || n_odd % 2 != 1)
        throw precondition_error("valuation_divisibility_check: n must be odd and > 1");
    if (m < 1) throw precondition_error("valuation_divisibility_check: m must be >= 1");

    const Int x1 = Int(a) * repunit(base, m);
    if (x1 < 2) throw precondition_error("valuation_divisibility_check: X_1 must be >= 2");
    const Int x_n = nth_solution(orbit_from_x(x1), n_odd).x;

    // Recover ell from X_n = c (b^{m ell} - 1)/(b-1).
    ValuationReport report;
    const Int bm1 = Int(base) - 1;
    Int scaled = bm1 * x_n + c;
    if (!divisible(scaled, Int(c)))
        throw precondition_error("valuation_divisibility_check: X_n is not a length-c repdigit");
    Int power = scaled / c;
    unsigned long e = 0;
    while (power > 1 && mpz_divisible_ui_p(power.get_mpz_t(), base)) {
        mpz_divexact_ui(power.get_mpz_t(), power.get_mpz_t(), base);
        ++e;
    }
    if (power != 1 || e < m || e % m != 0)
        throw precondition_error(
            "valuation_divisibility_check: X_n does not have the required repdigit shape");
    report.ell = e / m;

    const Rational x = make_rational(-Int(a), bm1);
    const QuadraticPair beta_n = unit_from_half_trace(x).pow(n_odd);

    // Cross-checks tying the quadratic-pair arithmetic to the recurrences.
    if (beta_n.u != chebyshev_P(n_odd, x))
        throw identity_violation("valuation_divisibility_check: u_n != P_n(x)");
    const Rational p_prime = chebyshev_P_prime(n_odd, x);
    if (Rational(n_odd) * beta_n.v != p_prime)
        throw identity_violation("valuation_divisibility_check: n*v_n != P'_n(x)");

    const Int b_m = ipow(base, m);
    auto values = [&] {
        return std::vector<std::pair<std::string, std::string>>{
            {"base", std::to_string(base)}, {"a", std::to_string(a)},
            {"c", std::to_string(c)},       {"n", std::to_string(n_odd)},
            {"m", std::to_string(m)},       {"ell", std::to_string(report.ell)}};
    };

    const Rational defect = beta_n.u + make_rational(Int(c), bm1);
    if (defect != 0) {
        report.branch = ValuationBranch::product;
        report.quantity = defect;
        if (!divisible(numerator(defect), b_m))
            report.falsifications.push_back(make_evidence(
                "defect-divisibility",
                "b^m does not divide the numerator of P_n(-a/(b-1)) + c/(b-1)", values()));
    } else {
        report.branch = ValuationBranch::derivative;
        report.quantity = p_prime;
        if (!divisible(numerator(p_prime), b_m))
            report.falsifications.push_back(make_evidence(
                "derivative-divisibility",
                "b^m does not divide the numerator of P'_n(-a/(b-1))", values()));
    }
    return report;
}

// ---------------------------------------------------------------------------
// Primitive parts and the mixed-parity tail
// ---------------------------------------------------------------------------

Int primitive_part(const Int& d, unsigned long k) {
    if (k < 2) throw precondition_error("primitive_part: k must be >= 2");
    const PellOrbit orbit = fundamental_solution(d);
    std::vector<Int> earlier;
    earlier.reserve(k - 1);
    PellWalker walker(orbit);
    for (unsigned long s = 1; s < k; ++s, walker.advance()) earlier.push_back(walker.y());
    Int value = walker.y();
    for (const Int& y_s : earlier) {
        Int g;
        mpz_gcd(g.get_mpz_t(), value.get_mpz_t(), y_s.get_mpz_t());
        while (g > 1) {
            mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), g.get_mpz_t());
            mpz_gcd(g.get_mpz_t(), value.get_mpz_t(), y_s.get_mpz_t());
        }
    }
    return value;
}

MixedParityReport mixed_parity_bound_check(unsigned long base_even,
                                           unsigned long m_prime, unsigned long a) {
    if (base_even < 2 || base_even % 2 != 0)
        throw precondition_error("mixed_parity_bound_check: base must be even");
    if (a < 1) throw precondition_error("mixed_parity_bound_check: a must be >= 1");
    if (m_prime < 1) throw precondition_error("mixed_parity_bound_check: m' must be >= 1");

    MixedParityReport report;
    const Int ceiling = 2 * Int(a) * Int(a);
    // largest m' with 2^{m'-1} <= 2a^2 is the bit length of 2a^2
    report.m_prime_max =
        static_cast<unsigned long>(mpz_sizeinbase(ceiling.get_mpz_t(), 2));
    report.b_cubed = ipow(base_even, 3);
    report.chain_holds = Int(report.m_prime_max) <= report.b_cubed;
    report.log_d_bound = std::pow(static_cast<double>(base_even), 4.0);

    if (!report.chain_holds)
        report.falsifications.push_back(make_evidence(
            "mixed-parity-chain", "m' ceiling exceeds b^3",
            {{"base", std::to_string(base_even)}, {"a", std::to_string(a)},
             {"m_prime_max", std::to_string(report.m_prime_max)}}));
    if (m_prime > report.m_prime_max)
        report.falsifications.push_back(make_evidence(
            "mixed-parity-premise", "2^{m'-1} <= 2a^2 fails for the given m'",
            {{"base", std::to_string(base_even)}, {"a", std::to_string(a)},
             {"m_prime", std::to_string(m_prime)}}));
    // log d < b^3 log b < b^4, on the natural-log scale
    const double log_b = std::log(static_cast<double>(base_even));
    if (!(static_cast<double>(base_even) * static_cast<double>(base_even) *
              static_cast<double>(base_even) * log_b <
          report.log_d_bound))
        report.falsifications.push_back(make_evidence(
            "mixed-parity-log-bound", "b^3 log b < b^4 fails",
            {{"base", std::to_string(base_even)}}));
    return report;
}

BracketReport bracket_check(unsigned long base, unsigned long a, unsigned long m) {
    if (base < 2) throw precondition_error("bracket_check: base must be >= 2");
    if (a < 1 || a > base - 1) throw precondition_error("bracket_check: digit out of range");
    if (m < 1) throw precondition_error("bracket_check: m must be >= 1");
    BracketReport report;
    report.x1 = Int(a) * repunit(base, m);
    if (report.x1 < 2) throw precondition_error("bracket_check: X_1 must be >= 2");
    // 2X_1 - 1 < alpha < 2X_1 for X_1 >= 2, so these integer comparisons
    // bracket alpha strictly between b^{m-1} and 2 b^{m+2}.
    report.lower_holds = ipow(base, m - 1) < 2 * report.x1;
    report.upper_holds = report.x1 <= ipow(base, m + 2);
    return report;
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

namespace {

void finish_check(SuiteReport& report, CheckLine line,
                  std::vector<Evidence> evidence = {}) {
    line.passed = evidence.empty();
    report.checks.push_back(std::move(line));
    for (auto& e : evidence) report.falsifications.push_back(std::move(e));
}

}  // namespace

SuiteReport run_even_case_suite(unsigned long base, unsigned long d_max,
                                unsigned long n_max) {
    if (base < 2) throw precondition_error("even-case suite: base must be >= 2");
    SuiteReport report;
    report.suite = "even-case";

    // Classify every even-index repdigit hit in the window.
    CheckLine classify_line{"even-hit-classification", 0, true, {}};
    std::vector<Evidence> classify_evidence;
    unsigned long branch_counts[3] = {0, 0, 0};
    std::vector<std::pair<Int, unsigned long>> power_per_d;
    for (unsigned long dv = 2; dv <= d_max; ++dv) {
        const Int d(dv);
        if (is_square(d)) continue;
        const PellOrbit orbit = fundamental_solution(d);
        unsigned long power_here = 0;
        PellWalker walker(orbit);
        for (unsigned long n = 1; n <= n_max; walker.advance(), ++n) {
            if (n % 2 != 0) continue;
            const auto form = as_repdigit(walker.x(), base);
            if (!form) continue;
            ++classify_line.cases;
            try {
                const auto cls =
                    classify_even_solution(d, n, form->digit, form->length, base);
                ++branch_counts[static_cast<int>(cls.branch)];
                if (cls.branch == EvenBranch::max_digit_power) ++power_here;
            } catch (const falsification_error& fe) {
                classify_evidence.push_back(fe.evidence);
            }
        }
        power_per_d.emplace_back(d, power_here);
    }
    classify_line.data = {
        {"digit_below_max", std::to_string(branch_counts[0])},
        {"max_digit_single", std::to_string(branch_counts[1])},
        {"max_digit_power", std::to_string(branch_counts[2])}};
    finish_check(report, std::move(classify_line), std::move(classify_evidence));

    // At most one max-digit power solution per modulus.
    CheckLine unique_line{"power-branch-uniqueness", 0, true, {}};
    std::vector<Evidence> unique_evidence;
    for (const auto& [d, count] : power_per_d) {
        ++unique_line.cases;
        if (count > 1)
            unique_evidence.push_back(make_evidence(
                "power-branch-uniqueness", "two max-digit power solutions for one modulus",
                {{"d", to_decimal(d)}, {"count", std::to_string(count)}}));
    }
    finish_check(report, std::move(unique_line), std::move(unique_evidence));

    // X_1, X_3, X_5 never share a prime-factor set.
    CheckLine radical_line{"prime-set-distinctness", 0, true, {}};
    std::vector<Evidence> radical_evidence;
    for (unsigned long dv = 2; dv <= d_max; ++dv) {
        const Int d(dv);
        if (is_square(d)) continue;
        ++radical_line.cases;
        const PellOrbit orbit = fundamental_solution(d);
        const Int x1 = nth_solution(orbit, 1).x;
        const Int x3 = nth_solution(orbit, 3).x;
        const Int x5 = nth_solution(orbit, 5).x;
        if (same_radical(x1, x3) || same_radical(x1, x5) || same_radical(x3, x5))
            radical_evidence.push_back(make_evidence(
                "prime-set-distinctness", "two of X_1, X_3, X_5 share their prime set",
                {{"d", to_decimal(d)}}));
    }
    finish_check(report, std::move(radical_line), std::move(radical_evidence));

    // Mixed-parity ceiling chain over the generalized digit range.
    CheckLine mixed_line{"mixed-parity-chain", 0, true, {}};
    std::vector<Evidence> mixed_evidence;
    if (base % 2 == 0) {
        for (unsigned long a = 1; a <= (base - 1) * (base - 1); ++a) {
            ++mixed_line.cases;
            const auto mixed = mixed_parity_bound_check(base, 1, a);
            for (const auto& e : mixed.falsifications) mixed_evidence.push_back(e);
        }
    } else {
        mixed_line.data = {{"note", "even base only"}};
    }
    finish_check(report, std::move(mixed_line), std::move(mixed_evidence));

    return report;
}

SuiteReport run_gcd_suite(unsigned long base_max, unsigned long m_max,
                          unsigned long d_max, unsigned long n_max) {
    if (base_max < 2) throw precondition_error("gcd suite: base-max must be >= 2");
    SuiteReport report;
    report.suite = "gcd";

    CheckLine power_line{"power-minus-one-gcd", 0, true, {}};
    std::vector<Evidence> power_evidence;
    for (unsigned long b = 2; b <= base_max; ++b)
        for (unsigned long m1 = 1; m1 <= m_max; ++m1)
            for (unsigned long m2 = 1; m2 <= m_max; ++m2) {
                ++power_line.cases;
                try {
                    gcd_power_minus_one(b, m1, m2);
                } catch (const identity_violation& iv) {
                    power_evidence.push_back(make_evidence(
                        "power-minus-one-gcd", iv.what(),
                        {{"base", std::to_string(b)}, {"m1", std::to_string(m1)},
                         {"m2", std::to_string(m2)}}));
                }
            }
    finish_check(report, std::move(power_line), std::move(power_evidence));

    CheckLine cofactor_line{"digit-cofactor-bound", 0, true, {}};
    std::vector<Evidence> cofactor_evidence;
    const unsigned long m_cap = std::min<unsigned long>(m_max, 8);
    for (unsigned long b = 2; b <= base_max; ++b)
        for (unsigned long a1 = 1; a1 <= b - 1; ++a1)
            for (unsigned long m1 = 1; m1 <= m_cap; ++m1)
                for (unsigned long a2 = 1; a2 <= b - 1; ++a2)
                    for (unsigned long m2 = 1; m2 <= m_cap; ++m2) {
                        ++cofactor_line.cases;
                        try {
                            gcd_reduction(a1, m1, a2, m2, b);
                        } catch (const falsification_error& fe) {
                            cofactor_evidence.push_back(fe.evidence);
                        }
                    }
    finish_check(report, std::move(cofactor_line), std::move(cofactor_evidence));

    CheckLine xgcd_line{"x-gcd-identity", 0, true, {}};
    std::vector<Evidence> xgcd_evidence;
    for (unsigned long dv = 2; dv <= d_max; ++dv) {
        const Int d(dv);
        if (is_square(d)) continue;
        const PellOrbit orbit = fundamental_solution(d);
        std::vector<Int> xs(n_max + 1);
        PellWalker walker(orbit);
        for (unsigned long n = 1; n <= n_max; walker.advance(), ++n) xs[n] = walker.x();
        for (unsigned long n1 = 1; n1 <= n_max; n1 += 2)
            for (unsigned long n2 = n1 + 2; n2 <= n_max; n2 += 2) {
                ++xgcd_line.cases;
                Int g;
                mpz_gcd(g.get_mpz_t(), xs[n1].get_mpz_t(), xs[n2].get_mpz_t());
                if (g != xs[std::gcd(n1, n2)])
                    xgcd_evidence.push_back(make_evidence(
                        "x-gcd-identity", "gcd(X_{n1}, X_{n2}) != X_{gcd(n1,n2)}",
                        {{"d", to_decimal(d)}, {"n1", std::to_string(n1)},
                         {"n2", std::to_string(n2)}}));
            }
    }
    finish_check(report, std::move(xgcd_line), std::move(xgcd_evidence));

    return report;
}

SuiteReport run_taylor_suite(unsigned long base, unsigned long m_max,
                             unsigned long n_max) {
    if (base < 2) throw precondition_error("taylor suite: base must be >= 2");
    SuiteReport report;
    report.suite = "taylor";

    CheckLine taylor_line{"taylor-congruence", 0, true, {}};
    CheckLine max_digit_line{"max-digit-congruence", 0, true, {}};
    std::vector<Evidence> taylor_evidence, max_digit_evidence;
    unsigned long degenerate = 0;
    for (unsigned long a = 1; a <= base - 1; ++a)
        for (unsigned long m = 1; m <= m_max; ++m) {
            if (Int(a) * repunit(base, m) < 2) {  // only a = 1, m = 1
                ++degenerate;
                continue;
            }
            for (unsigned long n = 1; n <= n_max; n += 2) {
                ++taylor_line.cases;
                const TaylorReport r = taylor_congruence_check(base, a, m, n);
                if (r.max_digit) ++max_digit_line.cases;
                for (const auto& e : r.falsifications) {
                    if (e.check == "max-digit-congruence")
                        max_digit_evidence.push_back(e);
                    else
                        taylor_evidence.push_back(e);
                }
            }
        }
    taylor_line.data = {{"degenerate_skipped", std::to_string(degenerate)}};
    finish_check(report, std::move(taylor_line), std::move(taylor_evidence));
    finish_check(report, std::move(max_digit_line), std::move(max_digit_evidence));

    // Exact values of the shifted polynomial at the max-digit point:
    // P_n(-1) = (-1)^n and P'_n(-1) = (-1)^{n-1} n^2, so odd n gives
    // the pair (-1, n^2).
    CheckLine shifted_line{"shifted-polynomial-values", 0, true, {}};
    std::vector<Evidence> shifted_evidence;
    {
        const Rational minus_one(-1);
        for (unsigned long n = 1; n <= 200; ++n) {
            ++shifted_line.cases;
            const Rational value = chebyshev_P(n, minus_one);
            const Rational deriv = chebyshev_P_prime(n, minus_one);
            const int sign = (n % 2 == 0) ? 1 : -1;
            const Rational expected_value(sign);
            const Rational expected_deriv = Rational(-sign) * Rational(n) * Rational(n);
            const bool odd_claim =
                n % 2 == 0 || (value == -1 && deriv == Rational(n) * Rational(n));
            if (value != expected_value || deriv != expected_deriv || !odd_claim)
                shifted_evidence.push_back(make_evidence(
                    "shifted-polynomial-values", "P_n(-1) or P'_n(-1) off its closed form",
                    {{"n", std::to_string(n)}}));
        }
    }
    finish_check(report, std::move(shifted_line), std::move(shifted_evidence));

    return report;
}

SuiteReport run_lemma3_suite(unsigned long base_max, unsigned long n_max) {
    if (base_max < 2) throw precondition_error("lemma3 suite: base-max must be >= 2");
    SuiteReport report;
    report.suite = "lemma3";

    CheckLine line{"unit-root-exclusion", 0, true, {}};
    std::vector<Evidence> evidence;
    for (unsigned long b = 3; b <= base_max; ++b)
        for (unsigned long a = 1; a + 1 < b; ++a)
            for (unsigned long c = 1; c <= (b - 1) * (b - 1); ++c)
                for (unsigned long n = 1; n <= n_max; n += 2) {
                    ++line.cases;
                    const Lemma3Result r = lemma3_check(a, c, b, n);
                    if (!r.holds)
                        evidence.push_back(make_evidence(
                            "unit-root-exclusion", "simultaneous system admits a solution",
                            {{"base", std::to_string(b)}, {"a", std::to_string(a)},
                             {"c", std::to_string(c)}, {"n", std::to_string(n)}}));
                }
    finish_check(report, std::move(line), std::move(evidence));
    return report;
}

SuiteReport run_primitive_suite(unsigned long d_max, unsigned long k_min,
                                unsigned long k_max) {
    if (k_min < 2) throw precondition_error("primitive suite: k-min must be >= 2");
    if (k_max < k_min) throw precondition_error("primitive suite: empty k range");
    SuiteReport report;
    report.suite = "primitive";

    CheckLine line{"primitive-part-positive", 0, true, {}};
    std::vector<Evidence> evidence;
    for (unsigned long dv = 2; dv <= d_max; ++dv) {
        const Int d(dv);
        if (is_square(d)) continue;
        for (unsigned long k = k_min; k <= k_max; ++k) {
            ++line.cases;
            if (primitive_part(d, k) <= 1)
                evidence.push_back(make_evidence(
                    "primitive-part-positive", "Y_k has no primitive divisor",
                    {{"d", to_decimal(d)}, {"k", std::to_string(k)}}));
        }
    }
    finish_check(report, std::move(line), std::move(evidence));
    return report;
}

SuiteReport run_elliptic_suite(unsigned long base_max, const Int& x_max,
                               const Int& y_max, unsigned long bound_base_max) {
    if (base_max < 2) throw precondition_error("elliptic suite: base-max must be >= 2");
    SuiteReport report;
    report.suite = "elliptic";

    // Every window solution of the cubic equation maps onto the curve.
    CheckLine map_line{"cubic-to-curve-map", 0, true, {}};
    std::vector<Evidence> map_evidence;
    unsigned long points = 0;
    for (unsigned long b = 2; b <= base_max; ++b)
        for (unsigned long a = 1; a + 1 < b; ++a)
            for (unsigned r = 0; r <= 2; ++r) {
                const Int bm1 = Int(b) - 1;
                const Int br = ipow(b, r);
                for (Int y = 1; y <= y_max; ++y) {
                    // solve 2x^2 - 1 = a (b^r y^3 - 1)/(b-1) for integer x
                    const Int t = Int(a) * (br * y * y * y - 1);
                    if (!mpz_divisible_p(t.get_mpz_t(), bm1.get_mpz_t())) continue;
                    const Int twice_sq = t / bm1 + 1;
                    if (twice_sq <= 0 || twice_sq % 2 != 0) continue;
                    const Int x_sq = twice_sq / 2;
                    if (!is_square(x_sq)) continue;
                    const Int x = int_sqrt(x_sq);
                    if (x < 1 || x > x_max) continue;
                    ++map_line.cases;
                    try {
                        const CurvePoint p = elliptic_map(x, y, a, b, r);
                        ++points;
                        // cross-check against the exhaustive enumerator
                        if (p.y <= 2000000) {
                            const auto all = enumerate_integer_points(
                                elliptic_params(a, b, r).curve_a0, p.y);
                            if (std::find(all.begin(), all.end(), p) == all.end())
                                map_evidence.push_back(make_evidence(
                                    "cubic-to-curve-map",
                                    "mapped point missing from the point enumeration",
                                    {{"base", std::to_string(b)}, {"a", std::to_string(a)},
                                     {"r", std::to_string(r)}, {"x", to_decimal(x)},
                                     {"y", to_decimal(y)}}));
                        }
                    } catch (const identity_violation& iv) {
                        map_evidence.push_back(make_evidence(
                            "cubic-to-curve-map", iv.what(),
                            {{"base", std::to_string(b)}, {"a", std::to_string(a)},
                             {"r", std::to_string(r)}, {"x", to_decimal(x)},
                             {"y", to_decimal(y)}}));
                    }
                }
            }
    map_line.data = {{"points", std::to_string(points)}};
    finish_check(report, std::move(map_line), std::move(map_evidence));

    // |A0| < 4 b^6, and A0 = 0 exactly when a = b-1.
    CheckLine bound_line{"constant-magnitude-bound", 0, true, {}};
    std::vector<Evidence> bound_evidence;
    for (unsigned long b = 2; b <= bound_base_max; ++b)
        for (unsigned long a = 1; a <= b - 1; ++a)
            for (unsigned r = 0; r <= 2; ++r) {
                ++bound_line.cases;
                const EllipticInstance inst = elliptic_params(a, b, r);
                const bool zero_ok = inst.zero == (inst.a0 == 0);
                if (!zero_ok || !(abs(inst.a0) < 4 * ipow(b, 6)))
                    bound_evidence.push_back(make_evidence(
                        "constant-magnitude-bound", "|A0| < 4b^6 or the zero criterion fails",
                        {{"base", std::to_string(b)}, {"a", std::to_string(a)},
                         {"r", std::to_string(r)}, {"a0", to_decimal(inst.a0)}}));
            }
    finish_check(report, std::move(bound_line), std::move(bound_evidence));

    return report;
}

SuiteReport run_bracket_suite(unsigned long base_max, unsigned long m) {
    if (base_max < 2) throw precondition_error("brackets suite: base-max must be >= 2");
    if (m < 2) throw precondition_error("brackets suite: m must be >= 2");
    SuiteReport report;
    report.suite = "brackets";

    CheckLine line{"alpha-bracketing", 0, true, {}};
    std::vector<Evidence> evidence;
    for (unsigned long b = 2; b <= base_max; ++b) {
        std::vector<unsigned long> digits_to_try = {1UL};
        if (b - 1 > 1) digits_to_try.push_back(b - 1);
        for (unsigned long a : digits_to_try) {
            ++line.cases;
            const BracketReport r = bracket_check(b, a, m);
            if (!r.lower_holds || !r.upper_holds)
                evidence.push_back(make_evidence(
                    "alpha-bracketing", "alpha leaves (b^{m-1}, 2 b^{m+2})",
                    {{"base", std::to_string(b)}, {"a", std::to_string(a)},
                     {"m", std::to_string(m)}}));
        }
    }
    finish_check(report, std::move(line), std::move(evidence));
    return report;
}

}  // namespace pellrep
