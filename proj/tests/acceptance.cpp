// Acceptance suite: every criterion prints exactly one PASS/FAIL line.
// Exit status is 0 only if all criteria pass, including their time budgets.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pellrep/bounds.hpp"
#include "pellrep/pell.hpp"
#include "pellrep/records.hpp"
#include "pellrep/repdigit.hpp"
#include "pellrep/search.hpp"
#include "pellrep/verify.hpp"

using namespace pellrep;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& message) {
    if (!condition) throw Failure(message);
}

// -------------------------------------------------------------------------
// 1. multi-hit discovery matches a naive oracle
// -------------------------------------------------------------------------
std::string criterion_multi_hit() {
    SearchConfig config;
    config.base = 10;
    config.d_max = 1000;
    config.n_max = 10;
    const SearchReport report = search(config);

    const SearchHit* d2 = nullptr;
    for (const SearchHit& hit : report.multi_hit)
        if (hit.d == 2) d2 = &hit;
    require(d2 != nullptr, "d=2 missing from the multi-hit report");
    require(d2->hits.size() == 2, "d=2 must have exactly two hits");
    require(d2->hits[0].n == 1 && d2->hits[0].digit == 3 && d2->hits[0].length == 1,
            "d=2 first hit must be (n=1, a=3, m=1)");
    require(d2->hits[1].n == 3 && d2->hits[1].digit == 9 && d2->hits[1].length == 2,
            "d=2 second hit must be (n=3, a=9, m=2)");

    const auto oracle = oracles::naive_multi_hit(config.base, config.d_max,
                                                 config.n_max, config.m_cap,
                                                 config.include_m1);
    require(report.multi_hit.size() == oracle.size(),
            "multi-hit modulus count differs from the naive oracle");
    for (const SearchHit& hit : report.multi_hit) {
        const auto it = oracle.find(hit.d.get_ui());
        require(it != oracle.end(), "modulus " + to_decimal(hit.d) + " not in oracle");
        require(hit.hits.size() == it->second.size(),
                "hit count differs at d=" + to_decimal(hit.d));
        for (size_t i = 0; i < hit.hits.size(); ++i) {
            const auto& ours = hit.hits[i];
            const auto& theirs = it->second[i];
            require(ours.n == theirs.n && ours.digit == theirs.digit &&
                        ours.length == theirs.length && ours.x == theirs.x,
                    "hit mismatch at d=" + to_decimal(hit.d));
        }
    }
    return "d=2 hits (1,3,1)+(3,9,2); report == oracle on " +
           std::to_string(report.multi_hit.size()) + " multi-hit moduli";
}

// -------------------------------------------------------------------------
// 2. fundamental solutions equal the brute-force minimum
// -------------------------------------------------------------------------
std::string criterion_fundamental_oracle() {
    unsigned long checked = 0, literal = 0;
    for (unsigned long dv = 2; dv <= 200; ++dv) {
        const Int d(dv);
        if (is_square(d)) continue;
        const PellOrbit orbit = fundamental_solution(d);
        require(orbit.x1 * orbit.x1 - d * orbit.y1 * orbit.y1 == 1,
                "equation fails at d=" + std::to_string(dv));
        require(oracles::fundamental_is_minimal(d, orbit.x1),
                "smaller solution exists at d=" + std::to_string(dv));
        ++checked;
        if (orbit.y1 <= 200000) {
            const auto minimal = oracles::pell_min_over_y(d, 200000);
            require(minimal.has_value() && minimal->first == orbit.x1 &&
                        minimal->second == orbit.y1,
                    "literal Y-scan disagrees at d=" + std::to_string(dv));
            ++literal;
        } else {
            require(!oracles::pell_min_over_y(d, 200000).has_value(),
                    "Y-scan found a solution the library missed at d=" +
                        std::to_string(dv));
        }
    }
    return std::to_string(checked) + " moduli; minimality certified for all, " +
           std::to_string(literal) + " also matched by the literal Y-scan";
}

// -------------------------------------------------------------------------
// 3. the defining identity holds exactly
// -------------------------------------------------------------------------
std::string criterion_pell_identity() {
    unsigned long checked = 0;
    for (unsigned long dv = 2; dv <= 10000; ++dv) {
        const Int d(dv);
        if (is_square(d)) continue;
        const PellOrbit orbit = fundamental_solution(d);
        require(orbit.x1 * orbit.x1 - d * orbit.y1 * orbit.y1 == 1,
                "identity fails at d=" + std::to_string(dv) + ", n=1");
        ++checked;
    }
    for (unsigned long dv = 2; dv <= 100; ++dv) {
        const Int d(dv);
        if (is_square(d)) continue;
        const PellOrbit orbit = fundamental_solution(d);
        PellWalker walker(orbit);
        for (unsigned long n = 1; n <= 15; walker.advance(), ++n) {
            require(walker.x() * walker.x() - d * walker.y() * walker.y() == 1,
                    "identity fails at d=" + std::to_string(dv) +
                        ", n=" + std::to_string(n));
            ++checked;
        }
    }
    return std::to_string(checked) + " solutions verified exactly";
}

// -------------------------------------------------------------------------
// 4. P_n(X_1) = X_n
// -------------------------------------------------------------------------
std::string criterion_chebyshev_consistency() {
    unsigned long checked = 0;
    for (unsigned long dv = 2; dv <= 100; ++dv) {
        const Int d(dv);
        if (is_square(d)) continue;
        const PellOrbit orbit = fundamental_solution(d);
        PellWalker walker(orbit);
        for (unsigned long n = 1; n <= 15; walker.advance(), ++n) {
            require(chebyshev_P(n, Rational(orbit.x1)) == walker.x(),
                    "P_n(X_1) != X_n at d=" + std::to_string(dv));
            ++checked;
        }
    }
    return std::to_string(checked) + " evaluations equal exactly";
}

// -------------------------------------------------------------------------
// 5. gcd identities
// -------------------------------------------------------------------------
std::string criterion_gcd_identities() {
    unsigned long solution_pairs = 0;
    for (unsigned long dv = 2; dv <= 50; ++dv) {
        const Int d(dv);
        if (is_square(d)) continue;
        const PellOrbit orbit = fundamental_solution(d);
        std::vector<Int> xs(14);
        PellWalker walker(orbit);
        for (unsigned long n = 1; n <= 13; walker.advance(), ++n) xs[n] = walker.x();
        for (unsigned long n1 = 1; n1 <= 13; n1 += 2)
            for (unsigned long n2 = n1 + 2; n2 <= 13; n2 += 2) {
                Int g;
                mpz_gcd(g.get_mpz_t(), xs[n1].get_mpz_t(), xs[n2].get_mpz_t());
                require(g == xs[std::gcd(n1, n2)],
                        "X-gcd identity fails at d=" + std::to_string(dv));
                ++solution_pairs;
            }
    }
    unsigned long exponent_pairs = 0;
    for (unsigned long b = 2; b <= 12; ++b)
        for (unsigned long m1 = 1; m1 <= 12; ++m1)
            for (unsigned long m2 = 1; m2 <= 12; ++m2) {
                const Int g = gcd_power_minus_one(b, m1, m2);
                require(g == ipow(b, std::gcd(m1, m2)) - 1,
                        "power gcd identity fails at base " + std::to_string(b));
                ++exponent_pairs;
            }
    return std::to_string(solution_pairs) + " solution pairs and " +
           std::to_string(exponent_pairs) + " exponent pairs verified";
}

// -------------------------------------------------------------------------
// 6. the Taylor congruence and the max-digit shifted values
// -------------------------------------------------------------------------
std::string criterion_taylor() {
    unsigned long congruences = 0;
    for (unsigned long b = 2; b <= 10; ++b)
        for (unsigned long a = 1; a <= b - 1; ++a)
            for (unsigned long m = 1; m <= 4; ++m) {
                if (Int(a) * repunit(b, m) < 2) continue;
                for (unsigned long n = 1; n <= 9; n += 2) {
                    const TaylorReport report = taylor_congruence_check(b, a, m, n);
                    require(report.ok(), "congruence fails at b=" + std::to_string(b) +
                                             " a=" + std::to_string(a) +
                                             " m=" + std::to_string(m) +
                                             " n=" + std::to_string(n));
                    ++congruences;
                }
            }
    for (unsigned long n = 1; n <= 200; ++n) {
        const Rational value = chebyshev_P(n, Rational(-1));
        const Rational deriv = chebyshev_P_prime(n, Rational(-1));
        if (n % 2 == 1) {
            require(value == -1, "shifted value != -1 at odd n=" + std::to_string(n));
            require(deriv == Rational(n) * Rational(n),
                    "shifted derivative != n^2 at odd n=" + std::to_string(n));
        } else {
            require(value == 1 && deriv == -Rational(n) * Rational(n),
                    "signed shifted values fail at even n=" + std::to_string(n));
        }
    }
    return std::to_string(congruences) +
           " congruences mod b^{2m}; shifted values exact to n=200";
}

// -------------------------------------------------------------------------
// 7. two-adic invariance along odd indices
// -------------------------------------------------------------------------
std::string criterion_two_adic() {
    unsigned long checked = 0;
    for (unsigned long dv = 2; dv <= 100; ++dv) {
        const Int d(dv);
        if (is_square(d)) continue;
        const PellOrbit orbit = fundamental_solution(d);
        const unsigned long base_val = nu_p(orbit.x1, 2);
        PellWalker walker(orbit);
        for (unsigned long n = 1; n <= 15; walker.advance(), ++n) {
            if (n % 2 == 0) continue;
            require(nu_p(walker.x(), 2) == base_val,
                    "nu_2 drifts at d=" + std::to_string(dv));
            ++checked;
        }
    }
    return std::to_string(checked) + " odd indices share nu_2(X_1)";
}

// -------------------------------------------------------------------------
// 8. primitive parts above the guaranteed index
// -------------------------------------------------------------------------
std::string criterion_primitive() {
    unsigned long checked = 0;
    for (unsigned long dv : {2UL, 3UL, 5UL, 6UL, 7UL, 8UL, 10UL})
        for (unsigned long k = 13; k <= 25; ++k) {
            require(primitive_part(Int(dv), k) > 1,
                    "no primitive part at d=" + std::to_string(dv) +
                        " k=" + std::to_string(k));
            ++checked;
        }
    return std::to_string(checked) + " (d, k) pairs certified";
}

// -------------------------------------------------------------------------
// 9. cubic reduction onto the curve, and the constant bound
// -------------------------------------------------------------------------
std::string criterion_elliptic() {
    unsigned long points = 0;
    const Int x_max(10000), y_max(100);
    for (unsigned long b = 2; b <= 10; ++b)
        for (unsigned long a = 1; a + 1 < b; ++a)
            for (unsigned r = 0; r <= 2; ++r) {
                const Int bm1 = Int(b) - 1;
                const Int br = ipow(b, r);
                const EllipticInstance inst = elliptic_params(a, b, r);
                for (Int y = 1; y <= y_max; ++y) {
                    const Int t = Int(a) * (br * y * y * y - 1);
                    if (!mpz_divisible_p(t.get_mpz_t(), bm1.get_mpz_t())) continue;
                    const Int twice_sq = t / bm1 + 1;
                    if (twice_sq <= 0 || twice_sq % 2 != 0) continue;
                    const Int x_sq = twice_sq / 2;
                    if (!is_square(x_sq)) continue;
                    const Int x = int_sqrt(x_sq);
                    if (x < 1 || x > x_max) continue;
                    const CurvePoint p = elliptic_map(x, y, a, b, r);
                    require(p.x * p.x == p.y * p.y * p.y + inst.curve_a0,
                            "off-curve point at b=" + std::to_string(b));
                    ++points;
                }
            }
    require(points >= 8, "the solution window is unexpectedly empty");

    unsigned long bounded = 0;
    for (unsigned long b = 2; b <= 20; ++b)
        for (unsigned long a = 1; a <= b - 1; ++a)
            for (unsigned r = 0; r <= 2; ++r) {
                const EllipticInstance inst = elliptic_params(a, b, r);
                require(abs(inst.a0) < 4 * ipow(b, 6),
                        "constant bound fails at b=" + std::to_string(b));
                require(inst.zero == (inst.a0 == 0), "zero criterion fails");
                ++bounded;
            }
    return std::to_string(points) + " window solutions on-curve; |A0| < 4b^6 at " +
           std::to_string(bounded) + " parameter triples";
}

// -------------------------------------------------------------------------
// 10. exhaustive root-of-unity exclusion, exact arithmetic only
// -------------------------------------------------------------------------
std::string criterion_lemma3() {
    unsigned long checked = 0;
    for (unsigned long b = 3; b <= 12; ++b)
        for (unsigned long a = 1; a + 1 < b; ++a)
            for (unsigned long c = 1; c <= (b - 1) * (b - 1); ++c)
                for (unsigned long n = 1; n <= 9; n += 2) {
                    require(lemma3_check(a, c, b, n).holds,
                            "system solvable at b=" + std::to_string(b));
                    ++checked;
                }
    return std::to_string(checked) + " (a, c, b, n) tuples excluded exactly";
}

// -------------------------------------------------------------------------
// 11. bracketing of the unit at digit length 100
// -------------------------------------------------------------------------
std::string criterion_brackets() {
    unsigned long checked = 0;
    for (unsigned long b : {2UL, 10UL})
        for (unsigned long a : {1UL, b - 1}) {
            const BracketReport report = bracket_check(b, a, 100);
            require(report.lower_holds && report.upper_holds,
                    "bracket fails at b=" + std::to_string(b));
            // restated as raw integer comparisons
            const Int x1 = Int(a) * repunit(b, 100);
            require(ipow(b, 99) < 2 * x1, "lower bracket raw comparison fails");
            require(x1 <= ipow(b, 102), "upper bracket raw comparison fails");
            ++checked;
        }
    return std::to_string(checked) + " synthetic orbits bracketed exactly";
}

// -------------------------------------------------------------------------
// 12. the bound chain
// -------------------------------------------------------------------------
std::string criterion_bounds() {
    for (unsigned long b = 2; b <= 100; ++b) {
        const BoundReport report = bound_report(b);
        require(report.n_max == ipow(Int(10), 18) * ipow(b, 4), "n ceiling off");
        require(report.ell_max == 2 * ipow(Int(10), 18) * ipow(b, 4), "ell ceiling off");
        require(report.m_max == ipow(Int(10), 20) * ipow(b, 7), "m ceiling off");
        require(report.ell_max <= 2 * report.n_max + 1, "ell/n consistency off");
    }

    // modulus bound stays under exp(10^20 b^10), exactly, in fixed point
    for (unsigned long b = 2; b <= 10000; ++b) {
        const BoundReport report = bound_report(b);
        require(report.log_d_bound_fp <=
                    ipow(Int(10), 20) * ipow(b, 10) * ipow(Int(10), 9),
                "modulus bound exceeds the weakened form at b=" + std::to_string(b));
    }

    // the headline exponent dominates the modulus bound
    for (unsigned long b = 2; b <= 100; ++b) {
        const BoundReport report = bound_report(b);
        require(theorem_exponent_value(b) * ipow(Int(10), 9) >= report.log_d_bound_fp,
                "headline exponent fails to dominate at b=" + std::to_string(b));
        require(report.theorem_exponent.value() == theorem_exponent_value(b),
                "power form expands wrong at b=" + std::to_string(b));
    }

    // monotonicity on 100-point grids
    YuParams yu;
    yu.t = 2;
    yu.degree = 4;
    yu.p = 2;
    yu.e_pi = 1;
    yu.f_pi = 1;
    yu.heights = {std::log(2.0), std::log(2.0)};
    yu.B = 2;
    double last = 0;
    for (int i = 0; i < 100; ++i) {
        yu.B = 2.0 + i * 10.0;
        const double value = yu_bound(yu);
        require(value >= last, "yu bound not monotone in B");
        last = value;
    }
    last = 0;
    for (int i = 0; i < 100; ++i) {
        yu.B = 100;
        yu.heights = {std::log(2.0) + i * 0.25, std::log(2.0)};
        const double value = yu_bound(yu);
        require(value >= last, "yu bound not monotone in H");
        last = value;
    }
    MatveevParams mat;
    mat.t = 2;
    mat.degree = 2;
    mat.B = 10;
    last = 0;
    for (int i = 0; i < 100; ++i) {
        mat.heights = {0.16 + i * 0.05, 0.5};
        const double magnitude = -matveev_lower(mat);
        require(magnitude >= last, "matveev magnitude not monotone in H");
        last = magnitude;
    }
    last = 0;
    for (int i = 0; i < 100; ++i) {
        const double value = baker_log_bound(Int(1 + 37 * i));
        require(value >= last, "baker bound not monotone in |A0|");
        last = value;
    }
    last = 0;
    for (int i = 0; i < 100; ++i) {
        const double value = m_bound(10, 3.0 + 1000.0 * i);
        require(value >= last, "m bound not monotone in n");
        last = value;
    }
    last = 0;
    for (int i = 0; i < 100; ++i) {
        const double value = invert_n_log_n(3.5 + 100.0 * i);
        require(value >= last, "inversion not monotone in T");
        last = value;
    }
    return "ceilings exact to b=100; modulus bound weakened-form checked to b=10^4;"
           " dominance to b=100; six evaluators monotone on 100-point grids";
}

// -------------------------------------------------------------------------
// 13. shard-count independence, byte for byte
// -------------------------------------------------------------------------
std::string criterion_determinism() {
    SearchConfig config;
    config.base = 10;
    config.d_max = 1000;
    config.n_max = 10;
    std::string reference;
    for (unsigned shards : {1U, 2U, 8U}) {
        config.shards = shards;
        const SearchReport report = search(config);
        std::ostringstream out;
        for (const SearchHit& hit : report.multi_hit) out << jsonl_line(hit_record(hit));
        out << "scanned=" << report.d_scanned << " hits=" << report.total_hits << "\n";
        if (reference.empty())
            reference = out.str();
        else
            require(out.str() == reference,
                    "report bytes differ at shards=" + std::to_string(shards));
    }
    return "shards {1,2,8} produce byte-identical reports";
}

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;  // 0 = none stated
    std::function<std::string()> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "multi-hit-discovery", 10.0, criterion_multi_hit},
        {2, "fundamental-solution-oracle", 5.0, criterion_fundamental_oracle},
        {3, "pell-identity", 60.0, criterion_pell_identity},
        {4, "chebyshev-consistency", 0.0, criterion_chebyshev_consistency},
        {5, "gcd-identities", 0.0, criterion_gcd_identities},
        {6, "taylor-congruence", 0.0, criterion_taylor},
        {7, "two-adic-invariance", 0.0, criterion_two_adic},
        {8, "primitive-divisors", 30.0, criterion_primitive},
        {9, "elliptic-reduction", 0.0, criterion_elliptic},
        {10, "root-of-unity-exclusion", 0.0, criterion_lemma3},
        {11, "bracket-invariants", 0.0, criterion_brackets},
        {12, "bound-chain", 10.0, criterion_bounds},
        {13, "shard-determinism", 0.0, criterion_determinism},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool passed = true;
        try {
            detail = criterion.body();
        } catch (const std::exception& e) {
            passed = false;
            detail = e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (passed && criterion.budget_seconds > 0 && elapsed >= criterion.budget_seconds) {
            passed = false;
            detail = "time budget exceeded";
        }
        std::printf("[%2d/13] %s %-28s %s", criterion.id, passed ? "PASS" : "FAIL",
                    criterion.name, detail.c_str());
        if (criterion.budget_seconds > 0)
            std::printf(" [%.2fs < %.0fs]", elapsed, criterion.budget_seconds);
        else
            std::printf(" [%.2fs]", elapsed);
        std::printf("\n");
        if (!passed) ++failures;
    }
    std::printf("%d/13 criteria passed\n", 13 - failures);
    return failures == 0 ? 0 : 1;
}
