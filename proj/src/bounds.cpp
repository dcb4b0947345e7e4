#include "pellrep/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace pellrep {

namespace {

// Bounds are never rounded toward the unsafe side.
double nudge_up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }
double nudge_down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }

double log_mpz(const Int& n) {
    if (n <= 0) throw std::invalid_argument("log_mpz: argument must be positive");
    signed long exp = 0;
    const double mantissa = mpz_get_d_2exp(&exp, n.get_mpz_t());
    return std::log(mantissa) + static_cast<double>(exp) * std::log(2.0);
}

double log_mpf_abs(const mpf_class& x) {
    signed long exp = 0;
    const double mantissa = mpf_get_d_2exp(&exp, x.get_mpf_t());
    return std::log(std::fabs(mantissa)) + static_cast<double>(exp) * std::log(2.0);
}

double rational_height(const Rational& q) {
    const Int num = abs(q.get_num());
    const Int den = q.get_den();
    return log_mpz(num > den ? num : den);
}

}  // namespace

double yu_bound(const YuParams& params) {
    if (params.t < 1 || params.degree < 1)
        throw std::invalid_argument("yu_bound: t and D must be >= 1");
    if (params.p < 2) throw std::invalid_argument("yu_bound: p must be a prime >= 2");
    if (params.e_pi < 1 || params.e_pi > params.degree)
        throw std::invalid_argument("yu_bound: need 1 <= e_pi <= D");
    if (params.f_pi < 1 || params.f_pi > params.degree)
        throw std::invalid_argument("yu_bound: need 1 <= f_pi <= D");
    if (params.B < 2) throw std::invalid_argument("yu_bound: need B >= 2");
    if (params.heights.size() != params.t)
        throw std::invalid_argument("yu_bound: need one height per term");
    const double log_p = std::log(static_cast<double>(params.p));
    double height_product = 1.0;
    for (double h : params.heights) {
        if (h < log_p * (1.0 - 1e-12))
            throw std::invalid_argument("yu_bound: heights must be >= log p");
        height_product *= h;
    }

    const double t = params.t;
    const double D = params.degree;
    double value = 19.0 * std::pow(20.0 * std::sqrt(t + 1.0) * D, 2.0 * (t + 1.0));
    value *= std::pow(static_cast<double>(params.e_pi), t - 1.0);
    value *= std::pow(static_cast<double>(params.p), static_cast<double>(params.f_pi)) /
             std::pow(params.f_pi * log_p, 2.0);
    value *= 5.0 + std::log(t * D);  // log(e^5 t D)
    value *= height_product;
    value *= std::log(params.B);
    return nudge_up(value);
}

double matveev_lower(const MatveevParams& params) {
    if (params.t < 1 || params.degree < 1)
        throw std::invalid_argument("matveev_lower: t and D must be >= 1");
    if (params.B < 2) throw std::invalid_argument("matveev_lower: need B >= 2");
    if (params.heights.size() != params.t)
        throw std::invalid_argument("matveev_lower: need one height per term");
    double height_product = 1.0;
    for (double h : params.heights) {
        if (h < 0.16 * (1.0 - 1e-12))
            throw std::invalid_argument("matveev_lower: heights must be >= 0.16");
        height_product *= h;
    }
    const double t = params.t;
    const double D = params.degree;
    double magnitude = 1.4 * std::pow(30.0, t + 3.0) * std::pow(t, 4.5) * D * D *
                       (1.0 + std::log(D)) * (1.0 + std::log(params.B)) * height_product;
    return nudge_down(-magnitude);
}

double baker_log_bound(const Int& a0) {
    if (a0 == 0) throw std::invalid_argument("baker_log_bound: a0 must be nonzero");
    return nudge_up(1e4 * (10.0 * std::log(10.0) + log_mpz(abs(a0))));
}

double height_quadratic(const Int& A, const Int& B, const Int& C) {
    if (A == 0 && B == 0) throw std::invalid_argument("height_quadratic: degenerate polynomial");

    Int a = A, b = B, c = C;
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1) {
        a /= g;
        b /= g;
        c /= g;
    }
    if (a < 0 || (a == 0 && b < 0)) {
        a = -a;
        b = -b;
        c = -c;
    }

    if (a == 0) return nudge_up(rational_height(make_rational(-c, b)));

    const Int disc = b * b - 4 * a * c;
    if (disc == 0) return nudge_up(rational_height(make_rational(-b, 2 * a)));
    if (disc > 0 && is_square(disc)) {
        // reducible: two rational roots; report the larger height
        const Int s = int_sqrt(disc);
        const double h1 = rational_height(make_rational(-b + s, 2 * a));
        const double h2 = rational_height(make_rational(-b - s, 2 * a));
        return nudge_up(std::max(h1, h2));
    }

    if (disc < 0) {
        // conjugate pair of modulus sqrt(c/a)
        double sum = 0.0;
        if (c > a) sum = log_mpz(c) - log_mpz(a);  // log max(1, c/a)
        return nudge_up(0.5 * (log_mpz(a) + sum));
    }

    // real irrational pair, roots to 256-bit precision
    mpf_set_default_prec(256);
    const mpf_class sqrt_disc = sqrt(mpf_class(disc));
    const mpf_class denom = 2 * mpf_class(a);
    const mpf_class r1 = (-mpf_class(b) + sqrt_disc) / denom;
    const mpf_class r2 = (-mpf_class(b) - sqrt_disc) / denom;
    double sum = 0.0;
    for (const mpf_class& r : {r1, r2})
        if (abs(r) > 1) sum += log_mpf_abs(r);
    return nudge_up(0.5 * (log_mpz(a) + sum));
}

double m_bound(unsigned long base, double n) {
    if (base < 2) throw std::invalid_argument("m_bound: base must be >= 2");
    if (n < 3) throw std::invalid_argument("m_bound: n must be >= 3");
    return nudge_up(2e17 * std::pow(static_cast<double>(base), 6.0) * std::log(n));
}

double invert_n_log_n(double T) {
    if (!(T > 3)) throw std::invalid_argument("invert_n_log_n: T must exceed 3");
    return nudge_up(2.0 * T * std::log(T));
}

Int PowerForm::value() const {
    if (exponent < 0 || !exponent.fits_ulong_p())
        throw std::invalid_argument("PowerForm: exponent out of range");
    return ipow(base, exponent.get_ui());
}

BoundReport bound_report(unsigned long base) {
    if (base < 2) throw std::invalid_argument("bound_report: base must be >= 2");
    BoundReport report;
    report.base = base;
    const Int b(base);
    report.n_max = ipow(Int(10), 18) * ipow(b, 4);
    report.ell_max = 2 * report.n_max;
    report.m_max = ipow(Int(10), 20) * ipow(b, 7);

    const double log_b = std::log(static_cast<double>(base));
    report.n_max_derived = nudge_up(2e18 * std::pow(log_b, 4.0));

    // fixed point: nats * 10^9, log b rounded up before scaling
    double log_b_up = log_b;
    for (int i = 0; i < 4; ++i) log_b_up = std::nextafter(log_b_up, 1e300);
    const Int log_b_fp(std::ceil(log_b_up * 1e9));
    report.log_d_bound_fp = 2 * ipow(Int(10), 20) * ipow(b, 7) * log_b_fp;

    // (10b)^{100000}, with powers of ten folded into the base
    Int pf_base = 10 * b;
    Int pf_exp = 100000;
    Int reduced = pf_base;
    unsigned long tens = 0;
    while (mpz_divisible_ui_p(reduced.get_mpz_t(), 10)) {
        reduced /= 10;
        ++tens;
    }
    if (reduced == 1) {
        pf_base = 10;
        pf_exp = Int(tens) * 100000;
    }
    report.theorem_exponent = PowerForm{pf_base, pf_exp};
    return report;
}

Int theorem_exponent_value(unsigned long base) {
    if (base < 2) throw std::invalid_argument("theorem_exponent_value: base must be >= 2");
    return ipow(Int(10 * Int(base)), 100000);
}

double yu_specialized_coefficient(unsigned long base) {
    if (base < 2) throw std::invalid_argument("yu_specialized_coefficient: base must be >= 2");
    const double log_b = std::log(static_cast<double>(base));
    const double log_2 = std::log(2.0);
    double value = 19.0 * std::pow(20.0 * std::sqrt(3.0) * 4.0, 6.0);
    value *= 4.0;                                                  // e_pi <= 4
    value *= std::pow(static_cast<double>(base), 4.0) / (log_2 * log_2);  // p^{f} <= b^4
    value *= 5.0 + std::log(8.0);                                  // log(8 e^5)
    value *= 16.0 * log_b * log_b;                                 // H^2, H = 4 log b
    return nudge_up(value);
}

}  // namespace pellrep
