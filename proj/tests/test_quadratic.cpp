#include <doctest.h>

#include "pellrep/pell.hpp"
#include "pellrep/quadratic.hpp"

using namespace pellrep;

TEST_CASE("quadratic pairs multiply exactly") {
    // 3 + sqrt(8): a Pell unit
    const QuadraticPair alpha = unit_from_half_trace(Rational(3));
    CHECK(alpha.delta == 8);
    CHECK(alpha.norm() == 1);

    const QuadraticPair sq = alpha * alpha;
    CHECK(sq.u == 17);
    CHECK(sq.v == 6);

    const QuadraticPair inv = alpha.unit_inverse();
    const QuadraticPair one = alpha * inv;
    CHECK(one.u == 1);
    CHECK(one.v == 0);

    QuadraticPair by_mul = alpha;
    for (int i = 1; i < 7; ++i) by_mul = by_mul * alpha;
    const QuadraticPair by_pow = alpha.pow(7);
    CHECK(by_mul.u == by_pow.u);
    CHECK(by_mul.v == by_pow.v);
}

TEST_CASE("pair powers carry the polynomial and its derivative") {
    // beta^n = u_n + v_n sqrt(delta) with u_n = P_n(x), n v_n = P'_n(x),
    // including complex delta < 0
    const Rational x = make_rational(Int(-3), Int(7));
    const QuadraticPair beta = unit_from_half_trace(x);
    CHECK(beta.norm() == 1);
    for (unsigned long n = 1; n <= 9; ++n) {
        const QuadraticPair power = beta.pow(n);
        CHECK(power.u == chebyshev_P(n, x));
        CHECK(Rational(n) * power.v == chebyshev_P_prime(n, x));
    }
}

TEST_CASE("minimal-polynomial constructors") {
    const QuadPoly printed = repdigit_ratio_poly(10, 1);
    CHECK(printed.a == 81);
    CHECK(printed.b == 2);
    CHECK(printed.c == 1);

    const QuadPoly circle = unit_circle_poly(10, 1);
    CHECK(circle.a == 9);
    CHECK(circle.b == 2);
    CHECK(circle.c == 9);
    // -1/9 + sqrt((1/9)^2 - 1) is a root: 9 z^2 + 2 z + 9 = 0 iff
    // z + 1/z = -2/9, which unit_from_half_trace satisfies by design
    const QuadraticPair beta = unit_from_half_trace(make_rational(Int(-1), Int(9)));
    const QuadraticPair z2 = beta * beta;
    const Rational residual_u = 9 * z2.u + 2 * beta.u + 9;
    const Rational residual_v = 9 * z2.v + 2 * beta.v;
    CHECK(residual_u == 0);
    CHECK(residual_v == 0);

    const QuadPoly pell = pell_unit_poly(Int(99));
    CHECK(pell.a == 1);
    CHECK(pell.b == -198);
    CHECK(pell.c == 1);
}
