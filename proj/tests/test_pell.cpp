#include <doctest.h>

#include <cmath>
#include <complex>

#include "oracles.hpp"
#include "pellrep/pell.hpp"

using namespace pellrep;

TEST_CASE("is_square decides exactly") {
    CHECK(is_square(Int(0)));
    CHECK(is_square(Int(1)));
    CHECK_FALSE(is_square(Int(2)));
    CHECK(is_square(Int(4)));
    CHECK_FALSE(is_square(Int(-4)));

    // (2^26 + 1)^2, cross-checked against the integer-sqrt oracle
    const Int big("4503599761588225");
    const Int root = int_sqrt(big);
    CHECK(root * root == big);
    CHECK(is_square(big));
    CHECK_FALSE(is_square(big + 1));
}

TEST_CASE("make_rational reduces with a positive denominator") {
    const Rational half = make_rational(Int(2), Int(4));
    CHECK(numerator(half) == 1);
    CHECK(denominator(half) == 2);
    const Rational negative = make_rational(Int(3), Int(-6));
    CHECK(numerator(negative) == -1);
    CHECK(denominator(negative) == 2);
    CHECK_THROWS_AS(make_rational(Int(1), Int(0)), std::invalid_argument);
}

TEST_CASE("fundamental solutions match the brute-force minimum") {
    SUBCASE("small moduli, literal Y scan") {
        const auto two = oracles::pell_min_over_y(Int(2), 1000);
        REQUIRE(two.has_value());
        CHECK(two->first == 3);
        CHECK(two->second == 2);
        const PellOrbit orbit2 = fundamental_solution(Int(2));
        CHECK(orbit2.x1 == 3);
        CHECK(orbit2.y1 == 2);

        const auto three = oracles::pell_min_over_y(Int(3), 1000);
        REQUIRE(three.has_value());
        const PellOrbit orbit3 = fundamental_solution(Int(3));
        CHECK(orbit3.x1 == three->first);
        CHECK(orbit3.x1 == 2);
        CHECK(orbit3.y1 == 1);
    }

    SUBCASE("d = 61 is famously large") {
        const PellOrbit orbit = fundamental_solution(Int(61));
        CHECK(orbit.x1 == Int("1766319049"));
        CHECK(orbit.y1 == Int("226153980"));
        CHECK(orbit.x1 * orbit.x1 - 61 * orbit.y1 * orbit.y1 == 1);
        CHECK(oracles::fundamental_is_minimal(Int(61), orbit.x1));
    }

    SUBCASE("rejects bad moduli") {
        CHECK_THROWS_AS(fundamental_solution(Int(0)), std::invalid_argument);
        CHECK_THROWS_AS(fundamental_solution(Int(1)), std::invalid_argument);
        CHECK_THROWS_AS(fundamental_solution(Int(4)), std::invalid_argument);
        CHECK_THROWS_AS(fundamental_solution(Int(100)), std::invalid_argument);
    }

    SUBCASE("minimality certificate holds out to d = 2000") {
        for (unsigned long dv = 2; dv <= 2000; ++dv) {
            const Int d(dv);
            if (is_square(d)) continue;
            const PellOrbit orbit = fundamental_solution(d);
            CHECK(orbit.x1 * orbit.x1 - d * orbit.y1 * orbit.y1 == 1);
            CHECK(oracles::fundamental_is_minimal(d, orbit.x1));
        }
    }
}

TEST_CASE("nth_solution follows the recurrence") {
    const PellOrbit orbit = fundamental_solution(Int(2));
    const PellPair third = nth_solution(orbit, 3);
    CHECK(third.x == 99);  // (3 + 2 sqrt 2)^3
    CHECK(third.y == 70);
    CHECK(nth_solution(orbit, 2).x == 17);  // 2*3^2 - 1
    const PellPair first = nth_solution(orbit, 1);
    CHECK(first.x == orbit.x1);
    CHECK(first.y == orbit.y1);
    CHECK_THROWS_AS(nth_solution(orbit, 0), std::invalid_argument);

    // walker agrees with from-scratch computation
    PellWalker walker(orbit);
    for (unsigned long n = 1; n <= 12; ++n, walker.advance()) {
        CHECK(walker.x() == nth_solution(orbit, n).x);
        CHECK(walker.y() == nth_solution(orbit, n).y);
    }
}

TEST_CASE("orbit_from_x seeds a valid orbit") {
    const PellOrbit orbit = orbit_from_x(Int(17));
    CHECK(orbit.d == 288);
    for (unsigned long n = 1; n <= 6; ++n) {
        const PellPair pair = nth_solution(orbit, n);
        CHECK(pair.x * pair.x - orbit.d * pair.y * pair.y == 1);
    }
    CHECK_THROWS_AS(orbit_from_x(Int(1)), std::invalid_argument);
}

TEST_CASE("chebyshev_P matches hand values and the closed form") {
    CHECK(chebyshev_P(2, Rational(3)) == 17);
    for (unsigned long n = 0; n <= 20; ++n) CHECK(chebyshev_P(n, Rational(1)) == 1);

    const Rational at_minus_half = chebyshev_P(3, make_rational(Int(-1), Int(2)));
    CHECK(at_minus_half == 1);  // 4x^3 - 3x at -1/2

    // complex closed form ((x + sqrt(x^2-1))^n + (x - sqrt(x^2-1))^n)/2
    const std::complex<double> x(-0.5, 0.0);
    const std::complex<double> s = std::sqrt(x * x - 1.0);
    const std::complex<double> closed = (std::pow(x + s, 3) + std::pow(x - s, 3)) / 2.0;
    CHECK(std::abs(closed.real() - 1.0) < 1e-12);
    CHECK(std::abs(closed.imag()) < 1e-12);

    // P_n(X_1) = X_n along a real orbit
    const PellOrbit orbit = fundamental_solution(Int(5));
    for (unsigned long n = 1; n <= 10; ++n)
        CHECK(chebyshev_P(n, Rational(orbit.x1)) == nth_solution(orbit, n).x);
}

TEST_CASE("chebyshev_P_prime differentiates the recurrence") {
    for (int num = -3; num <= 3; ++num)
        CHECK(chebyshev_P_prime(1, make_rational(Int(num), Int(2))) == 1);
    CHECK(chebyshev_P_prime(2, Rational(3)) == 12);  // d/dx (2x^2 - 1) at 3

    // shifted-polynomial endpoint values: P_n(-1) = (-1)^n and
    // P'_n(-1) = (-1)^{n-1} n^2, so odd n gives (-1, n^2)
    for (unsigned long n = 1; n <= 10; ++n) {
        const Rational value = chebyshev_P(n, Rational(-1));
        const Rational deriv = chebyshev_P_prime(n, Rational(-1));
        if (n % 2 == 1) {
            CHECK(value == -1);
            CHECK(deriv == Rational(n) * Rational(n));
        } else {
            CHECK(value == 1);
            CHECK(deriv == -Rational(n) * Rational(n));
        }
    }

    // finite-difference cross-check at a rational point
    const Rational x = make_rational(Int(7), Int(3));
    const Rational h = make_rational(Int(1), Int("1000000000000"));
    const Rational numeric = (chebyshev_P(5, x + h) - chebyshev_P(5, x - h)) / (2 * h);
    const Rational exact = chebyshev_P_prime(5, x);
    const Rational err = numeric - exact;
    CHECK(abs(err.get_num().get_d() / err.get_den().get_d()) < 1e-9);
}

TEST_CASE("chebyshev_mod tracks the exact values") {
    const Int modulus("1000000007");
    const Int x0(3);
    for (unsigned long n = 0; n <= 9; ++n) {
        const ChebyshevResidues r = chebyshev_mod(n, x0, modulus);
        Int value_mod, deriv_mod;
        mpz_mod(value_mod.get_mpz_t(), chebyshev_P(n, Rational(3)).get_num().get_mpz_t(),
                modulus.get_mpz_t());
        mpz_mod(deriv_mod.get_mpz_t(),
                chebyshev_P_prime(n, Rational(3)).get_num().get_mpz_t(),
                modulus.get_mpz_t());
        CHECK(r.value == value_mod);
        CHECK(r.derivative == deriv_mod);
    }
}

TEST_CASE("nu_p extracts exact prime exponents") {
    CHECK(nu_p(Int(48), 2) == 4);
    CHECK(nu_p(Int(99), 3) == 2);
    CHECK(nu_p(Int(7), 2) == 0);
    CHECK(nu_p(Int(-24), 2) == 3);
    CHECK_THROWS_AS(nu_p(Int(0), 2), std::invalid_argument);

    // b^m - 1 is coprime to every prime dividing b
    for (unsigned long m = 1; m <= 8; ++m) {
        const Int v = ipow(10UL, m) - 1;
        CHECK(nu_p(v, 2) == 0);
        CHECK(nu_p(v, 5) == 0);
    }
}

TEST_CASE("pell invariants hold across small moduli") {
    for (unsigned long dv = 2; dv <= 100; ++dv) {
        const Int d(dv);
        if (is_square(d)) continue;
        const PellOrbit orbit = fundamental_solution(d);
        PellWalker walker(orbit);
        std::vector<Int> xs(16), ys(16);
        for (unsigned long n = 1; n <= 15; ++n, walker.advance()) {
            xs[n] = walker.x();
            ys[n] = walker.y();
            CHECK(xs[n] * xs[n] - d * ys[n] * ys[n] == 1);
        }
        for (unsigned long k = 1; k <= 7; ++k) {
            CHECK(xs[2 * k] == 2 * xs[k] * xs[k] - 1);   // double index
            CHECK(ys[2 * k] == 2 * xs[k] * ys[k]);       // Y doubling
        }
        for (unsigned long n = 1; n <= 15; n += 2)
            CHECK(mpz_divisible_p(xs[n].get_mpz_t(), xs[1].get_mpz_t()));
    }
}
