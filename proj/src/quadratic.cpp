#include "pellrep/quadratic.hpp"

#include <stdexcept>

namespace pellrep {

Rational QuadraticPair::norm() const { return u * u - v * v * delta; }

QuadraticPair QuadraticPair::operator*(const QuadraticPair& rhs) const {
    if (delta != rhs.delta)
        throw std::invalid_argument("QuadraticPair: mismatched discriminants");
    return {u * rhs.u + v * rhs.v * delta, u * rhs.v + v * rhs.u, delta};
}

QuadraticPair QuadraticPair::operator-(const QuadraticPair& rhs) const {
    if (delta != rhs.delta)
        throw std::invalid_argument("QuadraticPair: mismatched discriminants");
    return {u - rhs.u, v - rhs.v, delta};
}

QuadraticPair QuadraticPair::unit_inverse() const {
    const Rational n = norm();
    if (n == 1) return conj();
    if (n == -1) return {-u, v, delta};
    throw std::invalid_argument("QuadraticPair: not a unit");
}

QuadraticPair QuadraticPair::pow(unsigned long n) const {
    QuadraticPair result{Rational(1), Rational(0), delta};
    QuadraticPair sq = *this;
    while (n > 0) {
        if (n & 1) result = result * sq;
        sq = sq * sq;
        n >>= 1;
    }
    return result;
}

QuadraticPair unit_from_half_trace(const Rational& x) {
    return {x, Rational(1), x * x - 1};
}

QuadPoly repdigit_ratio_poly(unsigned long base, unsigned long digit) {
    if (base < 2) throw std::invalid_argument("repdigit_ratio_poly: base must be >= 2");
    const Int bm1 = Int(base) - 1;
    return QuadPoly{bm1 * bm1, Int(2 * digit), Int(1), +1};
}

QuadPoly unit_circle_poly(unsigned long base, unsigned long digit) {
    if (base < 2) throw std::invalid_argument("unit_circle_poly: base must be >= 2");
    const Int bm1 = Int(base) - 1;
    return QuadPoly{bm1, Int(2 * digit), bm1, +1};
}

QuadPoly pell_unit_poly(const Int& x1) {
    return QuadPoly{Int(1), -2 * x1, Int(1), +1};
}

}  // namespace pellrep
