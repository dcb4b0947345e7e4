#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace pellrep {

using Int = mpz_class;
using Rational = mpq_class;

/// floor(sqrt(n)) for n >= 0, exact.
Int int_sqrt(const Int& n);

/// True iff n is a perfect square, decided by exact integer square root.
bool is_square(const Int& n);

/// Exact exponent of the prime p in k. Rejects k = 0.
unsigned long nu_p(const Int& k, unsigned long p);

/// base^exp as an exact integer.
Int ipow(const Int& base, unsigned long exp);
Int ipow(unsigned long base, unsigned long exp);

/// Reduced rational num/den with den > 0. Rejects den = 0.
Rational make_rational(const Int& num, const Int& den);

inline Int numerator(const Rational& q) { return q.get_num(); }
inline Int denominator(const Rational& q) { return q.get_den(); }

inline std::string to_decimal(const Int& n) { return n.get_str(); }

/// Thrown when an exact check that is a proved identity fails; this
/// always indicates an arithmetic bug, never bad input.
struct identity_violation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace pellrep
