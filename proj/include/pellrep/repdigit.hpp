#pragma once

#include <optional>
#include <vector>

#include "pellrep/integers.hpp"

namespace pellrep {

/// N = digit * (base^length - 1) / (base - 1): all base-b digits of N
/// equal `digit`. The base form requires digit <= base-1; after the
/// gcd reduction step the digit may range up to (base-1)^2, which is
/// flagged by `generalized`.
struct RepdigitForm {
    unsigned long base = 10;
    unsigned long digit = 1;
    unsigned long length = 1;
    bool generalized = false;

    bool operator==(const RepdigitForm&) const = default;
};

/// (base^length - 1) / (base - 1): the all-ones number of the given length.
Int repunit(unsigned long base, unsigned long length);

/// Exact value of a repdigit form. Rejects invalid forms
/// (base < 2, length < 1, digit out of range).
Int repdigit_value(const RepdigitForm& form);

/// Base-b digits of n >= 1, most significant first.
std::vector<unsigned long> digits(const Int& n, unsigned long base);

/// The unique (digit, length) with n = digit*(b^length-1)/(b-1) and
/// digit <= b-1, if it exists. Single-digit n always yields length 1.
std::optional<RepdigitForm> as_repdigit(const Int& n, unsigned long base);

/// gcd(b^{m1}-1, b^{m2}-1), which equals b^{gcd(m1,m2)}-1; the equality
/// is checked and its failure reported as an identity_violation.
Int gcd_power_minus_one(unsigned long base, unsigned long m1, unsigned long m2);

}  // namespace pellrep
