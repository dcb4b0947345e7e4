#include "pellrep/repdigit.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pellrep {

Int repunit(unsigned long base, unsigned long length) {
    if (base < 2) throw std::invalid_argument("repunit: base must be >= 2");
    if (length < 1) throw std::invalid_argument("repunit: length must be >= 1");
    return (ipow(base, length) - 1) / (base - 1);
}

Int repdigit_value(const RepdigitForm& form) {
    if (form.base < 2) throw std::invalid_argument("repdigit_value: base must be >= 2");
    if (form.length < 1) throw std::invalid_argument("repdigit_value: length must be >= 1");
    const unsigned long digit_cap =
        form.generalized ? (form.base - 1) * (form.base - 1) : form.base - 1;
    if (form.digit < 1 || form.digit > digit_cap)
        throw std::invalid_argument("repdigit_value: digit out of range");
    return form.digit * repunit(form.base, form.length);
}

std::vector<unsigned long> digits(const Int& n, unsigned long base) {
    if (base < 2) throw std::invalid_argument("digits: base must be >= 2");
    if (n < 1) throw std::invalid_argument("digits: n must be >= 1");
    std::vector<unsigned long> out;
    Int rest = n;
    while (rest > 0) {
        out.push_back(mpz_fdiv_ui(rest.get_mpz_t(), base));
        rest /= base;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::optional<RepdigitForm> as_repdigit(const Int& n, unsigned long base) {
    if (base < 2) throw std::invalid_argument("as_repdigit: base must be >= 2");
    if (n < 1) throw std::invalid_argument("as_repdigit: n must be >= 1");
    const auto ds = digits(n, base);
    for (unsigned long d : ds)
        if (d != ds.front()) return std::nullopt;
    return RepdigitForm{base, ds.front(), static_cast<unsigned long>(ds.size()), false};
}

Int gcd_power_minus_one(unsigned long base, unsigned long m1, unsigned long m2) {
    if (base < 2) throw std::invalid_argument("gcd_power_minus_one: base must be >= 2");
    if (m1 < 1 || m2 < 1)
        throw std::invalid_argument("gcd_power_minus_one: exponents must be >= 1");
    Int g;
    const Int u1 = ipow(base, m1) - 1;
    const Int u2 = ipow(base, m2) - 1;
    mpz_gcd(g.get_mpz_t(), u1.get_mpz_t(), u2.get_mpz_t());
    const unsigned long m3 = std::gcd(m1, m2);
    if (g != ipow(base, m3) - 1)
        throw identity_violation("gcd_power_minus_one: gcd is not b^gcd(m1,m2)-1");
    return g;
}

}  // namespace pellrep
