#pragma once

#include <optional>
#include <vector>

#include "pellrep/integers.hpp"
#include "pellrep/verify.hpp"

namespace pellrep {

struct SearchConfig {
    unsigned long base = 10;
    unsigned long d_max = 100;
    unsigned long n_max = 8;
    unsigned long m_cap = 64;       // longest digit string considered
    bool include_m1 = true;         // count single-digit hits
    unsigned shards = 1;
    bool squarefree_only = false;
};

struct HitEntry {
    unsigned long n = 0;
    unsigned long digit = 0;
    unsigned long length = 0;
    Int x;
};

/// One modulus d together with every index n <= n_max whose X_n is a
/// base-b repdigit of length <= m_cap. Hits are sorted by n. `trivial`
/// marks moduli where every hit is a single digit.
struct SearchHit {
    Int d;
    std::vector<HitEntry> hits;
    unsigned long odd_count = 0;
    unsigned long even_count = 0;
    bool trivial = true;
};

struct SearchReport {
    SearchConfig config;
    std::vector<SearchHit> multi_hit;  // >= 2 hits, ascending d
    unsigned long d_scanned = 0;
    unsigned long d_with_hits = 0;
    unsigned long total_hits = 0;
};

/// True iff d has no repeated prime factor (trial division).
bool is_squarefree(const Int& d);

/// Scans one nonsquare modulus. Early exit once X_n exceeds the largest
/// m_cap-digit repdigit; X_n monotonicity is asserted along the way so
/// the exit loses nothing. Rejects square or d < 2.
std::optional<SearchHit> scan_d(unsigned long base, const Int& d,
                                unsigned long n_max, unsigned long m_cap,
                                bool include_m1);

/// Full scan over 2 <= d <= d_max. Work is split into contiguous d
/// intervals across config.shards workers and merged in d order; output
/// is byte-identical for any shard count. Every multi-hit modulus is
/// re-verified from scratch before it is reported.
SearchReport search(const SearchConfig& config);

/// The reduced two-odd-solution instance attached to a multi-hit d:
/// X_1' = a*(b^m-1)/(b-1) with a <= (b-1)^2 for the orbit seeded at
/// X_{n3}, and X'_n = c*(b^{m*ell}-1)/(b-1).
struct ReducedOddInstance {
    Int big_d;              // X_{n3}^2 - 1
    unsigned long a = 0;    // reduced digit a3c
    unsigned long m = 0;    // m3 = gcd(m1, m2)
    unsigned long c = 0;    // digit of the larger-index solution
    unsigned long ell = 0;  // m2 / m3
    unsigned long n = 0;    // n2 / n3, odd > 1
};

struct HitAnnotation {
    unsigned long n = 0;
    bool even = false;
    std::optional<EvenBranch> branch;  // even hits only
};

struct ClassifiedHit {
    SearchHit hit;
    std::vector<HitAnnotation> annotations;
    std::optional<ReducedOddInstance> reduced;   // first two odd hits
    bool valuation_checked = false;
};

struct ClassifiedReport {
    SearchReport source;
    std::vector<ClassifiedHit> classified;
    std::vector<Evidence> falsifications;
    bool ok() const { return falsifications.empty(); }
};

/// Routes every hit of a report through the even-case classifier or
/// records it as an odd-case instance; for moduli with two odd hits,
/// runs the gcd reduction, attaches the reduced instance, and runs the
/// modulus-divisibility verifier on it.
ClassifiedReport classify_report(const SearchReport& report);

}  // namespace pellrep
