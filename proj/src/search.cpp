#include "pellrep/search.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace pellrep {

bool is_squarefree(const Int& d) {
    if (d < 1) throw std::invalid_argument("is_squarefree: d must be >= 1");
    Int rest = d;
    auto strip = [&](unsigned long p) {
        if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) return true;
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) return false;
        return true;
    };
    if (!strip(2) || !strip(3)) return false;
    for (unsigned long p = 5; Int(p) * p <= rest; p += 6) {
        if (!strip(p) || !strip(p + 2)) return false;
    }
    return true;
}

std::optional<SearchHit> scan_d(unsigned long base, const Int& d,
                                unsigned long n_max, unsigned long m_cap,
                                bool include_m1) {
    if (base < 2) throw std::invalid_argument("scan_d: base must be >= 2");
    if (m_cap < 1) throw std::invalid_argument("scan_d: m_cap must be >= 1");
    const PellOrbit orbit = fundamental_solution(d);  // rejects squares and d < 2

    const Int ceiling = ipow(base, m_cap) - 1;  // largest m_cap-digit repdigit
    SearchHit hit;
    hit.d = d;

    PellWalker walker(orbit);
    Int last_x(1);
    for (unsigned long n = 1; n <= n_max; walker.advance(), ++n) {
        if (walker.x() <= last_x)
            throw identity_violation("scan_d: X_n failed to increase");
        last_x = walker.x();
        if (walker.x() > ceiling) break;  // monotone, so nothing beyond can hit
        const auto form = as_repdigit(walker.x(), base);
        if (!form) continue;
        if (form->length == 1 && !include_m1) continue;
        hit.hits.push_back(HitEntry{n, form->digit, form->length, walker.x()});
        if (n % 2 == 0)
            ++hit.even_count;
        else
            ++hit.odd_count;
        if (form->length > 1) hit.trivial = false;
    }
    if (hit.hits.empty()) return std::nullopt;
    return hit;
}

namespace {

struct ShardResult {
    std::vector<SearchHit> multi_hit;
    unsigned long d_scanned = 0;
    unsigned long d_with_hits = 0;
    unsigned long total_hits = 0;
};

ShardResult scan_interval(const SearchConfig& config, unsigned long lo,
                          unsigned long hi) {
    ShardResult result;
    for (unsigned long dv = lo; dv <= hi; ++dv) {
        const Int d(dv);
        if (is_square(d)) continue;
        if (config.squarefree_only && !is_squarefree(d)) continue;
        ++result.d_scanned;
        const auto hit =
            scan_d(config.base, d, config.n_max, config.m_cap, config.include_m1);
        if (!hit) continue;
        ++result.d_with_hits;
        result.total_hits += hit->hits.size();
        if (hit->hits.size() >= 2) result.multi_hit.push_back(*hit);
    }
    return result;
}

void reverify_hit(const SearchConfig& config, const SearchHit& hit) {
    // recompute from scratch and re-parse digits
    const PellOrbit orbit = fundamental_solution(hit.d);
    for (const HitEntry& entry : hit.hits) {
        const Int x = nth_solution(orbit, entry.n).x;
        if (x != entry.x)
            throw identity_violation("search: reported X_n does not recompute");
        const auto ds = digits(x, config.base);
        if (ds.size() != entry.length)
            throw identity_violation("search: reported length does not recompute");
        for (unsigned long digit : ds)
            if (digit != entry.digit)
                throw identity_violation("search: reported digits do not recompute");
    }
}

}  // namespace

SearchReport search(const SearchConfig& config) {
    if (config.base < 2) throw std::invalid_argument("search: base must be >= 2");
    if (config.d_max < 2) throw std::invalid_argument("search: d_max must be >= 2");
    if (config.n_max < 1) throw std::invalid_argument("search: n_max must be >= 1");
    if (config.m_cap < 1) throw std::invalid_argument("search: m_cap must be >= 1");
    if (config.shards < 1) throw std::invalid_argument("search: shards must be >= 1");

    SearchReport report;
    report.config = config;

    // contiguous d intervals, one per shard, merged in d order
    const unsigned long lo = 2;
    const unsigned long span = config.d_max - lo + 1;
    const unsigned shards = static_cast<unsigned>(
        std::min<unsigned long>(config.shards, span));
    std::vector<ShardResult> results(shards);
    std::vector<std::thread> workers;
    workers.reserve(shards);
    for (unsigned s = 0; s < shards; ++s) {
        const unsigned long begin = lo + span * s / shards;
        const unsigned long end = lo + span * (s + 1) / shards - 1;
        workers.emplace_back(
            [&config, &results, s, begin, end] { results[s] = scan_interval(config, begin, end); });
    }
    for (auto& worker : workers) worker.join();

    for (const ShardResult& result : results) {
        report.d_scanned += result.d_scanned;
        report.d_with_hits += result.d_with_hits;
        report.total_hits += result.total_hits;
        report.multi_hit.insert(report.multi_hit.end(), result.multi_hit.begin(),
                                result.multi_hit.end());
    }
    for (const SearchHit& hit : report.multi_hit) reverify_hit(config, hit);
    return report;
}

ClassifiedReport classify_report(const SearchReport& report) {
    ClassifiedReport out;
    out.source = report;
    const unsigned long base = report.config.base;

    for (const SearchHit& hit : report.multi_hit) {
        ClassifiedHit classified;
        classified.hit = hit;

        std::vector<const HitEntry*> odd_hits;
        for (const HitEntry& entry : hit.hits) {
            HitAnnotation note;
            note.n = entry.n;
            note.even = entry.n % 2 == 0;
            if (note.even) {
                try {
                    note.branch = classify_even_solution(hit.d, entry.n, entry.digit,
                                                         entry.length, base)
                                      .branch;
                } catch (const falsification_error& fe) {
                    out.falsifications.push_back(fe.evidence);
                }
            } else {
                odd_hits.push_back(&entry);
            }
            classified.annotations.push_back(note);
        }

        if (odd_hits.size() >= 2) {
            const HitEntry& first = *odd_hits[0];
            const HitEntry& second = *odd_hits[1];
            const unsigned long n3 = std::gcd(first.n, second.n);
            const PellOrbit orbit = fundamental_solution(hit.d);
            const Int x_n3 = nth_solution(orbit, n3).x;

            Int g;
            mpz_gcd(g.get_mpz_t(), first.x.get_mpz_t(), second.x.get_mpz_t());
            if (g != x_n3) {
                out.falsifications.push_back(Evidence{
                    "x-gcd-identity",
                    "gcd of the two odd-index solutions is not X_{gcd}",
                    {{"d", to_decimal(hit.d)},
                     {"n1", std::to_string(first.n)},
                     {"n2", std::to_string(second.n)}}});
            } else {
                try {
                    const GcdReduction reduction = gcd_reduction(
                        first.digit, first.length, second.digit, second.length, base);
                    ReducedOddInstance instance;
                    instance.big_d = x_n3 * x_n3 - 1;
                    instance.a = reduction.a3c;
                    instance.m = reduction.m3;
                    instance.c = second.digit;
                    instance.ell = second.length / reduction.m3;
                    instance.n = second.n / n3;
                    classified.reduced = instance;

                    if (x_n3 != Int(reduction.a3c) * repunit(base, reduction.m3))
                        out.falsifications.push_back(Evidence{
                            "gcd-reduction-shape",
                            "X_{gcd} is not the reduced repdigit",
                            {{"d", to_decimal(hit.d)}}});
                    else if (instance.n >= 3 && x_n3 >= 2) {
                        const ValuationReport val = valuation_divisibility_check(
                            base, instance.a, instance.c, instance.n, instance.m);
                        classified.valuation_checked = true;
                        for (const auto& e : val.falsifications)
                            out.falsifications.push_back(e);
                    }
                } catch (const falsification_error& fe) {
                    out.falsifications.push_back(fe.evidence);
                }
            }
        }
        out.classified.push_back(std::move(classified));
    }
    return out;
}

}  // namespace pellrep
