// pair_sums.cpp

#include "omegastar/pair_sums.hpp"

#include <algorithm>

namespace omegastar {

namespace {

constexpr u64 kS2Budget = 10'000'000;
constexpr u64 kS3Budget = 10'000;
constexpr u64 kM2Budget = 1'000'000;
constexpr u64 kM2PrimeBudget = 100'000'000;
constexpr u64 kTailDirectCutoff = 10'000;

void check_table(u64 x, const ShiftedPrimeTable& table, const char* who) {
    if (x < 1) throw domain_error(std::string(who) + ": x must be >= 1");
    if (x > table.limit)
        throw domain_error(std::string(who) +
                           ": x exceeds the shifted-prime table limit");
}

// d-blocks for the triple enumeration: single-d blocks up front (d = 1 is
// by far the heaviest), then coarse chunks.
BlockCover d_cover(u64 x) { return BlockCover{x, std::min<u64>(x, 1024)}; }

}  // namespace

u64 s2_census(u64 x, const ShiftedPrimeTable& table) {
    check_table(x, table, "s2_census");
    if (x > kS2Budget)
        throw budget_error("s2_census: enumeration budget is x <= 1e7");
    const auto cover = d_cover(x);
    auto partials = map_blocks<u64>(cover.count(), [&](std::size_t blk) {
        u64 lo, hi, acc = 0;
        cover.bounds(blk, lo, hi);
        visit_gcd_triples(x, table, lo, hi, [&](const GcdTriple&) { acc++; });
        return acc;
    });
    u64 total = 0;
    for (u64 p : partials) total += p;
    return total;
}

u64 s3_census(u64 x, const ShiftedPrimeTable& table) {
    check_table(x, table, "s3_census");
    if (x > kS3Budget)
        throw budget_error("s3_census: cubic enumeration budget is x <= 1e4");

    // Pair lcms <= x (each ordered pair once), then extend by the third
    // prime; lcm(l12, m3) <= x prunes almost everything.
    std::vector<u64> pair_lcms;
    visit_gcd_triples(x, table, 1, x, [&](const GcdTriple& t) {
        pair_lcms.push_back(t.lcm());
    });
    const auto& ms = table.members;
    const std::size_t mcount = static_cast<std::size_t>(
        std::upper_bound(ms.begin(), ms.end(), x) - ms.begin());

    BlockCover cover{pair_lcms.size(), 1};
    auto partials = map_blocks<u64>(cover.count(), [&](std::size_t blk) {
        u64 lo, hi, acc = 0;
        cover.bounds(blk, lo, hi);
        for (u64 ii = lo; ii <= hi; ii++) {
            const u64 l12 = pair_lcms[ii - 1];
            for (std::size_t j = 0; j < mcount; j++)
                if (lcm_bounded(l12, ms[j], x)) acc++;
        }
        return acc;
    });
    u64 total = 0;
    for (u64 p : partials) total += p;
    return total;
}

namespace {

// cal_m2 and its p,q <= x restriction share one enumeration pass. The
// restriction only drops pairs touching the boundary prime x+1 (ad == x or
// bd == x), which exist only when x+1 is prime.
struct M2Pass {
    KahanSum full;
    KahanSum restricted;
};

M2Pass m2_pass(u64 x, const ShiftedPrimeTable& table) {
    const auto cover = d_cover(x);
    struct Partial {
        double f = 0, fc = 0, r = 0, rc = 0;
    };
    auto partials = map_blocks<Partial>(cover.count(), [&](std::size_t blk) {
        u64 lo, hi;
        cover.bounds(blk, lo, hi);
        KahanSum full, restricted;
        visit_gcd_triples(x, table, lo, hi, [&](const GcdTriple& t) {
            const double w = 1.0 / static_cast<double>(t.lcm());
            full.add(w);
            if (t.a * t.d != x && t.b * t.d != x) restricted.add(w);
        });
        return Partial{full.sum, full.c, restricted.sum, restricted.c};
    });
    M2Pass out;
    for (const Partial& p : partials) {
        out.full.add(p.f);
        out.full.add(p.fc);
        out.restricted.add(p.r);
        out.restricted.add(p.rc);
    }
    return out;
}

}  // namespace

double cal_m2(u64 x, const ShiftedPrimeTable& table) {
    check_table(x, table, "cal_m2");
    if (x > kM2Budget)
        throw budget_error("cal_m2: enumeration budget is x <= 1e6");
    return m2_pass(x, table).full.value();
}

double m2_restricted(u64 x, u64 u, const ShiftedPrimeTable& table) {
    check_table(x, table, "m2_restricted");
    if (u == 0) throw domain_error("m2_restricted: u must be positive");
    if (x > kM2Budget)
        throw budget_error("m2_restricted: enumeration budget is x <= 1e6");
    if (u > x) return 0.0;
    const auto cover = d_cover(x);
    auto partials = map_blocks<KahanSum>(cover.count(), [&](std::size_t blk) {
        u64 lo, hi;
        cover.bounds(blk, lo, hi);
        KahanSum acc;
        visit_gcd_triples(x, table, lo, hi, [&](const GcdTriple& t) {
            const u64 l = t.lcm();
            if (l % u == 0) acc.add(1.0 / static_cast<double>(l));
        });
        return acc;
    });
    KahanSum total;
    for (const KahanSum& p : partials) total.add(p);
    return total.value();
}

// -----------------------------------------------------------------------
// cal_m2_prime via the gcd identity
//   1/[p-1,q-1] = sum_{d | (p-1,q-1)} phi(d)/((p-1)(q-1)),
// which turns the double sum over p,q <= x into
//   sum_d phi(d) * S_d^2,  S_d = sum_{p<=x, d | p-1} 1/(p-1).
// -----------------------------------------------------------------------

namespace {

// Euler phi for 1..n by the standard divisor-subtraction sieve.
std::vector<u32> phi_sieve(u64 n, const PrimeSet& ps) {
    std::vector<u32> phi(n + 1);
    for (u64 i = 0; i <= n; i++) phi[i] = static_cast<u32>(i);
    for (u64 p : ps.primes) {
        if (p > n) break;
        for (u64 j = p; j <= n; j += p) phi[j] -= phi[j] / p;
    }
    return phi;
}

// Divisors of n, unsorted, via trial division against the sieved primes.
void divisors_of(u64 n, const std::vector<u64>& primes,
                 std::vector<u32>& out) {
    out.clear();
    out.push_back(1);
    u64 rem = n;
    for (u64 f : primes) {
        if (f * f > rem) break;
        if (rem % f) continue;
        const std::size_t base = out.size();
        u64 pe = 1;
        while (rem % f == 0) {
            rem /= f;
            pe *= f;
            for (std::size_t i = 0; i < base; i++)
                out.push_back(static_cast<u32>(out[i] * pe));
        }
    }
    if (rem > 1) {
        const std::size_t base = out.size();
        for (std::size_t i = 0; i < base; i++)
            out.push_back(static_cast<u32>(out[i] * rem));
    }
}

}  // namespace

double cal_m2_prime(u64 x, const PrimeSet& ps, u64 budget_bytes) {
    if (x < 2) return 0.0;
    if (x > kM2PrimeBudget)
        throw budget_error("cal_m2_prime: budget is x <= 1e8");
    if (x > ps.limit)
        throw domain_error("cal_m2_prime: x exceeds the prime set limit");
    const u64 need = (x + 1) * (sizeof(double) + sizeof(u32));
    if (need > budget_bytes)
        throw budget_error(
            "cal_m2_prime: phi table and buckets need about " +
            std::to_string(need >> 20) + " MiB, over the configured budget");

    // S_d buckets, filled in ascending p order per prime block. The
    // factorizations inside a block run in parallel; accumulation is a
    // serial in-order pass, so the float sums are schedule-independent.
    std::vector<double> bucket(x, 0.0);
    const auto& primes = ps.primes;
    const std::size_t pcount = static_cast<std::size_t>(
        std::upper_bound(primes.begin(), primes.end(), x) - primes.begin());

    constexpr std::size_t kBlock = 4096;
    std::vector<std::vector<u32>> divs(kBlock);
    for (std::size_t start = 0; start < pcount; start += kBlock) {
        const std::size_t stop = std::min(pcount, start + kBlock);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
        for (i64 i = static_cast<i64>(start); i < static_cast<i64>(stop); i++)
            divisors_of(primes[static_cast<std::size_t>(i)] - 1, primes,
                        divs[static_cast<std::size_t>(i) - start]);
        for (std::size_t i = start; i < stop; i++) {
            const double w = 1.0 / static_cast<double>(primes[i] - 1);
            for (u32 d : divs[i - start]) bucket[d - 1] += w;
        }
    }

    const std::vector<u32> phi = phi_sieve(x - 1, ps);
    BlockCover cover{x - 1, 1ull << 16};
    auto partials = map_blocks<KahanSum>(cover.count(), [&](std::size_t blk) {
        u64 lo, hi;
        cover.bounds(blk, lo, hi);
        KahanSum acc;
        for (u64 d = lo; d <= hi; d++) {
            const double s = bucket[d - 1];
            if (s != 0.0)
                acc.add(static_cast<double>(phi[d]) * s * s);
        }
        return acc;
    });
    KahanSum total;
    for (const KahanSum& p : partials) total.add(p);
    return total.value();
}

// -----------------------------------------------------------------------
// Tail
// -----------------------------------------------------------------------

double tail_direct(u64 x, const ShiftedPrimeTable& table) {
    check_table(x, table, "tail_direct");
    const auto& ms = table.members;
    // primes p <= x correspond to members m <= x-1
    const std::size_t count = static_cast<std::size_t>(
        std::upper_bound(ms.begin(), ms.end(), x - 1) - ms.begin());
    BlockCover cover{count, 64};
    auto partials = map_blocks<KahanSum>(cover.count(), [&](std::size_t blk) {
        u64 lo, hi;
        cover.bounds(blk, lo, hi);
        KahanSum acc;
        for (u64 ii = lo; ii <= hi; ii++) {
            const u64 m1 = ms[ii - 1];
            for (std::size_t j = 0; j < count; j++) {
                const u64 m2 = ms[j];
                const u64 l = m1 / binary_gcd(m1, m2) * m2;
                if (l > x) acc.add(1.0 / static_cast<double>(l));
            }
        }
        return acc;
    });
    KahanSum total;
    for (const KahanSum& p : partials) total.add(p);
    return total.value();
}

double tail_via_difference(u64 x, const PrimeSet& ps,
                           const ShiftedPrimeTable& table) {
    check_table(x, table, "tail_via_difference");
    if (x > kM2Budget)
        throw budget_error("tail_via_difference: bounded part budget is x <= 1e6");
    return cal_m2_prime(x, ps) - m2_pass(x, table).restricted.value();
}

double tail_sum(u64 x, const PrimeSet& ps, const ShiftedPrimeTable& table) {
    if (x <= kTailDirectCutoff) return tail_direct(x, table);
    return tail_via_difference(x, ps, table);
}

PairSumReport pair_report(u64 x, const PrimeSet& ps,
                          const ShiftedPrimeTable& table) {
    check_table(x, table, "pair_report");
    if (x > kM2Budget)
        throw budget_error("pair_report: budget is x <= 1e6");
    PairSumReport r;
    r.x = x;
    r.s2_count = s2_census(x, table);
    r.s2 = static_cast<double>(r.s2_count) / static_cast<double>(x);
    const M2Pass pass = m2_pass(x, table);
    r.cal_m2 = pass.full.value();
    r.cal_m2_prime = cal_m2_prime(x, ps);
    r.tail = r.cal_m2_prime - pass.restricted.value();
    return r;
}

}  // namespace omegastar
