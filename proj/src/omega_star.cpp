// omega_star.cpp

#include "omegastar/omega_star.hpp"

#include <algorithm>
#include <cassert>

#include "omegastar/primality.hpp"

namespace omegastar {

namespace {

bool shifted_is_prime(u64 d, const PrimeSet* ps) {
    // d+1 prime?
    if (ps && d + 1 <= ps->limit) return ps->is_prime(d + 1);
    return is_prime_u64(d + 1);
}

}  // namespace

u32 omega_star(u64 n, const PrimeSet* ps) {
    if (n == 0) throw domain_error("omega_star: n must be positive");
    u32 count = 0;
    for (u64 i = 1; i * i <= n; i++) {
        if (n % i != 0) continue;
        if (shifted_is_prime(i, ps)) count++;
        const u64 j = n / i;
        if (j != i && shifted_is_prime(j, ps)) count++;
    }
    return count;
}

std::vector<u64> shifted_prime_divisors(u64 n, const PrimeSet* ps) {
    if (n == 0) throw domain_error("shifted_prime_divisors: n must be positive");
    std::vector<u64> out;
    for (u64 i = 1; i * i <= n; i++) {
        if (n % i != 0) continue;
        if (shifted_is_prime(i, ps)) out.push_back(i);
        const u64 j = n / i;
        if (j != i && shifted_is_prime(j, ps)) out.push_back(j);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void check_range(u64 lo, u64 hi, const ShiftedPrimeTable& table) {
    if (lo < 1 || lo >= hi)
        throw domain_error("omega_star_range: need 1 <= lo < hi");
    if (hi > table.limit + 1)
        throw domain_error(
            "omega_star_range: range exceeds the shifted-prime table limit");
}

// Core marking loop over one exclusively-owned slice.
void sieve_slice(u64 lo, u64 hi, const ShiftedPrimeTable& table,
                 u16* counts) {
    std::fill(counts, counts + (hi - lo), static_cast<u16>(1));
    const u64 mmax = hi - 1;
    for (std::size_t i = 1; i < table.members.size(); i++) {
        const u64 m = table.members[i];
        if (m > mmax) break;
        u64 j = (lo + m - 1) / m * m;
        for (; j < hi; j += m) {
            assert(counts[j - lo] < 0xffff);
            counts[j - lo]++;
        }
    }
}

}  // namespace

OmegaStarSegment omega_star_range_serial(u64 lo, u64 hi,
                                         const ShiftedPrimeTable& table) {
    check_range(lo, hi, table);
    OmegaStarSegment seg;
    seg.lo = lo;
    seg.hi = hi;
    seg.counts.resize(hi - lo);
    sieve_slice(lo, hi, table, seg.counts.data());
    return seg;
}

OmegaStarSegment omega_star_range(u64 lo, u64 hi,
                                  const ShiftedPrimeTable& table,
                                  u64 segment_size) {
    check_range(lo, hi, table);
    if (segment_size == 0) segment_size = kDefaultSegmentSize;
    OmegaStarSegment seg;
    seg.lo = lo;
    seg.hi = hi;
    seg.counts.resize(hi - lo);
    const i64 nsub = static_cast<i64>((hi - lo + segment_size - 1) / segment_size);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (i64 s = 0; s < nsub; s++) {
        const u64 slo = lo + static_cast<u64>(s) * segment_size;
        const u64 shi = std::min(hi, slo + segment_size);
        sieve_slice(slo, shi, table, seg.counts.data() + (slo - lo));
    }
    return seg;
}

}  // namespace omegastar
