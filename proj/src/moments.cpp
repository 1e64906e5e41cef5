// moments.cpp

#include "omegastar/moments.hpp"

#include <algorithm>

namespace omegastar {

namespace {

void check_direct_args(u64 x, int k, const ShiftedPrimeTable& table) {
    if (x < 1) throw domain_error("moment: x must be >= 1");
    if (k < 1 || k > 4)
        throw domain_error(
            "moment_direct: order k must be in 1..4 (higher powers risk "
            "128-bit overflow at large x)");
    if (x > table.limit)
        throw domain_error("moment: x exceeds the shifted-prime table limit");
}

inline u64 pow_small(u64 c, int k) {
    u64 v = c;
    for (int i = 1; i < k; i++) v *= c;
    return v;
}

u128 segment_power_sum(const OmegaStarSegment& seg, u64 x, int k) {
    u128 acc = 0;
    const u64 top = std::min(seg.hi - 1, x);
    for (u64 n = seg.lo; n <= top; n++)
        acc += pow_small(seg.at(n), k);
    return acc;
}

MomentReport finish(u64 x, int k, u128 power_sum, MomentMethod method) {
    MomentReport r;
    r.x = x;
    r.k = k;
    r.power_sum = power_sum;
    r.value = static_cast<long double>(power_sum) / static_cast<long double>(x);
    r.method = method;
    return r;
}

}  // namespace

MomentReport moment_direct(u64 x, int k, const ShiftedPrimeTable& table,
                           u64 segment_size) {
    check_direct_args(x, k, table);
    u128 total = 0;
    for_each_omega_segment(x, table, segment_size,
                           [&](const OmegaStarSegment& seg) {
                               total += segment_power_sum(seg, x, k);
                           });
    return finish(x, k, total, MomentMethod::direct);
}

MomentReport moment_direct_serial(u64 x, int k, const ShiftedPrimeTable& table) {
    check_direct_args(x, k, table);
    u128 total = 0;
    for (u64 lo = 1; lo <= x; lo += kDefaultSegmentSize) {
        const u64 hi = std::min(x + 1, lo + kDefaultSegmentSize);
        total += segment_power_sum(omega_star_range_serial(lo, hi, table), x, k);
    }
    return finish(x, k, total, MomentMethod::direct);
}

// -----------------------------------------------------------------------
// Tuple route. Repetition is allowed and tuples are ordered: expanding
// omega*(n)^k = (sum_{m|n} 1)^k over shifted primes m gives one term per
// ordered k-tuple, so each tuple contributes floor(x / lcm(tuple)).
// -----------------------------------------------------------------------

MomentReport moment_via_lcm(u64 x, int k, const ShiftedPrimeTable& table) {
    if (x < 1) throw domain_error("moment_via_lcm: x must be >= 1");
    if (k < 1 || k > 3)
        throw domain_error("moment_via_lcm: order k must be in 1..3");
    if (x > table.limit)
        throw domain_error("moment_via_lcm: x exceeds the table limit");
    if (k == 2 && x > 100000)
        throw budget_error(
            "moment_via_lcm: pair enumeration budget is x <= 1e5; use "
            "moment_direct for larger x");
    if (k == 3 && x > 10000)
        throw budget_error(
            "moment_via_lcm: triple enumeration budget is x <= 1e4; use "
            "moment_direct for larger x");

    // members <= x only
    const auto& ms = table.members;
    const std::size_t count =
        static_cast<std::size_t>(std::upper_bound(ms.begin(), ms.end(), x) -
                                 ms.begin());

    u128 total = 0;
    if (k == 1) {
        for (std::size_t i = 0; i < count; i++) total += x / ms[i];
        return finish(x, 1, total, MomentMethod::lcm_identity);
    }

    if (k == 2) {
        // Outer member blocks; integer partials folded in order.
        BlockCover cover{count, 16};
        auto partials = map_blocks<u128>(cover.count(), [&](std::size_t b) {
            u64 lo, hi;
            cover.bounds(b, lo, hi);
            u128 acc = 0;
            for (u64 ii = lo; ii <= hi; ii++) {
                const u64 m1 = ms[ii - 1];
                for (std::size_t j = 0; j < count; j++) {
                    const u64 l = lcm_bounded(m1, ms[j], x);
                    if (l) acc += x / l;
                }
            }
            return acc;
        });
        for (u128 p : partials) total += p;
        return finish(x, 2, total, MomentMethod::lcm_identity);
    }

    // k == 3: collect pair lcms <= x once, then extend by the third member.
    std::vector<u64> pair_lcms;
    for (std::size_t i = 0; i < count; i++)
        for (std::size_t j = 0; j < count; j++) {
            const u64 l = lcm_bounded(ms[i], ms[j], x);
            if (l) pair_lcms.push_back(l);
        }
    BlockCover cover{pair_lcms.size(), 16};
    auto partials = map_blocks<u128>(cover.count(), [&](std::size_t b) {
        u64 lo, hi;
        cover.bounds(b, lo, hi);
        u128 acc = 0;
        for (u64 ii = lo; ii <= hi; ii++) {
            const u64 l12 = pair_lcms[ii - 1];
            for (std::size_t j = 0; j < count; j++) {
                const u64 l = lcm_bounded(l12, ms[j], x);
                if (l) acc += x / l;
            }
        }
        return acc;
    });
    for (u128 p : partials) total += p;
    return finish(x, 3, total, MomentMethod::lcm_identity);
}

}  // namespace omegastar
