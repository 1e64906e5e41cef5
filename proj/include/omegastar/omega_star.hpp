// omega_star.hpp
// omega*(n) = number of divisors d of n with d+1 prime.
//
// Two routes are kept side by side:
//   - omega_star(n): per-n reference. Enumerates divisors by trial division
//     to sqrt(n) and tests d+1 for primality. Slow, simple, the oracle.
//   - omega_star_range(): additive sieve over a segment. For every shifted
//     prime m >= 2 it bumps the counter of each multiple; the shifted prime
//     m = 1 divides everything and enters as the counters' initial 1.
// The two must agree pointwise; tests enforce it.

#pragma once

#include <vector>

#include "omegastar/sieve.hpp"
#include "omegastar/util.hpp"

namespace omegastar {

inline constexpr u64 kDefaultSegmentSize = 1ull << 22;

struct OmegaStarSegment {
    u64 lo = 0;                // inclusive
    u64 hi = 0;                // exclusive
    std::vector<u16> counts;   // counts[i] = omega*(lo + i)

    u16 at(u64 n) const { return counts[n - lo]; }
};

// Reference: divisor enumeration + primality of d+1. The bitmap answers
// the primality query when d+1 is in range, Miller-Rabin otherwise.
u32 omega_star(u64 n, const PrimeSet* ps = nullptr);

// Sorted shifted-prime divisors of n (the divisor set of the equivalence
// relation in the level-set module).
std::vector<u64> shifted_prime_divisors(u64 n, const PrimeSet* ps = nullptr);

// Serial reference kernel for one segment. Requires
// 1 <= lo < hi <= table.limit + 1.
OmegaStarSegment omega_star_range_serial(u64 lo, u64 hi,
                                         const ShiftedPrimeTable& table);

// OpenMP kernel: same contract and bit-identical result for any
// segment_size and any worker count.
OmegaStarSegment omega_star_range(u64 lo, u64 hi,
                                  const ShiftedPrimeTable& table,
                                  u64 segment_size = kDefaultSegmentSize);

// Streaming driver: applies `consume(segment)` to [1, x] in chunks of
// segment_size * worker-count entries without materializing the whole
// range. Chunks arrive in ascending order; each is computed in parallel
// internally. Downstream folds over chunks must therefore be either
// order-fixed (they are: chunk order is ascending) or commutative.
template <class Fn>
void for_each_omega_segment(u64 x, const ShiftedPrimeTable& table,
                            u64 segment_size, Fn&& consume) {
    const u64 chunk = segment_size * static_cast<u64>(max_threads());
    for (u64 lo = 1; lo <= x; lo += chunk) {
        const u64 hi = std::min(x + 1, lo + chunk);
        consume(omega_star_range(lo, hi, table, segment_size));
    }
}

}  // namespace omegastar
