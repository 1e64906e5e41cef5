// level_sets.hpp
// Level sets L_k = {n : omega*(n) = k}: exact censuses, the maximum of
// omega* with its least witness, N(x,y) counts, and the equivalence
// relation "same set of shifted prime divisors" with its class operations.

#pragma once

#include <vector>

#include "omegastar/omega_star.hpp"
#include "omegastar/sieve.hpp"
#include "omegastar/util.hpp"

namespace omegastar {

struct LevelCensus {
    u64 x = 0;
    std::vector<u64> counts;   // counts[k] = #(L_k cap [1,x]); counts[0] unused
    u32 k_max = 0;
    u64 k_max_witness = 0;     // least n <= x attaining k_max

    u64 count_at(u32 k) const {
        return k < counts.size() ? counts[k] : 0;
    }
    // sum of counts[k] for k >= j
    u64 tail_at(u32 j) const {
        u64 s = 0;
        for (std::size_t k = j; k < counts.size(); k++) s += counts[k];
        return s;
    }
};

// Streams sieve segments; memory stays bounded for any x.
LevelCensus level_census(u64 x, const ShiftedPrimeTable& table,
                         u64 segment_size = kDefaultSegmentSize);

// (k_max, least witness) over [1, x].
std::pair<u32, u64> max_omega_star(u64 x, const ShiftedPrimeTable& table,
                                   u64 segment_size = kDefaultSegmentSize);

// N(x, y) = #{n <= x : omega*(n) >= y}; y may be fractional, ceil is used.
u64 n_count(u64 x, double y, const ShiftedPrimeTable& table,
            u64 segment_size = kDefaultSegmentSize);

struct DivisorSet {
    u64 n = 0;
    std::vector<u64> members;  // sorted; always contains 1

    bool operator==(const DivisorSet& o) const { return members == o.members; }
};

DivisorSet divisor_set(u64 n, const PrimeSet* ps = nullptr);
bool same_class(u64 m, u64 n, const PrimeSet* ps = nullptr);

// lcm of the shifted-prime divisors of n; divides n.
u64 class_min(u64 n, const PrimeSet* ps = nullptr);

// #{m <= x : divisor_set(m) == divisor_set(rep)} / x. Only multiples of
// class_min(rep) can qualify, and for those the divisor set always contains
// divisor_set(rep), so equality reduces to omega*(m) == omega*(rep); the
// scan therefore runs on sieve counts alone.
double empirical_class_density(u64 rep, u64 x, const ShiftedPrimeTable& table,
                               u64 segment_size = kDefaultSegmentSize);

}  // namespace omegastar
