// sieve.hpp
// Prime generation: a segmented sieve of Eratosthenes producing a packed
// primality bitmap plus the ascending prime list, and the table of shifted
// primes m = p-1 derived from it. Both structures are immutable after
// construction and safe for concurrent reads.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "omegastar/util.hpp"

namespace omegastar {

// Bytes the sieve may allocate before refusing (bitmap + prime list).
// Overridable per call; the default keeps desk-scale runs comfortable.
inline constexpr u64 kDefaultSieveBudgetBytes = 6ull << 30;

// Hard ceiling on sieve limits. Larger ranges are out of scope.
inline constexpr u64 kMaxSieveLimit = 1ull << 40;

struct PrimeSet {
    u64 limit = 0;                // bitmap covers 2..limit
    std::vector<u64> bitmap;      // bit n set iff n prime
    std::vector<u64> primes;      // ascending, last <= limit

    bool is_prime(u64 n) const {
        if (n > limit) return false;
        return (bitmap[n >> 6] >> (n & 63)) & 1;
    }
};

// All primes <= limit. Requires limit >= 2.
PrimeSet primes_up_to(u64 limit, u64 budget_bytes = kDefaultSieveBudgetBytes);

struct ShiftedPrimeTable {
    u64 limit = 0;                // members are <= limit
    std::vector<u64> members;     // ascending m with m+1 prime; members[0] = 1
    std::vector<u64> bitmap;      // bit m set iff m+1 prime, m <= limit

    bool contains(u64 m) const {
        if (m == 0 || m > limit) return false;
        return (bitmap[m >> 6] >> (m & 63)) & 1;
    }
};

// All m = p-1 <= limit with p prime. Requires limit >= 1.
ShiftedPrimeTable shifted_primes_up_to(u64 limit,
                                       u64 budget_bytes = kDefaultSieveBudgetBytes);
ShiftedPrimeTable make_shifted_table(const PrimeSet& ps, u64 limit);

// -----------------------------------------------------------------------
// Optional on-disk bitmap cache ("OSLB1" magic, little-endian u64 limit,
// packed 64-bit words). Never consulted unless explicitly requested.
// -----------------------------------------------------------------------
void save_bitmap(const PrimeSet& ps, const std::string& path);
std::optional<PrimeSet> load_bitmap(const std::string& path);

// Loads `<cache_dir>/primes_<limit>.oslb` if valid, else sieves and stores.
PrimeSet primes_up_to_cached(u64 limit, const std::string& cache_dir,
                             u64 budget_bytes = kDefaultSieveBudgetBytes);

}  // namespace omegastar
