// moments.hpp
// M_k(x) = (1/x) * sum_{n<=x} omega*(n)^k, computed two independent ways:
//
//   moment_direct   streams sieve segments and accumulates omega*(n)^k
//                   in exact 128-bit integers (k = 1..4).
//   moment_via_lcm  opens the k-th power: sum over ordered k-tuples of
//                   shifted primes (repetition allowed) with
//                   lcm <= x of floor(x / lcm) (k = 1..3).
//
// The two power sums must be equal integers - no tolerance. That identity
// is the backbone of the cross-checks in the test suite.

#pragma once

#include "omegastar/omega_star.hpp"
#include "omegastar/sieve.hpp"
#include "omegastar/util.hpp"

namespace omegastar {

enum class MomentMethod { direct, lcm_identity };

struct MomentReport {
    u64 x = 0;
    int k = 0;
    u128 power_sum = 0;      // exact sum_{n<=x} omega*(n)^k
    long double value = 0;   // power_sum / x
    MomentMethod method = MomentMethod::direct;
};

// Direct summation over the sieve. k in 1..4; x <= table.limit.
MomentReport moment_direct(u64 x, int k, const ShiftedPrimeTable& table,
                           u64 segment_size = kDefaultSegmentSize);

// Serial reference of the same computation (test/bench baseline).
MomentReport moment_direct_serial(u64 x, int k, const ShiftedPrimeTable& table);

// Tuple enumeration. Budgets: k=1 any x <= table.limit, k=2 x <= 1e5,
// k=3 x <= 1e4 (enumeration cost beyond that earns a budget_error).
MomentReport moment_via_lcm(u64 x, int k, const ShiftedPrimeTable& table);

}  // namespace omegastar
