// density.hpp
// Exact natural densities by inclusion-exclusion:
//
//   T_n(a_1..a_r) = sum_{j} (-1)^j sum_{i_1<..<i_j} 1 / [n, a_{i_1},..,a_{i_j}]
//
// is the density of multiples of n divisible by no a_i. Conditions are
// first reduced to c_i = [n, a_i]/n, deduplicated, and pruned (a condition
// that is a multiple of another is implied by it). The alternating sum then
// factors over connected components of the "share a prime factor" graph on
// the reduced conditions, so the 2^r enumeration cost is paid per component
// rather than for the whole set.

#pragma once

#include <vector>

#include "omegastar/rational.hpp"
#include "omegastar/sieve.hpp"
#include "omegastar/util.hpp"

namespace omegastar {

struct TnQuery {
    u64 n = 1;
    std::vector<u64> conditions;
};

struct TnOptions {
    std::size_t max_conditions = 64;   // after dedup/pruning
    std::size_t component_cap = 24;    // 2^cap subsets per component
};

// Exact density in [0, 1/n].
ExactRational t_n(const TnQuery& query, const TnOptions& opt = {});

// Finite check: #{m <= x : n | m, no a_i | m} / x. Equals t_n exactly when
// x is a multiple of lcm(n, a_1..a_r).
double t_n_empirical(const TnQuery& query, u64 x);

// Rigorous upper bound for the density of the class of rep under "same
// shifted-prime divisor set": T_L over the conditions {[m, L] : m shifted
// prime <= y, m does not divide L} with L = rep. Requires rep to be its
// own class minimum.
ExactRational class_density_upper(u64 rep, u64 y,
                                  const ShiftedPrimeTable& table,
                                  const TnOptions& opt = {});

}  // namespace omegastar
