// pair_sums.hpp
// Ordered prime pair/triple statistics over the lcm of shifted primes:
//
//   s2_census      #{(p,q) : [p-1,q-1] <= x}        (pairs, p = q allowed)
//   s3_census      #{(p,q,r) : [p-1,q-1,r-1] <= x}
//   cal_m2         sum over pairs with lcm <= x of 1/lcm
//   cal_m2_prime   sum over all pairs p,q <= x of 1/lcm
//   tail_sum       sum over p,q <= x with lcm > x of 1/lcm
//   m2_restricted  cal_m2 filtered to u | lcm
//
// Pairs with p != q are enumerated through the gcd decomposition
// d = (p-1, q-1), p-1 = ad, q-1 = bd with (a,b) = 1, lcm = abd; the
// diagonal p = q is the a = b = 1 slice of the same enumeration. Primes up
// to x+1 participate wherever only the lcm is constrained (the convention
// that reproduces the published pair counts); cal_m2_prime constrains
// p,q <= x by its definition.
//
// Float accumulation is Neumaier-compensated in fixed block order, so every
// result is bit-identical for any worker count.

#pragma once

#include <string>

#include "omegastar/sieve.hpp"
#include "omegastar/util.hpp"

namespace omegastar {

struct GcdTriple {
    u64 a = 0, b = 0, d = 0;  // (a,b) = 1; ad+1 and bd+1 prime

    u64 lcm() const { return a * b * d; }
    u64 p() const { return a * d + 1; }
    u64 q() const { return b * d + 1; }
};

// Serial visitor over all triples with d in [dlo, dhi] and lcm <= x, in
// ascending (d, a, b) order. fn(const GcdTriple&).
template <class Fn>
void visit_gcd_triples(u64 x, const ShiftedPrimeTable& table, u64 dlo,
                       u64 dhi, Fn&& fn) {
    for (u64 d = dlo; d <= dhi; d++) {
        GcdTriple t;
        t.d = d;
        for (u64 ad = d; ad <= x; ad += d) {
            if (!table.contains(ad)) continue;
            t.a = ad / d;
            const u64 bmax = x / ad;
            for (u64 b = 1, bd = d; b <= bmax; b++, bd += d) {
                if (table.contains(bd) && binary_gcd(t.a, b) == 1) {
                    t.b = b;
                    fn(static_cast<const GcdTriple&>(t));
                }
            }
        }
    }
}

u64 s2_census(u64 x, const ShiftedPrimeTable& table);
u64 s3_census(u64 x, const ShiftedPrimeTable& table);
double cal_m2(u64 x, const ShiftedPrimeTable& table);
double m2_restricted(u64 x, u64 u, const ShiftedPrimeTable& table);

// phi-identity route: sum_d phi(d) * (sum_{p<=x, p=1 mod d} 1/(p-1))^2.
// Needs the prime set for divisor enumeration of p-1. x <= 1e8.
double cal_m2_prime(u64 x, const PrimeSet& ps,
                    u64 budget_bytes = kDefaultSieveBudgetBytes);

// Theorem tail: sum over p,q <= x, [p-1,q-1] > x. Direct filtered loop at
// small x, cal_m2_prime minus the bounded part at large x.
double tail_sum(u64 x, const PrimeSet& ps, const ShiftedPrimeTable& table);

// The two tail routes, exposed for cross-validation.
double tail_direct(u64 x, const ShiftedPrimeTable& table);
double tail_via_difference(u64 x, const PrimeSet& ps,
                           const ShiftedPrimeTable& table);

struct PairSumReport {
    u64 x = 0;
    u64 s2_count = 0;
    double s2 = 0;             // s2_count / x
    double cal_m2 = 0;
    double cal_m2_prime = 0;
    double tail = 0;           // cal_m2_prime - (p,q <= x part of cal_m2)
    std::string float_precision = "kahan-double";
};

// Full report; x <= 1e6 (the tightest of the per-op budgets involved).
PairSumReport pair_report(u64 x, const PrimeSet& ps,
                          const ShiftedPrimeTable& table);

}  // namespace omegastar
