// util.hpp
// Shared small pieces: integer aliases, exact 128-bit helpers, binary gcd,
// bounded lcm, compensated float accumulation, error types, and the
// fixed-block parallel reduction used by every engine.

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace omegastar {

using u8 = std::uint8_t;
using u16 = std::uint16_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i64 = std::int64_t;

// Argument outside the operation's domain (n = 0, k out of range, bad range).
class domain_error : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Work or memory beyond the configured budget. The message carries advice.
class budget_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string u128_to_string(u128 x);

inline u64 isqrt(u64 n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) r--;
    while ((r + 1) * (r + 1) <= n) r++;
    return r;
}

// Stein's binary gcd. gcd(0, b) = b.
inline u64 binary_gcd(u64 a, u64 b) {
    if (a == 0) return b;
    if (b == 0) return a;
    int az = __builtin_ctzll(a);
    int bz = __builtin_ctzll(b);
    int shift = az < bz ? az : bz;
    a >>= az;
    for (;;) {
        b >>= __builtin_ctzll(b);
        if (a > b) { u64 t = a; a = b; b = t; }
        b -= a;
        if (b == 0) return a << shift;
    }
}

// lcm(a, b) if it is <= bound, otherwise 0. Never overflows for bound < 2^63.
inline u64 lcm_bounded(u64 a, u64 b, u64 bound) {
    u64 s = a / binary_gcd(a, b);
    if (s > bound / b) return 0;
    return s * b;
}

// Neumaier-compensated accumulator: deterministic for a fixed add order.
struct KahanSum {
    double sum = 0.0;
    double c = 0.0;

    void add(double v) {
        double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            c += (sum - t) + v;
        else
            c += (v - t) + sum;
        sum = t;
    }
    void add(const KahanSum& o) {
        add(o.sum);
        add(o.c);
    }
    double value() const { return sum + c; }
};

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// -----------------------------------------------------------------------
// Fixed-block parallel reduction.
//
// The iteration space is cut into blocks that do NOT depend on the thread
// count; each block is evaluated serially by one worker and the partial
// results are folded in block order afterwards. Integer and compensated
// float reductions built this way are bit-identical for 1..N threads.
// -----------------------------------------------------------------------
template <class Partial, class BlockFn>
std::vector<Partial> map_blocks(std::size_t nblocks, BlockFn&& fn) {
    std::vector<Partial> partials(nblocks);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(nblocks); b++)
        partials[static_cast<std::size_t>(b)] =
            fn(static_cast<std::size_t>(b));
    return partials;
}

// Block covering of [1, x]: one block per value below `fine`, then chunks
// of `fine` values. Front-loads the heavy small indices so dynamic
// scheduling balances well.
struct BlockCover {
    u64 x;
    u64 fine;

    std::size_t count() const {
        if (x <= fine) return static_cast<std::size_t>(x);
        return static_cast<std::size_t>(fine + (x - fine + fine - 1) / fine);
    }
    // [lo, hi] of block b, 1-based values
    void bounds(std::size_t b, u64& lo, u64& hi) const {
        if (b < fine) {
            lo = hi = b + 1;
        } else {
            lo = fine + (b - fine) * fine + 1;
            hi = lo + fine - 1;
            if (hi > x) hi = x;
        }
    }
};

}  // namespace omegastar
