// oracles.hpp
// Brute-force reference implementations used only by tests. Everything here
// is written the dumbest defensible way and shares no code path with the
// library kernels it checks.

#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace oracles {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline bool is_prime_trial(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; d++)
        if (n % d == 0) return false;
    return true;
}

inline u64 pi_trial(u64 x) {
    u64 c = 0;
    for (u64 n = 2; n <= x; n++)
        if (is_prime_trial(n)) c++;
    return c;
}

// omega*(n) by scanning every candidate divisor.
inline u32 omega_star_brute(u64 n) {
    u32 c = 0;
    for (u64 d = 1; d <= n; d++)
        if (n % d == 0 && is_prime_trial(d + 1)) c++;
    return c;
}

inline u64 tau(u64 n) {
    u64 c = 0;
    for (u64 d = 1; d * d <= n; d++)
        if (n % d == 0) c += (d * d == n) ? 1 : 2;
    return c;
}

inline std::vector<u64> primes_trial(u64 x) {
    std::vector<u64> ps;
    for (u64 n = 2; n <= x; n++)
        if (is_prime_trial(n)) ps.push_back(n);
    return ps;
}

inline u64 lcm64(u64 a, u64 b) { return a / std::gcd(a, b) * b; }

// Ordered pairs of primes (p,q), p,q <= x+1, with lcm(p-1, q-1) <= x.
inline u64 s2_brute(u64 x) {
    auto ps = primes_trial(x + 1);
    u64 count = 0;
    for (u64 p : ps)
        for (u64 q : ps)
            if (lcm64(p - 1, q - 1) <= x) count++;
    return count;
}

inline u64 s3_brute(u64 x) {
    auto ps = primes_trial(x + 1);
    u64 count = 0;
    for (u64 p : ps)
        for (u64 q : ps) {
            u64 l = lcm64(p - 1, q - 1);
            if (l > x) continue;
            for (u64 r : ps)
                if (lcm64(l, r - 1) <= x) count++;
        }
    return count;
}

// Sum over the same pairs of 1/lcm as an exact fraction (num/den reduced).
struct Fraction {
    u128 num = 0;
    u128 den = 1;

    void add_unit(u64 d) {  // += 1/d
        u128 g = std::gcd(static_cast<u64>(den % d), d);
        // num/den + 1/d = (num*(d/g) + den/g) / (den*(d/g))
        u128 scale = d / static_cast<u64>(g);
        num = num * scale + den / g;
        den = den * scale;
        reduce();
    }
    void reduce() {
        u128 a = num, b = den;
        while (b) { u128 t = a % b; a = b; b = t; }
        if (a > 1) { num /= a; den /= a; }
    }
};

inline Fraction cal_m2_brute_exact(u64 x) {
    auto ps = primes_trial(x + 1);
    Fraction f;
    for (u64 p : ps)
        for (u64 q : ps) {
            u64 l = lcm64(p - 1, q - 1);
            if (l <= x) f.add_unit(l);
        }
    return f;
}

// Sum over primes p,q <= x of 1/lcm(p-1,q-1), plain long double.
inline long double cal_m2_prime_brute(u64 x) {
    auto ps = primes_trial(x);
    long double s = 0;
    for (u64 p : ps)
        for (u64 q : ps) s += 1.0L / static_cast<long double>(lcm64(p - 1, q - 1));
    return s;
}

inline long double tail_brute(u64 x) {
    auto ps = primes_trial(x);
    long double s = 0;
    for (u64 p : ps)
        for (u64 q : ps) {
            u64 l = lcm64(p - 1, q - 1);
            if (l > x) s += 1.0L / static_cast<long double>(l);
        }
    return s;
}

inline u64 phi_brute(u64 n) {
    u64 c = 0;
    for (u64 k = 1; k <= n; k++)
        if (std::gcd(k, n) == 1) c++;
    return c;
}

}  // namespace oracles
