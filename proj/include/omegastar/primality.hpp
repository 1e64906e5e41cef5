// primality.hpp
// Deterministic strong-pseudoprime test, valid for every n < 2^64.

#pragma once

#include "omegastar/util.hpp"

namespace omegastar {

inline u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Miller-Rabin with the 7-base set {2, 325, 9375, 28178, 450775, 9780504,
// 1795265022}, deterministic below 2^64 (Jim Sinclair's set).
inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                  23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = __builtin_ctzll(d);
    d >>= s;
    for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull,
                  1795265022ull}) {
        u64 x = powmod(a % n, d, n);
        if (x <= 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; r++) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace omegastar
