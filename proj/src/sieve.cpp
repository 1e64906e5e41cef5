// sieve.cpp
// Segmented Eratosthenes. Base primes to sqrt(limit) come from a plain
// sieve; the main range is split into independent segments so the marking
// loop parallelizes without shared writes (each segment owns a disjoint
// word range of the bitmap).

#include "omegastar/sieve.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <fstream>

namespace omegastar {

namespace {

constexpr u64 kSegmentBits = 1ull << 22;

// Rough upper bound for pi(x), x >= 17: x/ln(x) * (1 + 1.2762/ln(x)).
u64 prime_count_bound(u64 x) {
    if (x < 17) return 8;
    double lx = std::log(static_cast<double>(x));
    return static_cast<u64>(static_cast<double>(x) / lx * (1.0 + 1.2762 / lx)) + 8;
}

void check_budget(u64 limit, u64 budget_bytes) {
    if (limit > kMaxSieveLimit)
        throw budget_error("sieve limit " + std::to_string(limit) +
                           " exceeds the supported ceiling 2^40");
    u64 need = limit / 8 + prime_count_bound(limit) * 8;
    if (need > budget_bytes)
        throw budget_error(
            "sieve to " + std::to_string(limit) + " needs about " +
            std::to_string(need >> 20) +
            " MiB which exceeds the configured budget; raise the budget or "
            "lower the limit");
}

std::vector<u64> simple_sieve(u64 limit) {
    std::vector<u8> mark(limit + 1, 1);
    mark[0] = 0;
    if (limit >= 1) mark[1] = 0;
    for (u64 i = 2; i * i <= limit; i++)
        if (mark[i])
            for (u64 j = i * i; j <= limit; j += i) mark[j] = 0;
    std::vector<u64> primes;
    for (u64 i = 2; i <= limit; i++)
        if (mark[i]) primes.push_back(i);
    return primes;
}

}  // namespace

PrimeSet primes_up_to(u64 limit, u64 budget_bytes) {
    if (limit < 2)
        throw domain_error("primes_up_to: empty range, limit must be >= 2");
    check_budget(limit, budget_bytes);

    PrimeSet ps;
    ps.limit = limit;
    ps.bitmap.assign(limit / 64 + 1, 0);

    const std::vector<u64> base = simple_sieve(isqrt(limit));
    const u64 nseg = (limit + kSegmentBits) / kSegmentBits;

    // Segment s covers [s*kSegmentBits, min((s+1)*kSegmentBits, limit+1)).
    // Segment boundaries are word-aligned, so writes never collide.
    std::vector<u64> seg_counts(nseg, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (i64 s = 0; s < static_cast<i64>(nseg); s++) {
        const u64 lo = static_cast<u64>(s) * kSegmentBits;
        const u64 hi = std::min(lo + kSegmentBits, limit + 1);
        std::vector<u8> comp(hi - lo, 0);
        for (u64 p : base) {
            if (p * p >= hi) break;
            u64 start = std::max(p * p, (lo + p - 1) / p * p);
            for (u64 j = start; j < hi; j += p) comp[j - lo] = 1;
        }
        u64 count = 0;
        for (u64 n = std::max<u64>(lo, 2); n < hi; n++) {
            if (!comp[n - lo]) {
                ps.bitmap[n >> 6] |= 1ull << (n & 63);
                count++;
            }
        }
        seg_counts[static_cast<u64>(s)] = count;
    }

    // Deterministic fill: per-segment counts give every segment its slot.
    std::vector<u64> offsets(nseg + 1, 0);
    for (u64 s = 0; s < nseg; s++) offsets[s + 1] = offsets[s] + seg_counts[s];
    ps.primes.resize(offsets[nseg]);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (i64 s = 0; s < static_cast<i64>(nseg); s++) {
        const u64 lo = static_cast<u64>(s) * kSegmentBits;
        const u64 hi = std::min(lo + kSegmentBits, limit + 1);
        u64 at = offsets[static_cast<u64>(s)];
        for (u64 n = std::max<u64>(lo, 2); n < hi; n++)
            if (ps.is_prime(n)) ps.primes[at++] = n;
    }
    return ps;
}

ShiftedPrimeTable make_shifted_table(const PrimeSet& ps, u64 limit) {
    if (limit < 1 || ps.limit < limit + 1)
        throw domain_error("make_shifted_table: prime set too small");
    ShiftedPrimeTable t;
    t.limit = limit;
    t.bitmap.assign(limit / 64 + 1, 0);
    t.members.reserve(ps.primes.size());
    for (u64 p : ps.primes) {
        const u64 m = p - 1;
        if (m > limit) break;
        t.members.push_back(m);
        t.bitmap[m >> 6] |= 1ull << (m & 63);
    }
    return t;
}

ShiftedPrimeTable shifted_primes_up_to(u64 limit, u64 budget_bytes) {
    if (limit < 1)
        throw domain_error("shifted_primes_up_to: limit must be >= 1");
    return make_shifted_table(primes_up_to(limit + 1, budget_bytes), limit);
}

// -----------------------------------------------------------------------
// Bitmap cache
// -----------------------------------------------------------------------

namespace {
constexpr char kMagic[5] = {'O', 'S', 'L', 'B', '1'};

void put_u64_le(std::ofstream& f, u64 v) {
    u8 b[8];
    for (int i = 0; i < 8; i++) b[i] = static_cast<u8>(v >> (8 * i));
    f.write(reinterpret_cast<const char*>(b), 8);
}

bool get_u64_le(std::ifstream& f, u64& v) {
    u8 b[8];
    if (!f.read(reinterpret_cast<char*>(b), 8)) return false;
    v = 0;
    for (int i = 0; i < 8; i++) v |= static_cast<u64>(b[i]) << (8 * i);
    return true;
}
}  // namespace

void save_bitmap(const PrimeSet& ps, const std::string& path) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw budget_error("cannot open cache file for writing: " + path);
    f.write(kMagic, 5);
    put_u64_le(f, ps.limit);
    for (u64 w : ps.bitmap) put_u64_le(f, w);
    if (!f) throw budget_error("short write to cache file: " + path);
}

std::optional<PrimeSet> load_bitmap(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) return std::nullopt;
    char magic[5];
    if (!f.read(magic, 5) || std::memcmp(magic, kMagic, 5) != 0)
        return std::nullopt;
    PrimeSet ps;
    if (!get_u64_le(f, ps.limit) || ps.limit < 2 || ps.limit > kMaxSieveLimit)
        return std::nullopt;
    const u64 words = ps.limit / 64 + 1;
    ps.bitmap.resize(words);
    for (u64 i = 0; i < words; i++)
        if (!get_u64_le(f, ps.bitmap[i])) return std::nullopt;
    ps.primes.reserve(prime_count_bound(ps.limit));
    for (u64 n = 2; n <= ps.limit; n++)
        if (ps.is_prime(n)) ps.primes.push_back(n);
    return ps;
}

PrimeSet primes_up_to_cached(u64 limit, const std::string& cache_dir,
                             u64 budget_bytes) {
    const std::string path =
        cache_dir + "/primes_" + std::to_string(limit) + ".oslb";
    if (auto ps = load_bitmap(path); ps && ps->limit == limit) return *ps;
    PrimeSet ps = primes_up_to(limit, budget_bytes);
    save_bitmap(ps, path);
    return ps;
}

}  // namespace omegastar
