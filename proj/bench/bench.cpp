// bench.cpp
// Times the serial reference kernels against the OpenMP ones on identical
// inputs and verifies both produce identical results.
//
//   usage: omegastar_bench [scale]   (scale 0.1..10, default 1)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "omegastar/level_sets.hpp"
#include "omegastar/moments.hpp"
#include "omegastar/pair_sums.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace omegastar;

namespace {

double now() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

int g_threads = 1;

void set_threads(int n) {
#ifdef _OPENMP
    omp_set_num_threads(n);
#else
    (void)n;
#endif
}

void report(const char* kernel, u64 n, double serial_s, double parallel_s,
            bool equal) {
    std::printf("%-28s n=%-12llu serial %8.3fs  omp(%d) %8.3fs  speedup %5.2fx  %s\n",
                kernel, static_cast<unsigned long long>(n), serial_s,
                g_threads, parallel_s, serial_s / parallel_s,
                equal ? "results equal" : "RESULTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
    const double scale = argc > 1 ? std::strtod(argv[1], nullptr) : 1.0;
#ifdef _OPENMP
    g_threads = omp_get_max_threads();
#endif
    std::printf("building tables...\n");
    const u64 sieve_n = static_cast<u64>(20e6 * scale);
    const PrimeSet ps = primes_up_to(sieve_n + 1);
    const ShiftedPrimeTable table = make_shifted_table(ps, sieve_n);

    {
        double t0 = now();
        const OmegaStarSegment a = omega_star_range_serial(1, sieve_n + 1, table);
        const double serial_s = now() - t0;
        t0 = now();
        const OmegaStarSegment b = omega_star_range(1, sieve_n + 1, table);
        report("omega_star_range", sieve_n, serial_s, now() - t0,
               a.counts == b.counts);
    }

    {
        double t0 = now();
        const MomentReport a = moment_direct_serial(sieve_n, 2, table);
        const double serial_s = now() - t0;
        t0 = now();
        const MomentReport b = moment_direct(sieve_n, 2, table);
        report("moment_direct k=2", sieve_n, serial_s, now() - t0,
               a.power_sum == b.power_sum);
    }

    {
        const u64 x = static_cast<u64>(10e6 * scale);
        set_threads(1);
        double t0 = now();
        const LevelCensus a = level_census(x, table);
        const double serial_s = now() - t0;
        set_threads(g_threads);
        t0 = now();
        const LevelCensus b = level_census(x, table);
        report("level_census", x, serial_s, now() - t0,
               a.counts == b.counts && a.k_max == b.k_max);
    }

    {
        const u64 x = static_cast<u64>(1e6 * scale);
        set_threads(1);
        double t0 = now();
        const double a = cal_m2(x, table);
        const double serial_s = now() - t0;
        set_threads(g_threads);
        t0 = now();
        const double b = cal_m2(x, table);
        report("cal_m2 (gcd triples)", x, serial_s, now() - t0, a == b);
    }

    {
        const u64 x = static_cast<u64>(2e6 * scale);
        set_threads(1);
        double t0 = now();
        const u64 a = s2_census(x, table);
        const double serial_s = now() - t0;
        set_threads(g_threads);
        t0 = now();
        const u64 b = s2_census(x, table);
        report("s2_census", x, serial_s, now() - t0, a == b);
    }

    {
        const u64 x = static_cast<u64>(1e6 * scale);
        set_threads(1);
        double t0 = now();
        const double a = cal_m2_prime(x, ps);
        const double serial_s = now() - t0;
        set_threads(g_threads);
        t0 = now();
        const double b = cal_m2_prime(x, ps);
        report("cal_m2_prime (phi id)", x, serial_s, now() - t0, a == b);
    }
    return 0;
}
