#include <doctest.h>

#include <random>

#include "omegastar/omega_star.hpp"
#include "oracles.hpp"

using namespace omegastar;

TEST_CASE("omega_star matches the exhaustive-divisor oracle") {
    const PrimeSet ps = primes_up_to(3000);
    for (u64 n = 1; n <= 2000; n++)
        REQUIRE(omega_star(n, &ps) == oracles::omega_star_brute(n));

    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<u64> dist(1, 200000);
    for (int i = 0; i < 50; i++) {
        const u64 n = dist(rng);
        REQUIRE(omega_star(n) == oracles::omega_star_brute(n));
    }
}

TEST_CASE("omega_star known values") {
    CHECK(omega_star(1) == 1);
    CHECK(omega_star(15) == 1);   // odd numbers have only the divisor 1
    CHECK(omega_star(999) == 1);
    CHECK(omega_star(2) == 2);
    CHECK(omega_star(4) == 3);
    CHECK(omega_star(6) == 3);
    CHECK(omega_star(10) == 3);
    CHECK(omega_star(68) == 3);
    CHECK_THROWS_AS(omega_star(0), domain_error);
}

TEST_CASE("shifted_prime_divisors") {
    CHECK(shifted_prime_divisors(68) == std::vector<u64>{1, 2, 4});
    CHECK(shifted_prime_divisors(4) == std::vector<u64>{1, 2, 4});
    CHECK(shifted_prime_divisors(9) == std::vector<u64>{1});
    // against a dumb full scan
    for (u64 n = 1; n <= 500; n++) {
        std::vector<u64> expect;
        for (u64 d = 1; d <= n; d++)
            if (n % d == 0 && oracles::is_prime_trial(d + 1))
                expect.push_back(d);
        REQUIRE(shifted_prime_divisors(n) == expect);
    }
}

TEST_CASE("sieve kernel equals the per-n oracle pointwise") {
    const PrimeSet ps = primes_up_to(100001);
    const ShiftedPrimeTable table = make_shifted_table(ps, 100000);
    const OmegaStarSegment seg = omega_star_range(1, 100001, table);
    for (u64 n = 1; n <= 100000; n++)
        REQUIRE(seg.at(n) == omega_star(n, &ps));
}

TEST_CASE("segment counters: bounds and parity") {
    const ShiftedPrimeTable table = shifted_primes_up_to(5000);
    const OmegaStarSegment seg = omega_star_range_serial(1, 5001, table);
    for (u64 n = 1; n <= 5000; n++) {
        const u16 c = seg.at(n);
        REQUIRE(c >= 1);
        REQUIRE((c == 1) == (n % 2 == 1));
        REQUIRE(c <= oracles::tau(n));
    }
}

TEST_CASE("first-moment exchange identity is exact for every x <= 1e5") {
    const u64 top = 100000;
    const ShiftedPrimeTable table = shifted_primes_up_to(top);
    const OmegaStarSegment seg = omega_star_range(1, top + 1, table);

    // sum_m floor(x/m) gains one at every multiple of every member, so a
    // difference array gives the right-hand side for all x at once.
    std::vector<u32> gains(top + 1, 0);
    for (u64 m : table.members)
        for (u64 j = m; j <= top; j += m) gains[j]++;

    u64 lhs = 0, rhs = 0;
    for (u64 x = 1; x <= top; x++) {
        lhs += seg.at(x);
        rhs += gains[x];
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("parallel kernel is identical for any segment size and offset") {
    const ShiftedPrimeTable table = shifted_primes_up_to(200000);
    const OmegaStarSegment ref = omega_star_range_serial(1, 150001, table);
    for (u64 segsize : {u64(100), u64(4097), u64(65536), u64(kDefaultSegmentSize)}) {
        const OmegaStarSegment par = omega_star_range(1, 150001, table, segsize);
        REQUIRE(par.counts == ref.counts);
    }
    // interior window
    const OmegaStarSegment mid = omega_star_range(70001, 90001, table, 1024);
    for (u64 n = 70001; n <= 90000; n++)
        REQUIRE(mid.at(n) == ref.at(n));
}

TEST_CASE("range preconditions") {
    const ShiftedPrimeTable table = shifted_primes_up_to(100);
    CHECK_THROWS_AS(omega_star_range_serial(0, 50, table), domain_error);
    CHECK_THROWS_AS(omega_star_range_serial(10, 10, table), domain_error);
    CHECK_THROWS_AS(omega_star_range_serial(1, 102, table), domain_error);
    CHECK_NOTHROW(omega_star_range_serial(1, 101, table));
}
