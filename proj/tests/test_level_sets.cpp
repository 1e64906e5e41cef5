#include <doctest.h>

#include <map>

#include "omegastar/level_sets.hpp"
#include "oracles.hpp"

using namespace omegastar;

namespace {
const ShiftedPrimeTable& table() {
    static const ShiftedPrimeTable t = shifted_primes_up_to(1000000);
    return t;
}
}  // namespace

TEST_CASE("census at 10 from the oracle") {
    const LevelCensus c = level_census(10, table());
    CHECK(c.count_at(1) == 5);
    CHECK(c.count_at(2) == 1);
    CHECK(c.count_at(3) == 4);
    CHECK(c.k_max == 3);
    CHECK(c.k_max_witness == 4);

    std::map<u32, u64> brute;
    for (u64 n = 1; n <= 10; n++) brute[oracles::omega_star_brute(n)]++;
    for (auto [k, v] : brute) REQUIRE(c.count_at(k) == v);
}

TEST_CASE("census reproduces the published 1e4 column") {
    const LevelCensus c = level_census(10000, table());
    const u64 expect[] = {5000, 834, 965, 877, 612, 456, 287, 202, 153, 159, 103};
    for (u32 k = 1; k <= 11; k++) REQUIRE(c.count_at(k) == expect[k - 1]);
    CHECK(c.tail_at(12) == 352);
    CHECK(c.k_max == 28);
    CHECK(c.k_max_witness == 7560);
}

TEST_CASE("census is independent of segment size") {
    const LevelCensus ref = level_census(54321, table());
    for (u64 seg : {u64(100), u64(999), u64(1) << 16}) {
        const LevelCensus c = level_census(54321, table(), seg);
        REQUIRE(c.counts == ref.counts);
        REQUIRE(c.k_max == ref.k_max);
        REQUIRE(c.k_max_witness == ref.k_max_witness);
    }
}

TEST_CASE("census bookkeeping invariants") {
    for (u64 x : {1ull, 9ull, 10ull, 999ull, 12345ull}) {
        const LevelCensus c = level_census(x, table());
        u64 total = 0;
        for (u32 k = 0; k < c.counts.size(); k++) total += c.counts[k];
        REQUIRE(total == x);
        REQUIRE(c.count_at(1) == (x + 1) / 2);  // the odd numbers
        REQUIRE(c.count_at(c.k_max + 5) == 0);
        REQUIRE(c.tail_at(1) == x);
    }
}

TEST_CASE("apparent density ordering delta_2 < delta_3") {
    CHECK(level_census(10000, table()).count_at(2) <
          level_census(10000, table()).count_at(3));
    const LevelCensus c6 = level_census(1000000, table());
    CHECK(c6.count_at(2) < c6.count_at(3));
}

TEST_CASE("n_count") {
    const auto& t = table();
    CHECK(n_count(10000, 1.0, t) == 10000);
    CHECK(n_count(10000, 12.0, t) == 352);
    CHECK(n_count(10000, 11.5, t) == 352);  // ceil(y)
    CHECK(n_count(10000, 29.0, t) == 0);
    u64 prev = 10000;
    for (double y = 1; y <= 30; y += 1.5) {
        const u64 cur = n_count(10000, y, t);
        REQUIRE(cur <= prev);
        prev = cur;
    }
    CHECK_THROWS_AS(n_count(100, 0.5, t), domain_error);
}

TEST_CASE("max_omega_star") {
    const auto [k10, w10] = max_omega_star(10, table());
    CHECK(k10 == 3);
    CHECK(w10 == 4);
    const auto [k4, w4] = max_omega_star(10000, table());
    CHECK(k4 == 28);
    CHECK(w4 == 7560);
}

TEST_CASE("divisor_set basics") {
    CHECK(divisor_set(9).members == std::vector<u64>{1});
    CHECK(divisor_set(4).members == std::vector<u64>{1, 2, 4});
    CHECK(divisor_set(68).members == std::vector<u64>{1, 2, 4});
    for (u64 n : {1ull, 2ull, 68ull, 720ull, 997ull}) {
        const DivisorSet s = divisor_set(n);
        REQUIRE(s.members.front() == 1);
        REQUIRE(s.members.size() == omega_star(n));
        u64 l = 1;
        for (u64 d : s.members) l = std::lcm(l, d);
        REQUIRE(n % l == 0);
    }
    CHECK_THROWS_AS(divisor_set(0), domain_error);
}

TEST_CASE("same_class: examples and relation laws") {
    CHECK(same_class(3, 15));
    CHECK(same_class(4, 68));
    CHECK_FALSE(same_class(2, 4));
    const u64 sample[] = {1, 2, 3, 4, 6, 10, 12, 15, 68, 100, 210};
    for (u64 a : sample) {
        REQUIRE(same_class(a, a));
        for (u64 b : sample) {
            REQUIRE(same_class(a, b) == same_class(b, a));
            if (same_class(a, b))
                REQUIRE(omega_star(a) == omega_star(b));
            for (u64 c : sample)
                if (same_class(a, b) && same_class(b, c))
                    REQUIRE(same_class(a, c));
        }
    }
}

TEST_CASE("class_min") {
    CHECK(class_min(2) == 2);
    CHECK(class_min(68) == 4);
    CHECK(class_min(15) == 1);
    for (u64 n = 1; n <= 300; n++) {
        const u64 l = class_min(n);
        REQUIRE(n % l == 0);
        for (u64 d : divisor_set(n).members) REQUIRE(l % d == 0);
    }
}

TEST_CASE("empirical_class_density") {
    const auto& t = table();
    // odd numbers: exactly 1/2 at even x
    CHECK(empirical_class_density(3, 10000, t) == 0.5);
    CHECK(empirical_class_density(1, 10000, t) == 0.5);
    // <2> is the whole level set L_2
    CHECK(empirical_class_density(2, 10000, t) ==
          doctest::Approx(834.0 / 10000).epsilon(1e-15));
    CHECK(empirical_class_density(2, 1000000, t) ==
          doctest::Approx(0.077696).epsilon(1e-12));
    CHECK(empirical_class_density(2, 1000000, t) < 0.5);

    // against the literal definition (divisor-set equality scan)
    for (u64 rep : {2ull, 4ull, 6ull, 12ull}) {
        u64 brute = 0;
        for (u64 m = 1; m <= 2000; m++)
            if (same_class(m, rep)) brute++;
        REQUIRE(empirical_class_density(rep, 2000, t) ==
                doctest::Approx(static_cast<double>(brute) / 2000.0)
                    .epsilon(1e-15));
    }

    // finite-x form of delta(<n>) < 1/n, with slack for the finite cutoff
    for (u64 rep : {2ull, 4ull, 6ull, 10ull}) {
        const double d = empirical_class_density(rep, 10000, t);
        REQUIRE(d < 1.0 / static_cast<double>(class_min(rep)) + 0.01);
    }
}
