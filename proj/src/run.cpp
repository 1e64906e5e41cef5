// run.cpp

#include "omegastar/run.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "omegastar/density.hpp"
#include "omegastar/level_sets.hpp"
#include "omegastar/moments.hpp"
#include "omegastar/pair_sums.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace omegastar {

namespace {

double now_seconds() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch())
        .count();
}

struct RowBuilder {
    int digits;
    std::vector<Row> rows;

    Row& push(double x, std::string metric, double value,
              std::optional<double> fit, std::string method, double seconds) {
        Row r;
        r.x = x;
        r.metric = std::move(metric);
        r.value = round_sig(value, digits);
        if (fit) r.fit = round_sig(*fit, digits);
        r.method = std::move(method);
        r.seconds = seconds;
        rows.push_back(std::move(r));
        return rows.back();
    }
};

// Sieve once for the largest bound a command touches. The bitmap cache is
// used only when OMEGASTAR_CACHE names a directory.
PrimeSet build_primes(u64 limit) {
    if (const char* dir = std::getenv("OMEGASTAR_CACHE");
        dir != nullptr && *dir != '\0')
        return primes_up_to_cached(limit, dir);
    return primes_up_to(limit);
}

u64 max_x(const RunConfig& c) {
    if (c.x_list.empty()) throw domain_error("at least one --x is required");
    return *std::max_element(c.x_list.begin(), c.x_list.end());
}

void run_moments(const RunConfig& c, RowBuilder& rb) {
    const int k = c.k == 0 ? 2 : c.k;
    if (k < 1 || k > 4)
        throw domain_error("moments: --k must be in 1..4");
    const u64 xmax = max_x(c);
    const ShiftedPrimeTable table = make_shifted_table(build_primes(xmax + 1), xmax);
    for (u64 x : c.x_list) {
        const double t0 = now_seconds();
        const MomentReport r = moment_direct(x, k, table, c.segment_size
                                                              ? c.segment_size
                                                              : kDefaultSegmentSize);
        const double dt = now_seconds() - t0;
        std::optional<double> fit;
        if (k == 2) fit = m2_fit(static_cast<double>(x));
        Row& row = rb.push(static_cast<double>(x), "M_" + std::to_string(k),
                           static_cast<double>(r.value), fit, "direct", dt);
        row.power_sum = u128_to_string(r.power_sum);
    }
}

void run_pairs(const RunConfig& c, RowBuilder& rb) {
    const u64 xmax = max_x(c);
    const PrimeSet ps = build_primes(xmax + 1);
    const ShiftedPrimeTable table = make_shifted_table(ps, xmax);
    for (u64 x : c.x_list) {
        const double xd = static_cast<double>(x);
        double t0 = now_seconds();
        const PairSumReport rep = pair_report(x, ps, table);
        double dt = now_seconds() - t0;
        rb.push(xd, "s2_count", static_cast<double>(rep.s2_count),
                std::nullopt, "gcd_triples", dt);
        rb.push(xd, "S_2", rep.s2, s2_fit(xd), "gcd_triples", dt);
        rb.push(xd, "cal_M_2", rep.cal_m2, std::nullopt, "gcd_triples", dt);
        rb.push(xd, "cal_M_2_prime", rep.cal_m2_prime, std::nullopt,
                "phi_identity", dt);
        rb.push(xd, "tail", rep.tail, tail_fit(xd), "difference", dt);
        if (c.u != 0) {
            t0 = now_seconds();
            const double v = m2_restricted(x, c.u, table);
            dt = now_seconds() - t0;
            rb.push(xd, "M_2_restricted_u" + std::to_string(c.u), v,
                    std::nullopt, "gcd_triples", dt);
        }
    }
    rb.push(static_cast<double>(c.x_list.front()), "heuristic_C",
            heuristic_constant(), std::nullopt, "zeta_series", 0.0);
}

void run_levels(const RunConfig& c, RowBuilder& rb) {
    const u64 xmax = max_x(c);
    const ShiftedPrimeTable table = make_shifted_table(build_primes(xmax + 1), xmax);
    if (c.k < 0 || c.k == 1)
        throw domain_error("levels: --k (tail cap) must be >= 2");
    const u32 cap = c.k >= 2 ? static_cast<u32>(c.k) : 12;
    for (u64 x : c.x_list) {
        const double xd = static_cast<double>(x);
        const double t0 = now_seconds();
        const LevelCensus census = level_census(
            x, table, c.segment_size ? c.segment_size : kDefaultSegmentSize);
        const double dt = now_seconds() - t0;
        for (u32 k = 1; k < cap; k++)
            rb.push(xd, "L_" + std::to_string(k),
                    static_cast<double>(census.count_at(k)), std::nullopt,
                    "sieve", dt);
        rb.push(xd, "L_ge_" + std::to_string(cap),
                static_cast<double>(census.tail_at(cap)), std::nullopt,
                "sieve", dt);
        rb.push(xd, "k_max", census.k_max, std::nullopt, "sieve", dt);
        rb.push(xd, "k_max_witness", static_cast<double>(census.k_max_witness),
                std::nullopt, "sieve", dt);
        if (c.y >= 1.0)
            rb.push(xd, "N(x," + format_sig(c.y, 6) + ")",
                    static_cast<double>(census.tail_at(
                        static_cast<u32>(std::ceil(c.y)))),
                    std::nullopt, "sieve", dt);
    }
}

void run_density(const RunConfig& c, RowBuilder& rb) {
    const u64 rep = c.u ? c.u : 2;
    if (c.y < 1.0)
        throw domain_error("density: --y (shifted-prime bound) is required");
    const u64 y = static_cast<u64>(c.y);
    const u64 xmax = c.x_list.empty() ? 0 : max_x(c);
    const u64 limit = std::max<u64>(y, 2);
    const ShiftedPrimeTable table =
        make_shifted_table(build_primes(limit + 1), limit);

    double t0 = now_seconds();
    const ExactRational bound = class_density_upper(rep, y, table);
    double dt = now_seconds() - t0;
    Row& r = rb.push(static_cast<double>(y), "class_density_upper_" +
                                                 std::to_string(rep),
                     bound.to_double(), std::nullopt, "t_n", dt);
    r.exact = bound.str();

    if (xmax) {
        // Finite-x census of the same class for comparison.
        const ShiftedPrimeTable big =
            make_shifted_table(build_primes(xmax + 1), xmax);
        for (u64 x : c.x_list) {
            t0 = now_seconds();
            const double d = empirical_class_density(
                rep, x, big,
                c.segment_size ? c.segment_size : kDefaultSegmentSize);
            dt = now_seconds() - t0;
            rb.push(static_cast<double>(x),
                    "empirical_class_density_" + std::to_string(rep), d,
                    std::nullopt, "sieve", dt);
        }
    }
}

void run_class(const RunConfig& c, RowBuilder& rb) {
    const u64 rep = c.u ? c.u : 2;
    const double t0 = now_seconds();
    const DivisorSet set = divisor_set(rep);
    const u64 cmin = class_min(rep);
    const double dt = now_seconds() - t0;
    Row& r = rb.push(static_cast<double>(rep), "omega_star",
                     static_cast<double>(set.members.size()), std::nullopt,
                     "divisor_enum", dt);
    std::string joined;
    for (u64 d : set.members)
        joined += (joined.empty() ? "" : "|") + std::to_string(d);
    r.exact = joined;
    rb.push(static_cast<double>(rep), "class_min", static_cast<double>(cmin),
            std::nullopt, "divisor_enum", dt);
    if (!c.x_list.empty()) {
        const u64 xmax = max_x(c);
        const ShiftedPrimeTable table =
            make_shifted_table(build_primes(xmax + 1), xmax);
        for (u64 x : c.x_list) {
            const double s0 = now_seconds();
            const double d = empirical_class_density(
                rep, x, table,
                c.segment_size ? c.segment_size : kDefaultSegmentSize);
            rb.push(static_cast<double>(x),
                    "empirical_class_density_" + std::to_string(rep), d,
                    std::nullopt, "sieve", now_seconds() - s0);
        }
    }
}

}  // namespace

int run(const RunConfig& config, std::string& out) {
#ifdef _OPENMP
    if (config.threads > 0) omp_set_num_threads(config.threads);
#endif
    try {
        if (config.command == Command::repro) {
            const auto checks = repro_suite(config.scale, config.segment_size);
            std::string text;
            const bool ok = print_repro(checks, text);
            out += text;
            return ok ? 0 : 3;
        }
        RowBuilder rb{config.digits, {}};
        switch (config.command) {
            case Command::moments: run_moments(config, rb); break;
            case Command::pairs: run_pairs(config, rb); break;
            case Command::levels: run_levels(config, rb); break;
            case Command::density: run_density(config, rb); break;
            case Command::class_info: run_class(config, rb); break;
            case Command::repro: break;
        }
        out += config.format == OutputFormat::csv ? emit_csv(rb.rows)
                                                  : emit_json(rb.rows);
        return 0;
    } catch (const domain_error& e) {
        out += std::string("error: ") + e.what() + "\n";
        return 1;
    } catch (const budget_error& e) {
        out += std::string("error: ") + e.what() + "\n";
        return 2;
    } catch (const std::exception& e) {
        out += std::string("error: ") + e.what() + "\n";
        return 2;
    }
}

}  // namespace omegastar
