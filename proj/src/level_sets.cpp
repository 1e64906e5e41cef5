// level_sets.cpp

#include "omegastar/level_sets.hpp"

#include <algorithm>
#include <numeric>

namespace omegastar {

LevelCensus level_census(u64 x, const ShiftedPrimeTable& table,
                         u64 segment_size) {
    if (x < 1) throw domain_error("level_census: x must be >= 1");
    if (x > table.limit)
        throw domain_error("level_census: x exceeds the table limit");
    if (segment_size == 0) segment_size = kDefaultSegmentSize;

    // One histogram per fixed block, merged in block order. Counts are
    // partition-independent; the least witness of the global maximum falls
    // out of the ordered merge because blocks are scanned ascending.
    struct Part {
        std::vector<u64> hist;
        u32 k_max = 0;
        u64 witness = 0;
    };
    const std::size_t nblocks =
        static_cast<std::size_t>((x + segment_size - 1) / segment_size);
    auto partials = map_blocks<Part>(nblocks, [&](std::size_t b) {
        const u64 lo = 1 + static_cast<u64>(b) * segment_size;
        const u64 hi = std::min(x + 1, lo + segment_size);
        const OmegaStarSegment seg = omega_star_range_serial(lo, hi, table);
        Part part;
        part.hist.assign(64, 0);
        for (u64 n = lo; n < hi; n++) {
            const u16 c = seg.at(n);
            if (c >= part.hist.size()) part.hist.resize(c + 1, 0);
            part.hist[c]++;
            if (c > part.k_max) {
                part.k_max = c;
                part.witness = n;
            }
        }
        return part;
    });

    LevelCensus census;
    census.x = x;
    census.counts.assign(64, 0);
    for (const Part& part : partials) {
        if (part.hist.size() > census.counts.size())
            census.counts.resize(part.hist.size(), 0);
        for (std::size_t k = 0; k < part.hist.size(); k++)
            census.counts[k] += part.hist[k];
        if (part.k_max > census.k_max) {
            census.k_max = part.k_max;
            census.k_max_witness = part.witness;
        }
    }
    census.counts.resize(census.k_max + 1);
    return census;
}

std::pair<u32, u64> max_omega_star(u64 x, const ShiftedPrimeTable& table,
                                   u64 segment_size) {
    const LevelCensus census = level_census(x, table, segment_size);
    return {census.k_max, census.k_max_witness};
}

u64 n_count(u64 x, double y, const ShiftedPrimeTable& table,
            u64 segment_size) {
    if (y < 1.0) throw domain_error("n_count: y must be >= 1");
    const u32 j = static_cast<u32>(std::ceil(y));
    return level_census(x, table, segment_size).tail_at(j);
}

DivisorSet divisor_set(u64 n, const PrimeSet* ps) {
    DivisorSet s;
    s.n = n;
    s.members = shifted_prime_divisors(n, ps);
    return s;
}

bool same_class(u64 m, u64 n, const PrimeSet* ps) {
    return shifted_prime_divisors(m, ps) == shifted_prime_divisors(n, ps);
}

u64 class_min(u64 n, const PrimeSet* ps) {
    u64 l = 1;
    for (u64 d : shifted_prime_divisors(n, ps)) l = std::lcm(l, d);
    return l;
}

double empirical_class_density(u64 rep, u64 x, const ShiftedPrimeTable& table,
                               u64 segment_size) {
    if (rep < 1 || x < 1)
        throw domain_error("empirical_class_density: arguments must be >= 1");
    if (x > table.limit)
        throw domain_error("empirical_class_density: x exceeds the table limit");
    const u64 step = class_min(rep);
    const u16 target = static_cast<u16>(omega_star(rep));
    u64 matches = 0;
    for_each_omega_segment(
        x, table, segment_size, [&](const OmegaStarSegment& seg) {
            const u64 top = std::min(seg.hi - 1, x);
            for (u64 n = (seg.lo + step - 1) / step * step; n <= top; n += step)
                if (seg.at(n) == target) matches++;
        });
    return static_cast<double>(matches) / static_cast<double>(x);
}

}  // namespace omegastar
