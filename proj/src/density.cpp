// density.cpp

#include "omegastar/density.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "omegastar/level_sets.hpp"

namespace omegastar {

namespace {

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> fs;
    for (u64 f = 2; f * f <= n; f += (f == 2 ? 1 : 2)) {
        if (n % f) continue;
        fs.push_back(f);
        while (n % f == 0) n /= f;
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

struct DisjointSet {
    std::vector<std::size_t> parent;
    explicit DisjointSet(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::size_t find(std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Alternating subset sum over one component: sum_{S} (-1)^|S| / lcm(S),
// empty subset included. Depth-first with the running lcm carried down.
void subset_sum(const std::vector<u64>& cs, std::size_t i,
                const mpz_class& lcm, int sign, mpq_class& acc) {
    if (i == cs.size()) {
        mpq_class term(sign, 1);
        term /= mpq_class(lcm);
        acc += term;
        return;
    }
    subset_sum(cs, i + 1, lcm, sign, acc);
    const unsigned long g = mpz_gcd_ui(nullptr, lcm.get_mpz_t(), cs[i]);
    subset_sum(cs, i + 1, mpz_class(lcm * (cs[i] / g)), -sign, acc);
}

}  // namespace

ExactRational t_n(const TnQuery& query, const TnOptions& opt) {
    if (query.n < 1) throw domain_error("t_n: n must be >= 1");
    for (u64 a : query.conditions)
        if (a < 1) throw domain_error("t_n: conditions must be >= 1");

    // Reduce each condition relative to n: a multiple of n is divisible by
    // a_i iff it is divisible by n * c_i with c_i = a_i / gcd(a_i, n).
    std::vector<u64> cs;
    cs.reserve(query.conditions.size());
    for (u64 a : query.conditions) {
        const u64 c = a / binary_gcd(a, query.n);
        if (c == 1) return ExactRational::zero();  // a_i divides n
        cs.push_back(c);
    }
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());

    // Drop conditions that are multiples of a kept one.
    std::vector<u64> kept;
    for (u64 c : cs) {
        bool redundant = false;
        for (u64 k : kept)
            if (c % k == 0) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(c);
    }
    if (kept.size() > opt.max_conditions)
        throw budget_error(
            "t_n: " + std::to_string(kept.size()) +
            " conditions remain after pruning, over the cap of " +
            std::to_string(opt.max_conditions) +
            "; prune the condition list");

    // Connected components under shared prime factors.
    DisjointSet ds(kept.size());
    std::map<u64, std::size_t> owner;
    for (std::size_t i = 0; i < kept.size(); i++)
        for (u64 f : prime_factors(kept[i])) {
            auto [it, fresh] = owner.try_emplace(f, i);
            if (!fresh) ds.unite(i, it->second);
        }
    std::map<std::size_t, std::vector<u64>> components;
    for (std::size_t i = 0; i < kept.size(); i++)
        components[ds.find(i)].push_back(kept[i]);

    mpq_class result(1, 1);
    mpz_class n_mpz(static_cast<unsigned long>(query.n));
    result /= mpq_class(n_mpz);
    for (const auto& [root, comp] : components) {
        if (comp.size() > opt.component_cap)
            throw budget_error(
                "t_n: a component of " + std::to_string(comp.size()) +
                " interlinked conditions exceeds the 2^" +
                std::to_string(opt.component_cap) +
                " enumeration cap; prune the condition list");
        mpq_class comp_sum(0);
        subset_sum(comp, 0, mpz_class(1), 1, comp_sum);
        result *= comp_sum;
    }
    return ExactRational(std::move(result));
}

double t_n_empirical(const TnQuery& query, u64 x) {
    if (query.n < 1 || x < 1)
        throw domain_error("t_n_empirical: n and x must be >= 1");
    u64 count = 0;
    for (u64 m = query.n; m <= x; m += query.n) {
        bool hit = false;
        for (u64 a : query.conditions)
            if (m % a == 0) {
                hit = true;
                break;
            }
        if (!hit) count++;
    }
    return static_cast<double>(count) / static_cast<double>(x);
}

ExactRational class_density_upper(u64 rep, u64 y,
                                  const ShiftedPrimeTable& table,
                                  const TnOptions& opt) {
    if (rep < 1) throw domain_error("class_density_upper: rep must be >= 1");
    if (class_min(rep) != rep)
        throw domain_error(
            "class_density_upper: rep must equal its class minimum (the lcm "
            "of its shifted-prime divisors)");
    if (y > table.limit)
        throw domain_error("class_density_upper: y exceeds the table limit");

    TnQuery q;
    q.n = rep;
    for (u64 m : table.members) {
        if (m > y) break;
        if (rep % m == 0) continue;  // required divisors are not forbidden
        const u128 l = static_cast<u128>(m / binary_gcd(m, rep)) * rep;
        if (l > static_cast<u128>(UINT64_MAX))
            throw budget_error("class_density_upper: condition lcm overflows");
        q.conditions.push_back(static_cast<u64>(l));
    }
    return t_n(q, opt);
}

}  // namespace omegastar
