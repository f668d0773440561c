#include "abc/exhaustive.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>

#include "abc/arith.hpp"

namespace abc::exhaustive {

namespace {

// radical table for 1..N as machine integers
std::vector<uint64_t> radical_table(uint32_t N, uint64_t memory_budget_bytes) {
    const uint64_t need = (static_cast<uint64_t>(N) + 1) * (sizeof(uint64_t) + sizeof(uint32_t));
    if (need > memory_budget_bytes)
        throw ResourceLimit("radical table would exceed the memory budget");
    auto sieve = arith::build_sieves(N, memory_budget_bytes);
    std::vector<uint64_t> rad(static_cast<size_t>(N) + 1, 1);
    for (uint32_t n = 2; n <= N; ++n) {
        uint32_t m = n;
        const uint32_t p = sieve.smallest_prime_factor[n];
        while (m % p == 0) m /= p;
        rad[n] = rad[m] * p;
    }
    return rad;
}

}  // namespace

std::vector<AbcTriple> oracle_enumerate(uint32_t N, uint64_t memory_budget_bytes) {
    if (N < 3) throw DomainError("oracle_enumerate: N must be >= 3");
    const auto rad = radical_table(N, memory_budget_bytes);
    std::vector<AbcTriple> out;
    for (uint64_t c = 3; c <= N; ++c) {
        const uint64_t rc = rad[c];
        for (uint64_t a = 1; 2 * a <= c; ++a) {
            const uint64_t b = c - a;
            if (rad[a] * rad[b] > c) continue;  // R(ab) alone already too big
            if (rad[a] * rad[b] * rc >= c) continue;
            if (std::gcd(a, c) != 1) continue;
            out.push_back(AbcTriple{Int(static_cast<unsigned long>(a)),
                                    Int(static_cast<unsigned long>(b)),
                                    Int(static_cast<unsigned long>(c))});
        }
    }
    return out;
}

std::vector<AbcTriple> abchome_search(uint32_t N, SearchStats* stats,
                                      uint64_t memory_budget_bytes) {
    if (N < 3) throw DomainError("abchome_search: N must be >= 3");
    const auto rad = radical_table(N, memory_budget_bytes);

    // squarefree values below sqrt(N), the candidate pool for r and s
    std::vector<uint32_t> small_sf;
    for (uint32_t v = 1; static_cast<uint64_t>(v) * v < N; ++v)
        if (rad[v] == v) small_sf.push_back(v);

    // numbers up to N with radical equal to each candidate value
    std::vector<std::vector<uint32_t>> with_radical(small_sf.size());
    for (size_t i = 0; i < small_sf.size(); ++i) {
        const auto xs = arith::numbers_with_radical(small_sf[i], N);
        with_radical[i].reserve(xs.size());
        for (const Int& x : xs) with_radical[i].push_back(x.get_ui());
    }

    std::vector<std::vector<std::array<uint64_t, 3>>> found(omp_get_max_threads());
    uint64_t raw = 0;

#pragma omp parallel for schedule(dynamic) reduction(+ : raw)
    for (size_t si = 0; si < small_sf.size(); ++si) {
        auto& local = found[omp_get_thread_num()];
        const uint64_t s = small_sf[si];
        for (size_t ri = 0; ri <= si; ++ri) {
            const uint64_t r = small_sf[ri];
            if (r * s * s >= N) continue;
            if (std::gcd(r, s) != 1) continue;
            for (uint64_t x : with_radical[ri]) {
                for (uint64_t y : with_radical[si]) {
                    if (std::gcd(x, y) != 1) continue;
                    const uint64_t zs[2] = {x + y, x > y ? x - y : y - x};
                    for (uint64_t z : zs) {
                        if (z == 0 || z > N) continue;
                        const uint64_t rz = rad[z];
                        if (rz <= s) continue;
                        if (r * s * rz >= N) continue;
                        uint64_t t[3] = {x, y, z};
                        std::sort(t, t + 3);
                        if (t[0] + t[1] != t[2]) continue;
                        if (r * s * rz >= t[2]) continue;  // not an abc hit
                        ++raw;
                        local.push_back({t[0], t[1], t[2]});
                    }
                }
            }
        }
    }

    std::vector<std::array<uint64_t, 3>> all;
    for (auto& v : found) all.insert(all.end(), v.begin(), v.end());
    std::sort(all.begin(), all.end(), [](const auto& u, const auto& v) {
        if (u[2] != v[2]) return u[2] < v[2];
        return u[0] < v[0];
    });
    all.erase(std::unique(all.begin(), all.end()), all.end());
    if (stats) stats->raw_emissions = raw;

    std::vector<AbcTriple> out;
    out.reserve(all.size());
    for (const auto& t : all)
        out.push_back(AbcTriple{Int(static_cast<unsigned long>(t[0])),
                                Int(static_cast<unsigned long>(t[1])),
                                Int(static_cast<unsigned long>(t[2]))});
    return out;
}

std::vector<AbcTriple> census_exact_c(uint64_t c, uint64_t memory_budget_bytes) {
    if (c < 3) throw DomainError("census_exact_c: c must be >= 3");
    if (c > 0xFFFFFFFFull) throw ResourceLimit("census_exact_c: c exceeds 32-bit sieve");
    auto sieve = arith::build_sieves(c, memory_budget_bytes);
    const uint64_t rc = sieve.radical_of(c);

    std::vector<std::vector<uint64_t>> found(omp_get_max_threads());
#pragma omp parallel for schedule(dynamic, 1 << 16)
    for (uint64_t a = 1; a <= c / 2; ++a) {
        const uint64_t b = c - a;
        const uint64_t ra = sieve.radical_of(a);
        if (ra * rc >= c) continue;
        const uint64_t rb = sieve.radical_of(b);
        if (ra * rb > c / rc) continue;          // ra*rb*rc >= c, avoiding overflow
        if (ra * rb * rc >= c) continue;
        if (std::gcd(a, c) != 1) continue;
        found[omp_get_thread_num()].push_back(a);
    }

    std::vector<uint64_t> as;
    for (auto& v : found) as.insert(as.end(), v.begin(), v.end());
    std::sort(as.begin(), as.end());

    std::vector<AbcTriple> out;
    for (uint64_t a : as)
        out.push_back(AbcTriple{Int(static_cast<unsigned long>(a)),
                                Int(static_cast<unsigned long>(c - a)),
                                Int(static_cast<unsigned long>(c))});
    return out;
}

std::vector<AbcTriple> congruence_filter(const std::vector<AbcTriple>& triples,
                                         const Int& modulus) {
    if (modulus < 1) throw DomainError("congruence_filter: modulus must be >= 1");
    std::vector<AbcTriple> out;
    for (const auto& t : triples)
        if (mpz_divisible_p(Int(t.a * t.b * t.c).get_mpz_t(), modulus.get_mpz_t()))
            out.push_back(t);
    return out;
}

}  // namespace abc::exhaustive
