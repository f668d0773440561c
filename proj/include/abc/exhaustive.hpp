#pragma once

#include <cstdint>
#include <vector>

#include "abc/triple.hpp"

namespace abc::exhaustive {

// Every abc hit with c <= N: a <= b, a + b = c, gcd(a,b) = 1, R(abc) < c.
// Direct double loop over (a, c); the serial reference the radical-sorted
// search is validated against.
std::vector<AbcTriple> oracle_enumerate(uint32_t N,
                                        uint64_t memory_budget_bytes = 2'000'000'000);

struct SearchStats {
    uint64_t raw_emissions = 0;  // hits emitted before deduplication
};

// Radical-sorted search: enumerate coprime squarefree pairs (r, s) with
// r <= s, s^2 < N, r s^2 < N; pair up x with R(x)=r against y with R(y)=s and
// test z = x+y and z = |x-y|. Parallelized over s. Returns the same set as
// oracle_enumerate(N).
std::vector<AbcTriple> abchome_search(uint32_t N, SearchStats* stats = nullptr,
                                      uint64_t memory_budget_bytes = 2'000'000'000);

// All abc hits with c exactly equal to the given value. Parallel over a.
std::vector<AbcTriple> census_exact_c(uint64_t c,
                                      uint64_t memory_budget_bytes = 2'000'000'000);

// Keeps the triples whose product abc the modulus divides.
std::vector<AbcTriple> congruence_filter(const std::vector<AbcTriple>& triples,
                                         const Int& modulus);

}  // namespace abc::exhaustive
