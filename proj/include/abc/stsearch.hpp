#pragma once

#include <vector>

#include "abc/triple.hpp"

namespace abc::st {

// Friable-pigeonhole search: enumerate integers up to X supported on the
// first r odd primes, bucket them modulo 2^k, and turn every in-bucket pair
// u > v into the candidate ((u-v)/g, v/g, u/g) with g = gcd(u, v).
// Returns the abc hits among the candidates.
struct SearchResult {
    std::vector<TripleReport> hits;
    size_t friable_count = 0;
    size_t pair_count = 0;
};
SearchResult st_search(unsigned r, const Int& X, unsigned k,
                       const arith::FactorConfig& cfg = {});

// c > R(abc) exp((4-delta) sqrt(ln R)/lnln R), evaluated as printed.
bool st_quality_check(const AbcTriple& t, double delta, const arith::FactorConfig& cfg = {});

// #{ n < 2M : R(n) <= M^alpha }, by sieve.
uint64_t count_radical_bounded(uint64_t M, double alpha,
                               uint64_t memory_budget_bytes = 2'000'000'000);

// (ln X)^r / (r! prod ln p_i): volume of the friable-exponent simplex,
// an estimate of the friable count that sharpens as X grows.
double simplex_volume_estimate(const std::vector<Int>& primes, const Int& X);

}  // namespace abc::st
