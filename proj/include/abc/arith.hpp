#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "abc/errors.hpp"
#include "abc/numbers.hpp"

namespace abc::arith {

struct FactorConfig {
    unsigned long trial_limit = 1'000'000;    // trial division by primes up to here
    unsigned long rho_iterations = 4'000'000; // Brent iteration budget per number
    size_t attempt_bits_cap = 65'536;         // above this, skip factoring entirely
};

// Canonical prime factorization: primes strictly increasing, exponents >= 1.
struct Factorization {
    std::vector<std::pair<Int, unsigned long>> factors;

    Int value() const;
    Int radical() const;
    unsigned long omega() const { return factors.size(); }
    unsigned long big_omega() const;
};

// value = (product over found) * cofactor; cofactor is 1 (complete) or a
// composite that resisted splitting within budget.
struct PartialFactorization {
    Factorization found;
    Int cofactor = 1;

    bool complete() const { return cofactor == 1; }
    // radical(found) * cofactor; a proven upper bound on the true radical.
    Int radical_upper_bound() const { return found.radical() * cofactor; }
};

// Deterministic Miller-Rabin bases below 2^64, 64 fixed prime bases above.
bool is_probable_prime(const Int& n);

PartialFactorization try_factorize(const Int& n, const FactorConfig& cfg = {});
Factorization factorize(const Int& n, const FactorConfig& cfg = {});  // throws FactorizationIncomplete

Int radical(const Int& n, const FactorConfig& cfg = {});
unsigned long omega(const Int& n, const FactorConfig& cfg = {});
unsigned long big_omega(const Int& n, const FactorConfig& cfg = {});

// lcm[1..n] = prod over primes p <= n of p^floor(log_p n)
Int lcm_range(unsigned long n);

Int modpow(const Int& base, const Int& exponent, const Int& modulus);  // modulus >= 2

// Exact p-adic valuation of n.
unsigned long valuation(const Int& n, const Int& p);

// floor(n^(1/k)) and whether the root is exact.
std::pair<Int, bool> integer_root(const Int& n, unsigned long k);

std::vector<uint32_t> primes_up_to(uint32_t n);

// Smallest-prime-factor table plus squarefree flags, immutable once built.
struct SieveTables {
    uint64_t limit = 0;
    std::vector<uint32_t> smallest_prime_factor;  // index 0..limit; spf[p]==p iff prime
    std::vector<bool> squarefree;                 // index 0..limit

    bool is_prime(uint64_t n) const { return n >= 2 && smallest_prime_factor[n] == n; }
    uint64_t radical_of(uint64_t n) const;  // spf walk, 1 <= n <= limit
    Factorization factorize(uint64_t n) const;
};

SieveTables build_sieves(uint64_t limit, uint64_t memory_budget_bytes = 2'000'000'000);

// All n <= bound with radical exactly r (r squarefree). Ascending.
std::vector<Int> numbers_with_radical(const Int& r, const Int& bound, const FactorConfig& cfg = {});

// All n <= bound whose prime support is contained in `primes` (includes 1). Ascending.
std::vector<Int> friable_numbers(const std::vector<Int>& primes, const Int& bound);

}  // namespace abc::arith
