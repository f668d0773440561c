#pragma once

#include "abc/triple.hpp"

namespace abc::families {

// Generation caps, in bits per constructed integer.
struct Budget {
    size_t bits = 100'000'000;
};

// p odd prime: p^2 | 2^(p(p-1)) - 1 (Euler's theorem at modulus p^2).
bool verify_lemma_euler(unsigned long p);  // throws NotOddPrime

// 7^(n+1) | 8^(7^n) - 1.
bool verify_lemma_787(unsigned long n);

// 2^(n+2) | 3^(2^n) - 1 for n >= 1.
bool verify_lemma_js(unsigned long n);

// With L = lcm[1..n], t = floor(log2 n), P = prod of odd primes <= n:
// P L / 2^t divides 2^L - 1. Checked modularly, so n can be large.
bool verify_lemma_lcm(unsigned long n);

// (12k^2+6k+1)^2 | (6k+2)^(6k+2) - (6k+1)^(6k+1).
bool verify_lemma_mod6(unsigned long k);

// (1, 2^(p(p-1)) - 1, 2^(p(p-1))): R(abc) < 2c/p and < 2 sqrt(ln 2) c/sqrt(ln c).
TripleReport family_granville(unsigned long p, const arith::FactorConfig& cfg = {},
                              const Budget& budget = {});

// (1, 8^(7^n) - 1, 8^(7^n)): R(abc) < 2c/7^n and < 2 ln8 c/ln c.
TripleReport family_bmt(unsigned long n, const arith::FactorConfig& cfg = {},
                        const Budget& budget = {});

// (1, 3^(2^n) - 1, 3^(2^n)): R(abc) < 3c/2^(n+1) = (3 ln3/2) c/ln c.
TripleReport family_js(unsigned long n, const arith::FactorConfig& cfg = {},
                       const Budget& budget = {});

// (1, q^(p^n) - 1, q^(p^n)) for p | q-1; checks v_p(b) >= n+1 exactly.
TripleReport family_qpn(unsigned long q, unsigned long p, unsigned long n,
                        const arith::FactorConfig& cfg = {}, const Budget& budget = {});

// (1, 2^L - 1, 2^L) with L = lcm[1..n]: R(abc) <= 2 * 2^t (2^L-1)/L < 2 ln2 n c/ln c.
TripleReport family_lcm(unsigned long n, const arith::FactorConfig& cfg = {},
                        const Budget& budget = {});

// k odd >= 7, n = 2^k: ((n-1)^(n-1), n^n - (n-1)^(n-1), n^n) with
// ((n^2-n+1)/3)^2 | b, R(abc) < 6c/n and < 8c lnln c/ln c.
TripleReport family_mod6(unsigned long k, const arith::FactorConfig& cfg = {},
                         const Budget& budget = {});

// Structural checks for n = 8^(7^j) (the k = 3*7^j member of the mod-6 family),
// all computed modularly: cheap even when the triple itself is enormous.
struct PomeranceStructure {
    Int n;                    // 8^(7^j)
    Int q_divisor;            // (n^2 - n + 1)/3
    bool n_mod6_is_2;
    bool q_integral;
    bool seven_power_divides_nm1;  // 7^(j+1) | n - 1
    bool q_square_divides_b;       // Q^2 | n^n - (n-1)^(n-1)
    bool all() const {
        return n_mod6_is_2 && q_integral && seven_power_divides_nm1 && q_square_divides_b;
    }
};
PomeranceStructure pomerance_structure(unsigned long j);

// Materializes the j-th member; R(abc) < 6c/(7^j n) = 6 ln8 c/ln c, bound-verified.
TripleReport family_pomerance(unsigned long j, const arith::FactorConfig& cfg = {},
                              const Budget& budget = {});

}  // namespace abc::families
