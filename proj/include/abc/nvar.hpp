#pragma once

#include <vector>

#include "abc/triple.hpp"

namespace abc::nvar {

// The n-term zero-sum tuple built on an abc triple:
//   a_j = (2n-5)/(2j-1) C(n+j-4, 2j-2) a^(2j-1) (bc)^(n-j-2)   for 1 <= j <= n-2
//   a_{n-1} = b^(2n-5),  a_n = -c^(2n-5)
// Coefficients are verified integral and the sum is verified to vanish.
std::vector<Int> bb_tuple(const AbcTriple& t, unsigned long n);  // n >= 4

struct NvarReport {
    size_t n = 0;
    bool relatively_prime = false;
    Int radical;          // R(|a_1 ... a_n|)
    Int max_abs;
    double exponent_ratio;  // ln max|a_i| / ln R, compared against 2n-5
};

// Checks nonzero entries, gcd 1, zero sum, and that no proper nonempty subset
// sums to zero (exhaustive over subsets; n <= 20). Throws VanishingSubsum with
// a witness, or ZeroEntry.
NvarReport nvar_validate(const std::vector<Int>& tuple, const arith::FactorConfig& cfg = {});

}  // namespace abc::nvar
