#pragma once

#include <utility>
#include <vector>

#include "abc/triple.hpp"

namespace abc::cf {

// Exact state for the continued fraction of theta = m^(1/k): the current
// tail value is (p theta + q)/(r theta + s), with ps - qr never zero.
struct CFState {
    Int m;
    unsigned long k = 2;
    Int p = 1, q = 0, r = 0, s = 1;
    std::vector<Int> partial_quotients;
    std::vector<std::pair<Int, Int>> convergents;  // (numerator, denominator)
};

// Partial quotients of m^(1/k) to the given depth, with no floating point:
// floors are found by binary search with exact sign comparisons of
// A*theta vs B resolved through A^k m vs B^k.
CFState cf_expand(const Int& m, unsigned long k, size_t depth);  // throws PerfectPower

// For every index j whose following quotient a_{j+1} is at least `threshold`,
// take the convergent p/q at j and test (|m q^k - p^k|, m q^k, p^k) after
// dividing out the common gcd.
std::vector<TripleReport> cf_candidates(const CFState& st, const Int& threshold,
                                        const arith::FactorConfig& cfg = {});

}  // namespace abc::cf
