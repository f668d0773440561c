#pragma once

#include <vector>

#include "abc/triple.hpp"

namespace abc::lll {

using IntVector = std::vector<Int>;

struct IntegerLatticeBasis {
    std::vector<IntVector> rows;
};

struct LLLResult {
    IntegerLatticeBasis basis;
    std::vector<IntVector> transform;  // unimodular U with out = U * in
};

// Basis of the full integer kernel of u*r + v*s + w*t = 0, built from
// extended-gcd solutions. Requires r, s, t >= 1 with gcd(r, s, t) = 1.
IntegerLatticeBasis kernel_basis(const Int& r, const Int& s, const Int& t);

// Classic LLL with delta = 3/4 and exact rational Gram-Schmidt.
LLLResult lll_reduce(const IntegerLatticeBasis& input);

// Gram determinant, invariant under unimodular changes of basis.
Int gram_determinant(const IntegerLatticeBasis& b);

// Reduce the kernel basis of (r, s, t) and scan combinations s1*b1 + s2*b2
// with |s1|, |s2| <= window; each combination with all components nonzero
// gives three terms |u|r, |v|s, |w|t of which two sum to the third. Emits the
// gcd-normalized abc hits among them.
std::vector<TripleReport> lll_candidates(const Int& r, const Int& s, const Int& t, long window,
                                         const arith::FactorConfig& cfg = {});

}  // namespace abc::lll
