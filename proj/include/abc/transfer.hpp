#pragma once

#include <string>
#include <vector>

#include "abc/triple.hpp"

namespace abc::transfer {

// (a, b, c) -> sorted {a^2, c(b-a), b^2}; requires a < b. When the input
// quality exceeds 1 the output quality exceeds 2q/(q+1), and the function
// checks that rather than assuming it.
TripleReport transfer_square(const AbcTriple& t, const arith::FactorConfig& cfg = {});

// The five catalogued additive identities in a, b, c = a+b. Each evaluates
// two positive summands and their total; terms must come out positive
// (the last two need b > a).
enum class IdentityTag {
    square_diff,    // (b-a)^2 + 4ab = c^2
    cube_sum,       // a^3 + b^3 = c(b^2 - ab + a^2)
    cubic_split,    // a^2(a+3b) + b^2(3a+b) = c^3
    quartic_split,  // a^3(a+2b) + c^3(b-a) = b^3(2a+b)
    quintic_split,  // 27c^5(b-a) + a^3(3a+5b)^2(3a+2b) = b^3(5a+3b)^2(2a+3b)
};

const std::vector<IdentityTag>& identity_catalog();
std::string identity_name(IdentityTag tag);

TripleReport transfer_identity(const AbcTriple& t, IdentityTag tag,
                               const arith::FactorConfig& cfg = {});

// Splitting (a+b)^n at term k:
//   a^(n-k) (sum_{j<=k} C(n,j) a^(k-j) b^j) + b^(k+1) (sum_{j<=n-k-1} C(n,j) a^j b^(n-k-1-j)) = c^n
// The equality is verified exactly before the normalized triple is reported.
TripleReport transfer_binomial(const AbcTriple& t, unsigned long n, unsigned long k,
                               const arith::FactorConfig& cfg = {});

// One step of the iterated family c_{n+1} = c_n^4 - 4c_n^3 + 4c_n^2, c_0 = 9.
struct FamilyStep {
    size_t index = 0;
    Int c;
    Int radical_bound;    // certified upper bound on R((c-1)c), no factoring needed
    double ratio_floor;   // c / radical_bound, provably >= 3 * 2^(n-1)
    TripleReport report;  // exact when (c-1)c factors within budget, else bound-verified
};

// First `count` members (1, c_n - 1, c_n). Checks the radical-ratio growth
// c_n / R((c_n-1)c_n) >= 3*2^(n-1) and the quality floor 1 + lnln c/(2 ln c)
// at every step, via the certified bound when exact factorization is out of
// reach. digit_budget caps the decimal size of c_n.
std::vector<FamilyStep> double_transfer_family(size_t count, const arith::FactorConfig& cfg = {},
                                               size_t digit_budget = 5000);

}  // namespace abc::transfer
