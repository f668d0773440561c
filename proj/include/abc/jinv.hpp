#pragma once

#include <array>
#include <optional>
#include <vector>

#include "abc/triple.hpp"

namespace abc::jinv {

// The thirteen negative discriminants of class number one.
inline constexpr std::array<unsigned, 13> kDiscriminants = {3,  4,  7,  8,  11, 12, 16,
                                                            19, 27, 28, 43, 67, 163};

struct SingularModulus {
    unsigned d = 0;                // discriminant is -d
    std::string tau;               // "i sqrt(d)/2" or "(1 + i sqrt(d))/2"
    Int j_value;                   // j(tau), rounded with certified margin < 0.5
    std::optional<Int> cube_root;  // present iff j_value is a perfect cube
    unsigned precision_digits = 0;
};

// j(tau) for tau = i sqrt(d)/2 (d = 0 mod 4) or (1 + i sqrt(d))/2 (d = 3 mod 4),
// via the real q-series j = E4^3/Delta with E4 = 1 + 240 sum sigma3(n) q^n and
// Delta = q prod (1-q^n)^24, q = +-exp(-pi sqrt(d)).
SingularModulus compute_j(unsigned d, unsigned precision_digits);  // throws PrecisionInsufficient

std::vector<SingularModulus> compute_all(unsigned precision_digits);

// abc candidates from the differences: for each pair with both values nonzero,
// the two same-signed members of {|j1|, |j2|, |j1-j2|} sum to the third.
std::vector<TripleReport> jinv_pairs(unsigned precision_digits,
                                     const arith::FactorConfig& cfg = {});

}  // namespace abc::jinv
